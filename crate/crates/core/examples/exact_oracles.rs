//! Brute-force optima on the hidden-star and heavy-star instances.

use linsample::exact::{exact_average, exact_densest, exact_hypermatching, exact_maxcut};
use linsample::graph::DenseWeights;
use linsample::oracle::MetricInstance;

fn main() -> linsample::Result<()> {
    let (_, g2) = MetricInstance::make_hardness_pair(5, 0)?;
    let w = DenseWeights::from_instance(&g2);
    println!("hidden star, n = 5");
    println!("  average  {}", exact_average(&g2)?);
    println!("  densest  {}", exact_densest(&w)?.density);
    println!("  max cut  {}", exact_maxcut(&w)?.value);

    let (_, g2) = MetricInstance::make_hardness_pair(6, 0)?;
    println!(
        "hidden star, n = 6, pairs: {}",
        exact_hypermatching(&DenseWeights::from_instance(&g2), 2)?.value
    );

    let star = MetricInstance::make_appendix_star(10)?;
    let best = exact_densest(&DenseWeights::from_instance(&star))?;
    println!("heavy star, n = 10: densest {} on {:?}", best.density, best.vertices);
    Ok(())
}
