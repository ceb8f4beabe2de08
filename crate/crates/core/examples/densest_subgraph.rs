//! Densest subgraph by greedy peeling on a linear sample, scored on the
//! full instance and against brute force.

use linsample::algorithms::{sparsify_and_solve, Problem, Solution, SolveConfig};
use linsample::exact::exact_densest;
use linsample::graph::DenseWeights;
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(16, 2, 4)?;
    let opt = exact_densest(&DenseWeights::from_instance(&instance))?;
    println!("optimum density {:.4} on {:?}", opt.density, opt.vertices);
    let config = SolveConfig::new(0.3);
    for seed in 0..3 {
        let ledger = QueryLedger::new();
        let r = sparsify_and_solve(&instance, Problem::Densest, &config, &mut stream_rng(seed, 0), &ledger)?;
        if let Solution::Densest(s) = &r.solution {
            println!(
                "seed {seed}: density {:.4} ({:.0}% of optimum) on {} vertices, sample {} edges",
                r.value_in_g,
                100.0 * r.value_in_g / opt.density,
                s.vertices.len(),
                r.sample_edges
            );
        }
    }
    Ok(())
}
