//! On the heavy star, uniform edge sampling loses the hub while linear
//! sampling keeps every spoke.

use linsample::decompose::DecompositionConstants;
use linsample::experiments::{cmd_appendix_demo, AppendixRequest};

fn main() -> linsample::Result<()> {
    let report = cmd_appendix_demo(&AppendixRequest {
        n: 100,
        p: 0.05,
        epsilon: 0.1,
        trials: 20,
        seed: 0,
        constants: DecompositionConstants::GUARANTEED,
    })?;
    let linear: Vec<f64> = report.trials.iter().map(|t| t.value_in_g).collect();
    let uniform: Vec<f64> = report
        .trials
        .iter()
        .filter_map(|t| t.extra.get("uniform_value_in_g").copied())
        .collect();
    println!("optimum 99");
    println!("uniform sample densities: {:.1?}", uniform);
    println!("linear sample densities:  {:.1?}", linear);
    for a in &report.assertions {
        println!("[{}] {}", if a.passed { "ok" } else { "FAILED" }, a.description);
    }
    Ok(())
}
