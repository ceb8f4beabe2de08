//! Queries needed to build a sample of weight `n ln n` as `n` doubles.

use linsample::decompose::DecompositionConstants;
use linsample::experiments::{cmd_bench_queries, BenchRequest, BetaRule, Family};

fn main() -> linsample::Result<()> {
    let report = cmd_bench_queries(&BenchRequest {
        family: Family::Uniform { dim: 2 },
        sizes: vec![256, 512, 1024],
        beta_rule: BetaRule::NLogN,
        seeds: 3,
        seed: 0,
        gamma: 4.0,
        constants: DecompositionConstants::with_c_sample(8.0),
    })?;
    for row in &report.rows {
        println!(
            "n = {:>5}: {:>9.0} queries, {:>9} pairs",
            row.n,
            row.mean_queries,
            row.n * (row.n - 1) / 2
        );
    }
    println!("growth per doubling: {:.2?}", report.ratios);
    Ok(())
}
