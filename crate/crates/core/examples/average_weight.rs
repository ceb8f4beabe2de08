//! Estimate the average pairwise distance with fewer queries than there
//! are pairs, and compare against the full sum. The decomposition spends a
//! few thousand queries per vertex, so the saving only shows once n is
//! well into the thousands.

use linsample::decompose::DecompositionConstants;
use linsample::exact::exact_average;
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;
use linsample::sampler::refine_average_estimate;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(12_000, 3, 2)?;
    let truth = exact_average(&instance)?;
    for seed in 0..2 {
        let ledger = QueryLedger::new();
        let est = refine_average_estimate(
            &instance,
            0.3,
            &DecompositionConstants::GUARANTEED,
            &mut stream_rng(seed, 0),
            &ledger,
        )?;
        println!(
            "seed {seed}: estimate {:.5} vs {:.5} (error {:.2}%), {} queries of {}",
            est.value,
            truth,
            100.0 * (est.value - truth).abs() / truth,
            ledger.count(),
            instance.num_pairs()
        );
    }
    Ok(())
}
