//! Split a point set into weight levels and print the peeled sets.

use linsample::decompose::{build_decomposition, DecompositionConstants};
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(300, 2, 11)?;
    let ledger = QueryLedger::new();
    let mut rng = stream_rng(1, 0);
    let d = build_decomposition(&instance, 5, &DecompositionConstants::GUARANTEED, &mut rng, &ledger)?;
    println!("global bound {:.4}, {} queries", d.bound, d.queries_used);
    for (i, level) in d.levels.iter().enumerate() {
        println!(
            "level {}: bound {:.4}, {} vertices, {} peeled",
            i + 1,
            level.bound,
            level.vertices.len(),
            level.nu.len()
        );
    }
    println!(
        "residual: {} vertices below {:.4}",
        d.residual.len(),
        d.residual_bound()
    );
    Ok(())
}
