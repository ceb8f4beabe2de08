//! Draw a linear sample at a fixed scale: every pair is kept with
//! probability proportional to its weight.

use linsample::decompose::DecompositionConstants;
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;
use linsample::sampler::build_h_alpha;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::make_appendix_star(40)?;
    let alpha = 0.05;
    let ledger = QueryLedger::new();
    let h = build_h_alpha(
        &instance,
        alpha,
        &DecompositionConstants::GUARANTEED,
        &mut stream_rng(3, 0),
        &ledger,
    )?;
    let spokes = h.edges.iter().filter(|e| e.u == 0).count();
    println!(
        "{} edges kept out of {}, {} of them spokes",
        h.edges.len(),
        instance.num_pairs(),
        spokes
    );
    println!("queries: {} (all pairs: {})", h.queries_used, instance.num_pairs());
    // spokes weigh 21, so alpha * w > 1 and they are always kept at weight alpha * w
    if let Some(e) = h.edges.iter().find(|e| e.u == 0) {
        println!("spoke {}-{} stored with weight {}", e.u, e.v, e.weight);
    }
    Ok(())
}
