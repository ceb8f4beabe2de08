//! Ask for a sample of a target total weight and save it as CSV plus a
//! JSON sidecar.

use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;
use linsample::sampler::{build_h_beta, sidecar_path, SampledGraph, SamplerConfig};

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(400, 2, 5)?;
    let config = SamplerConfig::new(2000.0);
    let ledger = QueryLedger::new();
    let h = build_h_beta(&instance, &config, &mut stream_rng(9, 0), &ledger)?;
    println!(
        "target 2000, got total weight {:.1} over {} edges using {} queries",
        h.total_weight(),
        h.edges.len(),
        h.queries_used
    );

    let dir = std::env::temp_dir().join("linsample-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("sample.csv");
    h.save(&path)?;
    let back = SampledGraph::load(&path)?;
    println!("saved to {} and {}", path.display(), sidecar_path(&path).display());
    assert_eq!(back, h);
    Ok(())
}
