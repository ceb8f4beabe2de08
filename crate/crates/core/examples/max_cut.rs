//! Max cut by local search on a linear sample versus exhaustive search.

use linsample::algorithms::{local_search_maxcut, sparsify_and_solve, Problem, SolveConfig};
use linsample::exact::exact_maxcut;
use linsample::graph::{DenseWeights, WeightedGraph};
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(14, 2, 8)?;
    let opt = exact_maxcut(&DenseWeights::from_instance(&instance))?;
    let full = local_search_maxcut(&WeightedGraph::complete_from(&instance), &mut stream_rng(0, 1), 4)?;
    println!(
        "exhaustive {:.4}, local search on all pairs {:.4}",
        opt.value, full.value
    );

    let ledger = QueryLedger::new();
    let r = sparsify_and_solve(
        &instance,
        Problem::MaxCut,
        &SolveConfig::new(0.2),
        &mut stream_rng(0, 0),
        &ledger,
    )?;
    println!(
        "on a sample: {:.4} in the full graph, {:.4} in the sample, {} sample queries",
        r.value_in_g, r.value_in_h, r.queries_used
    );
    Ok(())
}
