//! Partition vertices into groups of three maximizing the weight inside
//! groups.

use linsample::algorithms::{greedy_hypermatching, sparsify_and_solve, Problem, Solution, SolveConfig};
use linsample::exact::exact_hypermatching;
use linsample::graph::{DenseWeights, WeightedGraph};
use linsample::oracle::{MetricInstance, QueryLedger};
use linsample::rng::stream_rng;

fn main() -> linsample::Result<()> {
    let instance = MetricInstance::uniform_points(12, 2, 1)?;
    let k = 3;
    let opt = exact_hypermatching(&DenseWeights::from_instance(&instance), k)?;
    let greedy = greedy_hypermatching(&WeightedGraph::complete_from(&instance), k, &mut stream_rng(0, 1))?;
    println!("exact {:.4}: {:?}", opt.value, opt.groups);
    println!("greedy on all pairs {:.4}: {:?}", greedy.value, greedy.groups);

    let ledger = QueryLedger::new();
    let r = sparsify_and_solve(
        &instance,
        Problem::Hypermatching(k),
        &SolveConfig::new(0.5),
        &mut stream_rng(0, 0),
        &ledger,
    )?;
    if let Solution::Hypermatching(m) = &r.solution {
        println!("greedy on a sample {:.4}: {:?}", r.value_in_g, m.groups);
    }
    Ok(())
}
