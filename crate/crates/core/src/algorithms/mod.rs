//! Solvers for the sparsified graphs and the end-to-end pipelines.

mod densest;
mod hypermatching;
mod maxcut;
pub mod pipeline;

use serde::{Deserialize, Serialize};

use crate::oracle::VertexId;

pub use densest::greedy_densest;
pub use hypermatching::greedy_hypermatching;
pub use maxcut::{is_local_optimum, local_search_maxcut};
pub use pipeline::{beta_for, sparsify_and_solve, PipelineResult, Problem, Solution, SolveConfig};

/// A vertex set and its density: internal weight over the number of vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgraphSelection {
    pub vertices: Vec<VertexId>,
    pub density: f64,
}

/// Two-sided partition; `side[v]` says which side `v` is on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutAssignment {
    pub side: Vec<bool>,
    pub value: f64,
}

impl CutAssignment {
    pub fn sides(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        let (a, b): (Vec<_>, Vec<_>) = (0..self.side.len()).partition(|&v| !self.side[v]);
        (a, b)
    }
}

/// Partition into groups of equal size `k`, valued by total intra-group weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypermatchingPartition {
    pub groups: Vec<Vec<VertexId>>,
    pub value: f64,
}

/// Sort members and order groups by their smallest member.
pub(crate) fn canonical_groups(mut groups: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    for g in &mut groups {
        g.sort_unstable();
    }
    groups.sort_unstable();
    groups
}
