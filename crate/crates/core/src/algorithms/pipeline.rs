//! Sparsify-then-solve: pick a sample size for the problem and accuracy,
//! draw one linear sample, solve on it and score the answer on the full
//! instance.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    greedy_densest, greedy_hypermatching, local_search_maxcut, CutAssignment, HypermatchingPartition, SubgraphSelection,
};
use crate::decompose::DecompositionConstants;
use crate::error::{invalid, Error, Result};
use crate::graph::{DenseWeights, WeightedGraph};
use crate::oracle::{pairs, MetricInstance, QueryLedger, VertexId};
use crate::sampler::{build_h_beta, check_epsilon, estimate_average_from_h, SamplerConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Average,
    Densest,
    MaxCut,
    /// Groups of the given size.
    Hypermatching(usize),
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Average => write!(f, "avg"),
            Self::Densest => write!(f, "densest"),
            Self::MaxCut => write!(f, "maxcut"),
            Self::Hypermatching(k) => write!(f, "hypermatching:{k}"),
        }
    }
}

impl FromStr for Problem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "avg" | "average" => Ok(Self::Average),
            "densest" => Ok(Self::Densest),
            "maxcut" => Ok(Self::MaxCut),
            _ => {
                let k = s
                    .strip_prefix("hypermatching:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown problem `{s}`")))?;
                Ok(Self::Hypermatching(k))
            }
        }
    }
}

/// Sample size that makes a solution on the sample `(phi - 2 eps)`-good on
/// the full instance (natural logarithms).
pub fn beta_for(problem: Problem, n: usize, epsilon: f64) -> f64 {
    let nf = n as f64;
    let e2 = epsilon * epsilon;
    match problem {
        Problem::Average => 3.0 * (2.0 * nf).ln() / e2,
        Problem::Densest => 9.0 * nf.ln() / e2 * nf,
        Problem::Hypermatching(k) => 6.0 * nf.ln() / e2 * nf * nf / (k as f64 - 1.0),
        Problem::MaxCut => 18.0 * nf.ln() / e2 * nf,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub epsilon: f64,
    pub gamma: f64,
    pub constants: DecompositionConstants,
    /// Replaces the tabulated sample size; voids the accuracy guarantee.
    pub beta_override: Option<f64>,
    /// Random restarts for max cut local search.
    pub restarts: usize,
}

impl SolveConfig {
    pub fn new(epsilon: f64) -> Self {
        Self {
            epsilon,
            gamma: 2.0,
            constants: DecompositionConstants::GUARANTEED,
            beta_override: None,
            restarts: 4,
        }
    }

    pub fn with_constants(mut self, constants: DecompositionConstants) -> Self {
        self.constants = constants;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta_override = Some(beta);
        self
    }

    pub fn guarantee_void(&self) -> bool {
        self.beta_override.is_some() || !self.constants.is_guaranteed()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Solution {
    Average { estimate: f64 },
    Densest(SubgraphSelection),
    MaxCut(CutAssignment),
    Hypermatching(HypermatchingPartition),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineResult {
    pub solution: Solution,
    /// Objective of the solution on the full instance. For the average
    /// problem this is the estimate itself.
    pub value_in_g: f64,
    /// Objective on the sample, with the sampled weights (not rescaled).
    pub value_in_h: f64,
    pub beta_used: f64,
    pub alpha: f64,
    pub sample_edges: usize,
    /// Queries made to build the sample.
    pub queries_used: u64,
    /// Queries made to score the solution on the full instance.
    pub evaluation_queries: u64,
}

/// Build a linear sample sized for `problem`, solve on it and score on `instance`.
///
/// Sample construction is charged to `ledger`; scoring uses a separate
/// ledger whose count is returned as `evaluation_queries`.
pub fn sparsify_and_solve<R: Rng + ?Sized>(
    instance: &MetricInstance,
    problem: Problem,
    config: &SolveConfig,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<PipelineResult> {
    check_epsilon(config.epsilon)?;
    let n = instance.n();
    if let Problem::Hypermatching(k) = problem {
        if k < 2 || !n.is_multiple_of(k) {
            return Err(invalid(format!("group size {k} must be at least 2 and divide n = {n}")));
        }
    }
    let beta = config
        .beta_override
        .unwrap_or_else(|| beta_for(problem, n, config.epsilon));
    let sampler = SamplerConfig::new(beta)
        .with_gamma(config.gamma)
        .with_constants(config.constants);
    let before = ledger.count();
    let h = build_h_beta(instance, &sampler, rng, ledger)?;
    let queries_used = ledger.count() - before;
    let graph = h.to_graph();
    let eval = QueryLedger::new();

    let (solution, value_in_h, value_in_g) = match problem {
        Problem::Average => {
            let estimate = estimate_average_from_h(&h);
            (Solution::Average { estimate }, h.total_weight(), estimate)
        }
        Problem::Densest => {
            let s = greedy_densest(&graph)?;
            let in_g = density_in(instance, &s.vertices, &eval)?;
            let in_h = s.density;
            (Solution::Densest(SubgraphSelection { density: in_g, ..s }), in_h, in_g)
        }
        Problem::MaxCut => {
            let cut = local_search_maxcut(&graph, rng, config.restarts)?;
            let in_g = cut_in(instance, &cut.side, &eval)?;
            let in_h = cut.value;
            (Solution::MaxCut(CutAssignment { value: in_g, ..cut }), in_h, in_g)
        }
        Problem::Hypermatching(k) => {
            let m = greedy_hypermatching(&graph, k, rng)?;
            let in_g = partition_in(instance, &m.groups, &eval)?;
            let in_h = m.value;
            (
                Solution::Hypermatching(HypermatchingPartition { value: in_g, ..m }),
                in_h,
                in_g,
            )
        }
    };

    Ok(PipelineResult {
        solution,
        value_in_g,
        value_in_h,
        beta_used: beta,
        alpha: h.alpha,
        sample_edges: h.edges.len(),
        queries_used,
        evaluation_queries: eval.count(),
    })
}

fn internal_weight(instance: &MetricInstance, vertices: &[VertexId], ledger: &QueryLedger) -> Result<f64> {
    let mut total = 0.0;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            total += instance.weight_query(u, v, ledger)?;
        }
    }
    Ok(total)
}

/// Density of `vertices` on the instance, one query per internal pair.
pub fn density_in(instance: &MetricInstance, vertices: &[VertexId], ledger: &QueryLedger) -> Result<f64> {
    if vertices.len() < 2 {
        return Ok(0.0);
    }
    Ok(internal_weight(instance, vertices, ledger)? / vertices.len() as f64)
}

/// Cut value on the instance, one query per crossing pair.
pub fn cut_in(instance: &MetricInstance, side: &[bool], ledger: &QueryLedger) -> Result<f64> {
    let (a, b): (Vec<_>, Vec<_>) = (0..side.len()).partition(|&v| !side[v]);
    let mut total = 0.0;
    for &u in &a {
        for &v in &b {
            total += instance.weight_query(u, v, ledger)?;
        }
    }
    Ok(total)
}

/// Total intra-group weight on the instance.
pub fn partition_in(instance: &MetricInstance, groups: &[Vec<VertexId>], ledger: &QueryLedger) -> Result<f64> {
    groups.iter().map(|g| internal_weight(instance, g, ledger)).sum()
}

/// Value of a fixed structure on a sample, rescaled by `1/alpha` so it
/// estimates the same structure's value on the full instance.
pub fn rescaled_density(sample: &WeightedGraph, alpha: f64, vertices: &[VertexId]) -> f64 {
    DenseWeights::from_graph(sample).density(vertices) / alpha
}

/// Mean sampled weight per pair, rescaled; equals the average estimate.
pub fn rescaled_average(sample: &WeightedGraph, alpha: f64) -> f64 {
    sample.total_weight() / (alpha * pairs(sample.n) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_average, exact_densest, exact_maxcut};
    use crate::rng::stream_rng;

    #[test]
    fn beta_table() {
        let n = 100;
        let ln = (100f64).ln();
        assert!((beta_for(Problem::Average, n, 0.5) - 3.0 * (200f64).ln() / 0.25).abs() < 1e-9);
        assert!((beta_for(Problem::Densest, n, 0.5) - 9.0 * ln / 0.25 * 100.0).abs() < 1e-9);
        assert!((beta_for(Problem::MaxCut, n, 0.5) - 18.0 * ln / 0.25 * 100.0).abs() < 1e-9);
        assert!((beta_for(Problem::Hypermatching(3), n, 0.5) - 6.0 * ln / 0.25 * 1e4 / 2.0).abs() < 1e-6);
    }

    #[test]
    fn problem_names_round_trip() {
        for p in [
            Problem::Average,
            Problem::Densest,
            Problem::MaxCut,
            Problem::Hypermatching(3),
        ] {
            assert_eq!(p.to_string().parse::<Problem>().unwrap(), p);
        }
        assert!("hypermatching:x".parse::<Problem>().is_err());
    }

    #[test]
    fn average_on_uniform_points() {
        let inst = MetricInstance::uniform_points(120, 2, 8).unwrap();
        let truth = exact_average(&inst).unwrap();
        let mut good = 0;
        for seed in 0..20 {
            let r = sparsify_and_solve(
                &inst,
                Problem::Average,
                &SolveConfig::new(0.2),
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            assert_eq!(r.evaluation_queries, 0);
            if (r.value_in_g - truth).abs() <= 0.2 * truth {
                good += 1;
            }
        }
        assert!(good >= 18, "{good}");
    }

    #[test]
    fn densest_and_maxcut_are_scored_on_g() {
        let inst = MetricInstance::uniform_points(12, 2, 2).unwrap();
        let w = DenseWeights::from_instance(&inst);
        let opt_d = exact_densest(&w).unwrap().density;
        let opt_c = exact_maxcut(&w).unwrap().value;
        let ledger = QueryLedger::new();
        let d = sparsify_and_solve(
            &inst,
            Problem::Densest,
            &SolveConfig::new(0.3),
            &mut stream_rng(1, 0),
            &ledger,
        )
        .unwrap();
        assert_eq!(d.queries_used, ledger.count());
        let Solution::Densest(sel) = &d.solution else { panic!() };
        assert!((w.density(&sel.vertices) - d.value_in_g).abs() < 1e-9);
        assert_eq!(d.evaluation_queries, pairs(sel.vertices.len()));
        assert!(d.value_in_g <= opt_d + 1e-9 && d.value_in_g >= 0.4 * opt_d);

        let c = sparsify_and_solve(
            &inst,
            Problem::MaxCut,
            &SolveConfig::new(0.2),
            &mut stream_rng(1, 0),
            &QueryLedger::new(),
        )
        .unwrap();
        let Solution::MaxCut(cut) = &c.solution else { panic!() };
        assert!((w.cut_value(&cut.side) - c.value_in_g).abs() < 1e-9);
        assert!(c.value_in_g <= opt_c + 1e-9 && c.value_in_g >= 0.1 * opt_c);
    }

    #[test]
    fn hypermatching_checks_divisibility() {
        let inst = MetricInstance::line(10);
        let err = sparsify_and_solve(
            &inst,
            Problem::Hypermatching(3),
            &SolveConfig::new(0.5),
            &mut stream_rng(0, 0),
            &QueryLedger::new(),
        );
        assert!(err.is_err());
        let ok = sparsify_and_solve(
            &inst,
            Problem::Hypermatching(5),
            &SolveConfig::new(0.5),
            &mut stream_rng(0, 0),
            &QueryLedger::new(),
        )
        .unwrap();
        assert!(ok.value_in_g > 0.0);
    }

    #[test]
    fn zero_instance_is_refused() {
        let err = sparsify_and_solve(
            &MetricInstance::zero(10),
            Problem::Densest,
            &SolveConfig::new(0.5),
            &mut stream_rng(0, 0),
            &QueryLedger::new(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DegenerateZero));
    }

    #[test]
    fn guarantee_flag() {
        assert!(!SolveConfig::new(0.1).guarantee_void());
        assert!(SolveConfig::new(0.1).with_beta(5.0).guarantee_void());
        assert!(SolveConfig::new(0.1)
            .with_constants(DecompositionConstants::with_c_sample(4.0))
            .guarantee_void());
    }
}
