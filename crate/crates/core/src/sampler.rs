//! Linear sampling: keep each edge with probability proportional to its
//! weight.
//!
//! For a scale `alpha`, an edge with `alpha * w > 1` is always kept with
//! weight `alpha * w`; any other edge is kept with probability `alpha * w`
//! and weight 1. The level decomposition makes this possible without looking
//! at every pair: heavy levels are scanned in full, light levels are
//! pre-sampled at rate `alpha * L_i` and thinned by `w / L_i`, and the
//! residual set is pre-sampled at a rate that depends only on `lambda` and
//! `n`.

use std::io::{Read, Write};
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::decompose::{decompose_with_bound, estimate_weight_upper_bound, Decomposition, DecompositionConstants};
use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, WeightedGraph};
use crate::oracle::{pairs, MetricInstance, QueryLedger, VertexId, Weight};
use crate::pairs::{for_each_selected, TriangleCursor};
use crate::rng::{fork, stream_rng};

/// Probabilities may overshoot 1 by this much from rounding before it is
/// treated as a broken decomposition.
const PROBABILITY_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledGraph {
    pub n: usize,
    pub alpha: f64,
    pub beta: Option<f64>,
    /// Sorted by `(u, v)` with `u < v`; every weight is at least 1.
    pub edges: Vec<Edge>,
    pub queries_used: u64,
    pub seed: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    n: usize,
    alpha: f64,
    beta: Option<f64>,
    queries_used: u64,
    seed: Option<u64>,
}

impl SampledGraph {
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn to_graph(&self) -> WeightedGraph {
        WeightedGraph::new(self.n, self.edges.clone())
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["u", "v", "weight"])?;
        for e in &self.edges {
            wtr.write_record([e.u.to_string(), e.v.to_string(), e.weight.to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn write_sidecar<W: Write>(&self, writer: W) -> Result<()> {
        let sidecar = Sidecar {
            n: self.n,
            alpha: self.alpha,
            beta: self.beta,
            queries_used: self.queries_used,
            seed: self.seed,
        };
        serde_json::to_writer_pretty(writer, &sidecar)?;
        Ok(())
    }

    pub fn read<R1: Read, R2: Read>(csv_reader: R1, sidecar_reader: R2) -> Result<Self> {
        let sidecar: Sidecar = serde_json::from_reader(sidecar_reader)?;
        let mut rdr = csv::Reader::from_reader(csv_reader);
        let mut edges = Vec::new();
        for record in rdr.deserialize() {
            let edge: Edge = record?;
            if edge.u >= sidecar.n || edge.v >= sidecar.n || edge.u == edge.v {
                return Err(Error::Parse(format!(
                    "edge ({},{}) is not a pair of 0..{}",
                    edge.u, edge.v, sidecar.n
                )));
            }
            edges.push(edge);
        }
        Ok(Self {
            n: sidecar.n,
            alpha: sidecar.alpha,
            beta: sidecar.beta,
            edges,
            queries_used: sidecar.queries_used,
            seed: sidecar.seed,
        })
    }

    /// Writes the edge list to `path` and the metadata next to it with a
    /// `.json` extension.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        self.write_csv(std::fs::File::create(path)?)?;
        self.write_sidecar(std::fs::File::create(sidecar_path(path))?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        Self::read(std::fs::File::open(path)?, std::fs::File::open(sidecar_path(path))?)
    }
}

pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    path.with_extension("json")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    /// Target expected total sampled weight.
    pub beta: f64,
    /// Slack on the target: `beta <= E[total] <= gamma * beta`. Must exceed 1.
    pub gamma: f64,
    pub constants: DecompositionConstants,
}

impl SamplerConfig {
    pub fn new(beta: f64) -> Self {
        Self {
            beta,
            gamma: 2.0,
            constants: DecompositionConstants::GUARANTEED,
        }
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn with_constants(mut self, constants: DecompositionConstants) -> Self {
        self.constants = constants;
        self
    }
}

/// `(1 / 2C(n,2)) * sum of all weights at the first ceil(1/lambda) vertices`.
/// Lies in `[avg / 2n, avg]` and costs `n - 1` queries per chosen vertex.
pub fn crude_average_estimate(instance: &MetricInstance, ledger: &QueryLedger) -> Result<Weight> {
    let n = instance.n();
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let s = ((1.0 / instance.lambda()).ceil() as usize).min(n);
    let mut sum = 0.0;
    for v in 0..s {
        for u in (0..n).filter(|&u| u != v) {
            sum += instance.weight_query(u, v, ledger)?;
        }
    }
    Ok(sum / (2.0 * pairs(n) as f64))
}

/// Linear sample at scale `alpha`.
pub fn build_h_alpha<R: Rng + ?Sized>(
    instance: &MetricInstance,
    alpha: f64,
    constants: &DecompositionConstants,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<SampledGraph> {
    check_alpha(alpha)?;
    if instance.n() < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let before = ledger.count();
    let bound = estimate_weight_upper_bound(instance, ledger)?;
    let t = levels_needed(instance, bound, alpha);
    let mut decomposition = decompose_with_bound(instance, bound, t, constants, rng, ledger)?;
    let mut h = sample_with(instance, &mut decomposition, alpha, rng, ledger)?;
    h.queries_used = ledger.count() - before;
    Ok(h)
}

/// Outcome of [`refine_average_estimate`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AverageEstimate {
    pub value: Weight,
    /// Set when the crude estimate was zero, which only happens when every
    /// weight is zero; `value` is then exactly 0.
    pub degenerate: bool,
    pub alpha: f64,
}

/// `(1 +- epsilon)` estimate of the average weight from one linear sample.
pub fn refine_average_estimate<R: Rng + ?Sized>(
    instance: &MetricInstance,
    epsilon: f64,
    constants: &DecompositionConstants,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<AverageEstimate> {
    Ok(refine(instance, epsilon, constants, rng, ledger)?.0)
}

struct Refined {
    bound: Weight,
    decomposition: Option<Decomposition>,
}

fn refine<R: Rng + ?Sized>(
    instance: &MetricInstance,
    epsilon: f64,
    constants: &DecompositionConstants,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<(AverageEstimate, Refined)> {
    check_epsilon(epsilon)?;
    let n = instance.n();
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let bound = estimate_weight_upper_bound(instance, ledger)?;
    let crude = crude_average_estimate(instance, ledger)?;
    if crude == 0.0 {
        let estimate = AverageEstimate {
            value: 0.0,
            degenerate: true,
            alpha: 0.0,
        };
        let refined = Refined {
            bound,
            decomposition: None,
        };
        return Ok((estimate, refined));
    }
    let alpha = 3.0 * (2.0 * n as f64).ln() / (epsilon * epsilon * pairs(n) as f64 * crude);
    let t = levels_needed(instance, bound, alpha);
    let mut decomposition = decompose_with_bound(instance, bound, t, constants, rng, ledger)?;
    let h = sample_with(instance, &mut decomposition, alpha, rng, ledger)?;
    let estimate = AverageEstimate {
        value: estimate_average_from_h(&h),
        degenerate: false,
        alpha,
    };
    let refined = Refined {
        bound,
        decomposition: Some(decomposition),
    };
    Ok((estimate, refined))
}

/// Linear sample whose expected total weight lies in `[beta, gamma * beta]`.
///
/// The scale is `beta / (C(n,2) * w_hat)` for an estimate `w_hat` of the
/// average weight with `avg / gamma <= w_hat <= avg`. That estimate comes
/// from a refinement at accuracy `(gamma - 1) / (gamma + 1)` divided by
/// `1 + accuracy`, and the decomposition built for it is reused.
pub fn build_h_beta<R: Rng + ?Sized>(
    instance: &MetricInstance,
    config: &SamplerConfig,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<SampledGraph> {
    let SamplerConfig { beta, gamma, constants } = *config;
    if !(beta.is_finite() && beta > 0.0) {
        return Err(invalid(format!("beta must be positive, got {beta}")));
    }
    if !(gamma.is_finite() && gamma > 1.0) {
        return Err(invalid(format!("gamma must exceed 1, got {gamma}")));
    }
    let before = ledger.count();
    let accuracy = (gamma - 1.0) / (gamma + 1.0);
    let (estimate, refined) = refine(instance, accuracy, &constants, rng, ledger)?;
    if estimate.degenerate {
        return Err(Error::DegenerateZero);
    }
    let w_hat = estimate.value / (1.0 + accuracy);
    if w_hat <= 0.0 {
        return Err(Error::Consistency(
            "refined average estimate is zero on a non-zero instance".into(),
        ));
    }
    let alpha = beta / (pairs(instance.n()) as f64 * w_hat);
    let mut decomposition = refined
        .decomposition
        .expect("non-degenerate refinement keeps its decomposition");
    debug_assert_eq!(decomposition.bound, refined.bound);
    let mut h = sample_with(instance, &mut decomposition, alpha, rng, ledger)?;
    h.beta = Some(beta);
    h.queries_used = ledger.count() - before;
    Ok(h)
}

/// Average weight implied by a linear sample: `sum w' / (alpha C(n,2))`.
pub fn estimate_average_from_h(h: &SampledGraph) -> Weight {
    if h.edges.is_empty() {
        return 0.0;
    }
    h.total_weight() / (h.alpha * pairs(h.n) as f64)
}

/// Edges kept independently with a fixed probability, at their original weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniformSample {
    pub n: usize,
    pub p: f64,
    pub edges: Vec<Edge>,
    pub queries_used: u64,
}

impl UniformSample {
    pub fn to_graph(&self) -> WeightedGraph {
        WeightedGraph::new(self.n, self.edges.clone())
    }
}

pub fn uniform_sample<R: Rng + ?Sized>(
    instance: &MetricInstance,
    p: f64,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<UniformSample> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("sampling probability must lie in (0, 1], got {p}")));
    }
    let before = ledger.count();
    let n = instance.n();
    let mut edges = Vec::new();
    let mut cursor = TriangleCursor::new(n);
    for_each_selected(pairs(n), p, rng, |idx| {
        let (u, v) = cursor.locate(idx);
        let weight = instance.weight_query(u, v, ledger)?;
        edges.push(Edge { u, v, weight });
        Ok(())
    })?;
    Ok(UniformSample {
        n,
        p,
        edges,
        queries_used: ledger.count() - before,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("alpha must be positive, got {alpha}")))
    }
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("epsilon must lie in (0, 1], got {epsilon}")))
    }
}

/// Pre-sampling rate for residual pairs.
fn residual_rate(instance: &MetricInstance) -> f64 {
    (2.0 / (instance.lambda() * instance.n() as f64)).min(1.0)
}

/// Smallest `t >= 2` whose residual bound `L / 2^(t-1)` keeps the residual
/// keep-probability `alpha * w / rate` at most 1.
fn levels_needed(instance: &MetricInstance, bound: Weight, alpha: f64) -> usize {
    let rate = residual_rate(instance);
    let mut t = 2;
    while alpha * bound / 2f64.powi(t as i32 - 1) > rate {
        t += 1;
    }
    t
}

fn keep_probability(ratio: f64, what: &str) -> Result<f64> {
    if ratio > 1.0 + PROBABILITY_SLACK {
        return Err(Error::Consistency(format!(
            "{what} keep probability {ratio} exceeds 1; the level bounds do not hold"
        )));
    }
    Ok(ratio.min(1.0))
}

/// Draw a linear sample at scale `alpha` from a decomposition, first adding
/// levels if the residual bound is too coarse for this `alpha`.
fn sample_with<R: Rng + ?Sized>(
    instance: &MetricInstance,
    decomposition: &mut Decomposition,
    alpha: f64,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<SampledGraph> {
    let before = ledger.count();
    let t = levels_needed(instance, decomposition.bound, alpha);
    decomposition.extend(instance, t, rng, ledger)?;

    let n = instance.n();
    let base = fork(rng);
    let mut edges = Vec::new();
    let mut in_nu = vec![false; n];

    for (i, level) in decomposition.levels.iter().enumerate() {
        if level.nu.is_empty() {
            continue;
        }
        for &v in &level.nu {
            in_nu[v] = true;
        }
        let mut select_rng = stream_rng(base, 2 * i as u64);
        let mut coin_rng = stream_rng(base, 2 * i as u64 + 1);
        let m = level.vertices.len() as u64;
        let rectangle = level.nu.len() as u64 * m;
        // every edge of E_nu appears once: as (nu member, other) with the
        // nu member first, or between two nu members with the smaller first
        let pair_at = |idx: u64| -> Option<(VertexId, VertexId)> {
            let u = level.nu[(idx / m) as usize];
            let v = level.vertices[(idx % m) as usize];
            (v != u && !(in_nu[v] && v < u)).then_some((u, v))
        };
        if alpha * level.bound > 1.0 {
            for idx in 0..rectangle {
                let Some((u, v)) = pair_at(idx) else { continue };
                let w = instance.weight_query(u, v, ledger)?;
                let scaled = alpha * w;
                if scaled > 1.0 {
                    edges.push(Edge { u, v, weight: scaled });
                } else if coin_rng.random::<f64>() < scaled {
                    edges.push(Edge { u, v, weight: 1.0 });
                }
            }
        } else {
            let rate = alpha * level.bound;
            for_each_selected(rectangle, rate, &mut select_rng, |idx| {
                let Some((u, v)) = pair_at(idx) else { return Ok(()) };
                let w = instance.weight_query(u, v, ledger)?;
                let keep = keep_probability(w / level.bound, "level")?;
                if coin_rng.random::<f64>() < keep {
                    edges.push(Edge { u, v, weight: 1.0 });
                }
                Ok(())
            })?;
        }
        for &v in &level.nu {
            in_nu[v] = false;
        }
    }

    let residual = &decomposition.residual;
    let rate = residual_rate(instance);
    let mut residual_rng = stream_rng(base, 2 * decomposition.t as u64);
    let mut coin_rng = stream_rng(base, 2 * decomposition.t as u64 + 1);
    let mut cursor = TriangleCursor::new(residual.len());
    for_each_selected(pairs(residual.len()), rate, &mut residual_rng, |idx| {
        let (a, b) = cursor.locate(idx);
        let (u, v) = (residual[a], residual[b]);
        let w = instance.weight_query(u, v, ledger)?;
        let keep = keep_probability(alpha * w / rate, "residual")?;
        if coin_rng.random::<f64>() < keep {
            edges.push(Edge { u, v, weight: 1.0 });
        }
        Ok(())
    })?;

    for e in &mut edges {
        if e.u > e.v {
            std::mem::swap(&mut e.u, &mut e.v);
        }
    }
    edges.sort_unstable_by_key(|e| (e.u, e.v));
    Ok(SampledGraph {
        n,
        alpha,
        beta: None,
        edges,
        queries_used: ledger.count() - before,
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    fn clique(n: usize, w: f64) -> MetricInstance {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { w }).collect())
            .collect();
        MetricInstance::from_matrix(&rows, 1.0).unwrap()
    }

    fn exact_avg(inst: &MetricInstance) -> f64 {
        let n = inst.n();
        let mut s = 0.0;
        for u in 0..n {
            for v in u + 1..n {
                s += inst.raw_weight(u, v);
            }
        }
        s / pairs(n) as f64
    }

    #[test]
    fn crude_examples() {
        let ledger = QueryLedger::new();
        assert_eq!(crude_average_estimate(&MetricInstance::line(3), &ledger).unwrap(), 0.5);
        assert_eq!(ledger.count(), 2);
        assert_eq!(crude_average_estimate(&MetricInstance::zero(7), &ledger).unwrap(), 0.0);
        let c = crude_average_estimate(&clique(9, 2.0), &ledger).unwrap();
        assert!((c - 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn crude_uses_ceil_inverse_lambda_vertices() {
        let inst = MetricInstance::line(10).power_wrap(2.0).unwrap(); // lambda 1/4
        let ledger = QueryLedger::new();
        let c = crude_average_estimate(&inst, &ledger).unwrap();
        assert_eq!(ledger.count(), 4 * 9);
        let avg = exact_avg(&inst);
        assert!(c <= avg && c >= avg / 20.0);
    }

    #[test]
    fn heavy_edges_are_deterministic() {
        let inst = MetricInstance::from_matrix(&[vec![0.0, 4.0], vec![4.0, 0.0]], 1.0).unwrap();
        for seed in 0..20 {
            let h = build_h_alpha(
                &inst,
                0.5,
                &DecompositionConstants::GUARANTEED,
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            assert_eq!(
                h.edges,
                vec![Edge {
                    u: 0,
                    v: 1,
                    weight: 2.0
                }]
            );
        }
    }

    #[test]
    fn unit_edge_at_half_scale_is_a_fair_coin() {
        let inst = MetricInstance::from_matrix(&[vec![0.0, 1.0], vec![1.0, 0.0]], 1.0).unwrap();
        let runs = 4000;
        let mut hits = 0;
        for seed in 0..runs {
            let h = build_h_alpha(
                &inst,
                0.5,
                &DecompositionConstants::GUARANTEED,
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            assert!(h.edges.iter().all(|e| e.weight == 1.0));
            hits += h.edges.len();
        }
        let sd = (runs as f64 * 0.25).sqrt();
        assert!((hits as f64 - runs as f64 / 2.0).abs() < 4.0 * sd, "{hits}");
    }

    #[test]
    fn rejects_bad_alpha() {
        let inst = MetricInstance::line(4);
        let ledger = QueryLedger::new();
        let mut rng = stream_rng(0, 0);
        for alpha in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(build_h_alpha(&inst, alpha, &DecompositionConstants::GUARANTEED, &mut rng, &ledger).is_err());
        }
        assert_eq!(ledger.count(), 0);
    }

    #[test]
    fn queries_match_ledger_and_edges_are_canonical() {
        let inst = MetricInstance::uniform_points(80, 2, 4).unwrap();
        let ledger = QueryLedger::new();
        let h = build_h_alpha(
            &inst,
            2.0,
            &DecompositionConstants::GUARANTEED,
            &mut stream_rng(1, 0),
            &ledger,
        )
        .unwrap();
        assert_eq!(h.queries_used, ledger.count());
        assert!(h.edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        assert!(h.edges.iter().all(|e| e.u < e.v && e.weight >= 1.0));
    }

    #[test]
    fn marginals_with_forced_sampling() {
        // the first level is scanned in full, later ones are pre-sampled;
        // every pair must still be kept with probability alpha * w
        let inst = MetricInstance::uniform_points(14, 2, 11).unwrap();
        let n = inst.n();
        let alpha = 0.6;
        let runs = 6000u64;
        let mut counts = vec![0u32; n * n];
        for seed in 0..runs {
            let h = build_h_alpha(
                &inst,
                alpha,
                &DecompositionConstants::GUARANTEED,
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            for e in &h.edges {
                counts[e.u * n + e.v] += 1;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let q = (alpha * inst.raw_weight(u, v)).min(1.0);
                let f = counts[u * n + v] as f64 / runs as f64;
                let sd = (q * (1.0 - q) / runs as f64).sqrt();
                assert!((f - q).abs() <= 4.5 * sd + 1e-9, "({u},{v}) {f} vs {q}");
            }
        }
    }

    #[test]
    fn refine_on_clique() {
        let inst = clique(200, 1.0);
        let mut good = 0;
        for seed in 0..100 {
            let est = refine_average_estimate(
                &inst,
                0.2,
                &DecompositionConstants::GUARANTEED,
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            assert!(!est.degenerate);
            if (0.8..=1.2).contains(&est.value) {
                good += 1;
            }
        }
        assert!(good >= 90, "{good}");
    }

    #[test]
    fn refine_flags_zero_instances() {
        let est = refine_average_estimate(
            &MetricInstance::zero(30),
            0.5,
            &DecompositionConstants::GUARANTEED,
            &mut stream_rng(0, 0),
            &QueryLedger::new(),
        )
        .unwrap();
        assert!(est.degenerate);
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn beta_rejects_zero_instance_and_bad_gamma() {
        let ledger = QueryLedger::new();
        let mut rng = stream_rng(0, 0);
        let err = build_h_beta(&MetricInstance::zero(20), &SamplerConfig::new(5.0), &mut rng, &ledger).unwrap_err();
        assert!(matches!(err, Error::DegenerateZero));
        assert_eq!(err.to_string(), "cannot linearly sample an all-zero metric");
        let inst = MetricInstance::line(10);
        assert!(build_h_beta(&inst, &SamplerConfig::new(5.0).with_gamma(1.0), &mut rng, &ledger).is_err());
        assert!(build_h_beta(&inst, &SamplerConfig::new(0.0), &mut rng, &ledger).is_err());
    }

    #[test]
    fn beta_scaling_moves_alpha_proportionally() {
        let inst = MetricInstance::uniform_points(60, 2, 3).unwrap();
        let delta = 1.0; // gamma - 1
        for seed in 0..10 {
            let a = build_h_beta(
                &inst,
                &SamplerConfig::new(20.0),
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            let b = build_h_beta(
                &inst,
                &SamplerConfig::new(80.0),
                &mut stream_rng(seed, 1),
                &QueryLedger::new(),
            )
            .unwrap();
            let ratio = b.alpha / a.alpha;
            let slack = (1.0 + delta) * (1.0 + delta);
            assert!(ratio >= 4.0 / slack && ratio <= 4.0 * slack, "{ratio}");
            // same seed, same pipeline: exactly linear
            let c = build_h_beta(
                &inst,
                &SamplerConfig::new(80.0),
                &mut stream_rng(seed, 0),
                &QueryLedger::new(),
            )
            .unwrap();
            assert!((c.alpha / a.alpha - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn average_from_h_formula() {
        let empty = SampledGraph {
            n: 20,
            alpha: 0.01,
            beta: None,
            edges: vec![],
            queries_used: 0,
            seed: None,
        };
        assert_eq!(estimate_average_from_h(&empty), 0.0);
        let one = SampledGraph {
            edges: vec![Edge {
                u: 0,
                v: 1,
                weight: 3.0,
            }],
            ..empty
        };
        assert!((estimate_average_from_h(&one) - 3.0 / (0.01 * 190.0)).abs() < 1e-12);
    }

    #[test]
    fn uniform_sample_counts() {
        let inst = MetricInstance::line(20);
        let ledger = QueryLedger::new();
        let all = uniform_sample(&inst, 1.0, &mut stream_rng(0, 0), &ledger).unwrap();
        assert_eq!(all.edges.len(), 190);
        assert_eq!(all.queries_used, 190);
        assert!(uniform_sample(&inst, 0.0, &mut stream_rng(0, 0), &ledger).is_err());
        assert!(uniform_sample(&inst, 1.5, &mut stream_rng(0, 0), &ledger).is_err());

        let runs = 10_000;
        let mut total = 0usize;
        for seed in 0..runs {
            total += uniform_sample(&inst, 0.5, &mut stream_rng(seed, 0), &QueryLedger::new())
                .unwrap()
                .edges
                .len();
        }
        let sd = (runs as f64 * 190.0 * 0.25).sqrt();
        assert!((total as f64 - runs as f64 * 95.0).abs() <= 4.0 * sd);
    }

    #[test]
    fn uniform_star_heavy_edge_count() {
        let n = 100;
        let p = 0.05;
        let inst = MetricInstance::make_appendix_star(n).unwrap();
        let mut within = 0;
        for seed in 0..100 {
            let s = uniform_sample(&inst, p, &mut stream_rng(seed, 0), &QueryLedger::new()).unwrap();
            let heavy = s.edges.iter().filter(|e| e.u == 0).count() as f64;
            if heavy >= 1.0 && heavy <= 2.0 * p * (n as f64 - 1.0) {
                within += 1;
            }
        }
        assert!(within >= 80, "{within}");
    }

    #[test]
    fn csv_and_sidecar_round_trip() {
        let inst = MetricInstance::uniform_points(30, 2, 1).unwrap();
        let mut h = build_h_beta(
            &inst,
            &SamplerConfig::new(40.0),
            &mut stream_rng(1, 0),
            &QueryLedger::new(),
        )
        .unwrap();
        h.seed = Some(1);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h.csv");
        h.save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("u,v,weight\n"));
        let side: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("h.json")).unwrap()).unwrap();
        for key in ["n", "alpha", "beta", "queries_used", "seed"] {
            assert!(side.get(key).is_some(), "{key}");
        }
        assert_eq!(SampledGraph::load(&path).unwrap(), h);
    }
}
