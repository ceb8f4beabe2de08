//! Level decomposition of a metric instance.
//!
//! Starting from `V_1 = V` and a global bound `L >= max w`, level `i` has
//! weight bound `L_i = L / 2^(i-1)` and picks out `nu_i`, the vertices that
//! have many neighbours of weight at least `lambda * L_i / 4` inside `V_i`.
//! Removing them halves the largest remaining weight, so after `t - 1` levels
//! every edge inside the residual set `V_t` weighs at most `L_t`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::oracle::{pairs, MetricInstance, QueryLedger, VertexId, Weight};
use crate::pairs::{for_each_selected, TriangleCursor};
use crate::rng::{fork, stream_rng};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionConstants {
    /// Multiplier on `ln n + ln t` for the per-vertex sample size.
    pub c_sample: f64,
    /// Fraction of the sample size a vertex must reach to join `nu_i`.
    pub threshold_frac: f64,
}

impl DecompositionConstants {
    pub const GUARANTEED: Self = Self {
        c_sample: 384.0,
        threshold_frac: 0.375,
    };

    pub fn with_c_sample(c_sample: f64) -> Self {
        Self {
            c_sample,
            ..Self::GUARANTEED
        }
    }

    /// Whether these are the constants the success guarantees are proved for.
    pub fn is_guaranteed(&self) -> bool {
        *self == Self::GUARANTEED
    }

    fn validate(&self) -> Result<()> {
        if !(self.c_sample.is_finite() && self.c_sample > 0.0) {
            return Err(invalid(format!("c_sample must be positive, got {}", self.c_sample)));
        }
        if !(self.threshold_frac > 0.0 && self.threshold_frac < 1.0) {
            return Err(invalid(format!(
                "threshold_frac must lie in (0, 1), got {}",
                self.threshold_frac
            )));
        }
        Ok(())
    }

    /// Expected number of sampled neighbours per vertex.
    pub fn sample_size(&self, n: usize, t: usize) -> f64 {
        self.c_sample * ((n as f64).ln() + (t as f64).ln())
    }
}

impl Default for DecompositionConstants {
    fn default() -> Self {
        Self::GUARANTEED
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Level {
    #[serde(rename = "Li")]
    pub bound: Weight,
    #[serde(rename = "Vi")]
    pub vertices: Vec<VertexId>,
    #[serde(rename = "nui")]
    pub nu: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(rename = "L")]
    pub bound: Weight,
    pub t: usize,
    /// Levels `1..t`, each with its `nu_i`.
    pub levels: Vec<Level>,
    /// `V_t`, whose internal edges weigh at most [`Decomposition::residual_bound`].
    pub residual: Vec<VertexId>,
    pub queries_used: u64,
    #[serde(skip)]
    constants: DecompositionConstants,
}

impl Decomposition {
    /// `L_t = L / 2^(t-1)`.
    pub fn residual_bound(&self) -> Weight {
        level_bound(self.bound, self.t)
    }

    pub fn constants(&self) -> DecompositionConstants {
        self.constants
    }

    /// Add levels until there are `t` of them in total. Existing levels are
    /// kept as they are; new ones split the current residual set.
    pub fn extend<R: Rng + ?Sized>(
        &mut self,
        instance: &MetricInstance,
        t: usize,
        rng: &mut R,
        ledger: &QueryLedger,
    ) -> Result<()> {
        if t <= self.t {
            return Ok(());
        }
        let before = ledger.count();
        let base = fork(rng);
        let mut current = std::mem::take(&mut self.residual);
        for i in self.t..t {
            let bound = level_bound(self.bound, i);
            let nu = if current.is_empty() {
                Vec::new()
            } else {
                let mut level_rng = stream_rng(base, i as u64);
                build_nu(instance, &current, bound, &self.constants, t, &mut level_rng, ledger)?
            };
            let next = difference(&current, &nu);
            self.levels.push(Level {
                bound,
                vertices: current,
                nu,
            });
            current = next;
        }
        self.residual = current;
        self.t = t;
        self.queries_used += ledger.count() - before;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `L / 2^(i-1)` for 1-based level `i`.
pub fn level_bound(bound: Weight, i: usize) -> Weight {
    bound / 2f64.powi(i as i32 - 1)
}

/// `(2 / lambda) * max_u w(0, u)`, using `n - 1` queries.
pub fn estimate_weight_upper_bound(instance: &MetricInstance, ledger: &QueryLedger) -> Result<Weight> {
    let n = instance.n();
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let mut max = 0.0f64;
    for u in 1..n {
        max = max.max(instance.weight_query(0, u, ledger)?);
    }
    Ok(2.0 / instance.lambda() * max)
}

/// Pick the high-degree vertices of the thresholded graph on `vertices`.
///
/// Small levels are scanned exhaustively and return exactly the vertices
/// with at least `|V_i| / 4` heavy neighbours. Larger levels sample each pair
/// with probability `k / |V_i|`, `k = c_sample (ln n + ln t)`, and keep
/// vertices seen with at least `threshold_frac * k` heavy sampled neighbours.
pub fn build_nu<R: Rng + ?Sized>(
    instance: &MetricInstance,
    vertices: &[VertexId],
    bound: Weight,
    constants: &DecompositionConstants,
    t: usize,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<Vec<VertexId>> {
    constants.validate()?;
    if t < 2 {
        return Err(invalid("the decomposition needs t >= 2 levels"));
    }
    if vertices.is_empty() {
        return Err(invalid("level vertex set is empty"));
    }
    if !(bound >= 0.0 && bound.is_finite()) {
        return Err(invalid(format!(
            "level bound must be finite and non-negative, got {bound}"
        )));
    }
    let threshold = instance.lambda() * bound / 4.0;
    if threshold <= 0.0 {
        return Ok(vertices.to_vec());
    }

    let m = vertices.len();
    let k = constants.sample_size(instance.n(), t);
    let mut heavy = vec![0u64; m];
    let mut cursor = TriangleCursor::new(m);
    let exhaustive = m as f64 <= 2.0 * k;
    let p = if exhaustive { 1.0 } else { k / m as f64 };
    for_each_selected(pairs(m), p, rng, |idx| {
        let (a, b) = cursor.locate(idx);
        if instance.weight_query(vertices[a], vertices[b], ledger)? >= threshold {
            heavy[a] += 1;
            heavy[b] += 1;
        }
        Ok(())
    })?;

    let keep = |count: u64| {
        if exhaustive {
            4 * count >= m as u64
        } else {
            count as f64 >= constants.threshold_frac * k
        }
    };
    Ok(vertices
        .iter()
        .zip(&heavy)
        .filter(|&(_, &c)| keep(c))
        .map(|(&v, _)| v)
        .collect())
}

/// Full decomposition with `t` levels, estimating `L` first.
pub fn build_decomposition<R: Rng + ?Sized>(
    instance: &MetricInstance,
    t: usize,
    constants: &DecompositionConstants,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<Decomposition> {
    let before = ledger.count();
    let bound = estimate_weight_upper_bound(instance, ledger)?;
    let mut d = decompose_with_bound(instance, bound, t, constants, rng, ledger)?;
    d.queries_used = ledger.count() - before;
    Ok(d)
}

/// Decomposition for an already known global bound `L`.
pub fn decompose_with_bound<R: Rng + ?Sized>(
    instance: &MetricInstance,
    bound: Weight,
    t: usize,
    constants: &DecompositionConstants,
    rng: &mut R,
    ledger: &QueryLedger,
) -> Result<Decomposition> {
    constants.validate()?;
    if t < 2 {
        return Err(invalid("the decomposition needs t >= 2 levels"));
    }
    let mut d = Decomposition {
        bound,
        t: 1,
        levels: Vec::with_capacity(t - 1),
        residual: (0..instance.n()).collect(),
        queries_used: 0,
        constants: *constants,
    };
    d.extend(instance, t, rng, ledger)?;
    Ok(d)
}

/// Elements of sorted `all` that are not in sorted `remove`.
fn difference(all: &[VertexId], remove: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(all.len() - remove.len());
    let mut j = 0;
    for &v in all {
        while j < remove.len() && remove[j] < v {
            j += 1;
        }
        if j < remove.len() && remove[j] == v {
            continue;
        }
        out.push(v);
    }
    out
}
