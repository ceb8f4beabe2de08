//! Metric instances behind a query-counted edge-weight oracle.
//!
//! A [`MetricInstance`] is a complete graph on `n` vertices whose weights
//! satisfy the relaxed triangle inequality `w(a,b) + w(b,c) >= lambda * w(c,a)`.
//! Weights are only reachable through [`MetricInstance::weight_query`], which
//! charges a [`QueryLedger`]. Zero weights are allowed, so the instances are
//! pseudometrics; nothing downstream divides by an edge weight.

mod generators;
pub mod io;
mod ledger;
pub mod spec;
mod validate;

pub use ledger::QueryLedger;
pub use spec::InstanceSpec;
pub use validate::{validate_lambda_metric, validate_lambda_metric_with, MetricCheck, DEFAULT_VALIDATION_CAP};

use crate::error::{invalid, Result};

pub type VertexId = usize;
pub type Weight = f64;

#[derive(Clone, Debug)]
pub struct MetricInstance {
    n: usize,
    lambda: f64,
    backend: Backend,
}

#[derive(Clone, Debug)]
enum Backend {
    /// Row-major coordinates, `dim` per point. Distances are computed on demand.
    Euclidean {
        dim: usize,
        coords: Vec<f64>,
    },
    /// Strict upper triangle, row-major.
    Matrix {
        upper: Vec<f64>,
    },
    Zero,
    /// Unit weight on every edge touching the hidden vertex, zero elsewhere.
    HiddenStar {
        hidden: VertexId,
    },
    /// Vertex 0 joined to everyone by `heavy`, every other edge weighs 1.
    HeavyStar {
        heavy: f64,
    },
    Power {
        inner: Box<MetricInstance>,
        p: f64,
    },
}

impl MetricInstance {
    /// Euclidean instance from explicit points; every point must share a dimension.
    pub fn euclidean(points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if points.iter().any(|p| p.len() != dim) {
            return Err(invalid("points have mixed dimensions"));
        }
        let coords: Vec<f64> = points.iter().flatten().copied().collect();
        Self::euclidean_flat(dim, coords)
    }

    pub fn euclidean_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("euclidean points need at least one coordinate"));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(invalid("coordinate count is not a multiple of the dimension"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(invalid("non-finite coordinate"));
        }
        Ok(Self {
            n: coords.len() / dim,
            lambda: 1.0,
            backend: Backend::Euclidean { dim, coords },
        })
    }

    /// Points `0, 1, ..., n-1` on the real line.
    pub fn line(n: usize) -> Self {
        Self {
            n,
            lambda: 1.0,
            backend: Backend::Euclidean {
                dim: 1,
                coords: (0..n).map(|i| i as f64).collect(),
            },
        }
    }

    /// Explicit symmetric matrix. The diagonal is ignored; off-diagonal
    /// entries must be finite, non-negative and symmetric to `1e-9` relative.
    pub fn from_matrix(rows: &[Vec<f64>], lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("matrix is not square"));
        }
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (rows[u][v], rows[v][u]);
                if !a.is_finite() || a < 0.0 || !b.is_finite() || b < 0.0 {
                    return Err(invalid(format!("entry ({u},{v}) is negative or non-finite")));
                }
                if (a - b).abs() > 1e-9 * a.abs().max(b.abs()).max(1.0) {
                    return Err(invalid(format!("matrix is not symmetric at ({u},{v})")));
                }
                upper.push(a);
            }
        }
        Ok(Self {
            n,
            lambda,
            backend: Backend::Matrix { upper },
        })
    }

    /// Copy an instance's weights into an explicit matrix backend, off-ledger.
    pub fn to_matrix(&self) -> Self {
        let mut upper = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                upper.push(self.raw_weight(u, v));
            }
        }
        Self {
            n: self.n,
            lambda: self.lambda,
            backend: Backend::Matrix { upper },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Same weights with a different declared `lambda`.
    pub fn with_lambda(mut self, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        self.lambda = lambda;
        Ok(self)
    }

    pub fn num_pairs(&self) -> u64 {
        pairs(self.n)
    }

    /// Query `w(u, v)`, charging `ledger` exactly once.
    pub fn weight_query(&self, u: VertexId, v: VertexId, ledger: &QueryLedger) -> Result<Weight> {
        if u == v {
            return Err(invalid(format!("self-pair ({u},{u}) is never queried")));
        }
        if u >= self.n || v >= self.n {
            return Err(invalid(format!("pair ({u},{v}) out of range for n = {}", self.n)));
        }
        ledger.charge()?;
        let w = self.raw_weight(u, v);
        ledger.observe(w);
        Ok(w)
    }

    /// Weight without validation or accounting. Callers guarantee `u != v`
    /// and both in range.
    pub(crate) fn raw_weight(&self, u: VertexId, v: VertexId) -> Weight {
        match &self.backend {
            Backend::Euclidean { dim, coords } => {
                let a = &coords[u * dim..(u + 1) * dim];
                let b = &coords[v * dim..(v + 1) * dim];
                a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
            }
            Backend::Matrix { upper } => {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                upper[triangle_index(self.n, a, b)]
            }
            Backend::Zero => 0.0,
            Backend::HiddenStar { hidden } => {
                if u == *hidden || v == *hidden {
                    1.0
                } else {
                    0.0
                }
            }
            Backend::HeavyStar { heavy } => {
                if u == 0 || v == 0 {
                    *heavy
                } else {
                    1.0
                }
            }
            Backend::Power { inner, p } => inner.raw_weight(u, v).powf(*p),
        }
    }

    #[cfg(test)]
    pub(crate) fn hidden_index(&self) -> Option<VertexId> {
        match self.backend {
            Backend::HiddenStar { hidden } => Some(hidden),
            _ => None,
        }
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("lambda must lie in (0, 1], got {lambda}")))
    }
}

/// `n choose 2`.
pub fn pairs(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Position of `(a, b)`, `a < b`, in the row-major strict upper triangle.
pub(crate) fn triangle_index(n: usize, a: usize, b: usize) -> usize {
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}
