use rand::Rng;

use super::{Backend, MetricInstance};
use crate::error::{invalid, Result};
use crate::rng::stream_rng;

impl MetricInstance {
    /// The all-zero instance (`G1` of the distinguishing game).
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            lambda: 1.0,
            backend: Backend::Zero,
        }
    }

    /// The pair `(G1, G2)` that no algorithm separates with fewer than a
    /// linear number of queries. `G2` puts weight 1 on every edge touching a
    /// hidden vertex drawn uniformly from `seed`; the index is not exposed.
    pub fn make_hardness_pair(n: usize, seed: u64) -> Result<(Self, Self)> {
        if n < 2 {
            return Err(invalid("hardness pair needs n >= 2"));
        }
        let hidden = stream_rng(seed, 0x6832).random_range(0..n);
        let g2 = Self {
            n,
            lambda: 1.0,
            backend: Backend::HiddenStar { hidden },
        };
        Ok((Self::zero(n), g2))
    }

    /// Vertex 0 joined to everyone with weight `n/2 + 1`, unit weight elsewhere.
    /// A true metric; uniform edge sampling misses its densest subgraph.
    pub fn make_appendix_star(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("star instance needs n >= 3"));
        }
        Ok(Self {
            n,
            lambda: 1.0,
            backend: Backend::HeavyStar {
                heavy: n as f64 / 2.0 + 1.0,
            },
        })
    }

    /// Raise every weight to the power `p`. The relaxed triangle inequality
    /// survives with constant `lambda / 2^p`; one wrapped query is one
    /// underlying query.
    pub fn power_wrap(&self, p: f64) -> Result<Self> {
        if !(p > 0.0 && p.is_finite()) {
            return Err(invalid(format!("power must be positive, got {p}")));
        }
        Ok(Self {
            n: self.n,
            lambda: self.lambda / 2f64.powf(p),
            backend: Backend::Power {
                inner: Box::new(self.clone()),
                p,
            },
        })
    }

    /// `n` points drawn uniformly from the unit cube `[0,1]^dim`.
    pub fn uniform_points(n: usize, dim: usize, seed: u64) -> Result<Self> {
        let mut rng = stream_rng(seed, 0x7074);
        let coords = (0..n * dim).map(|_| rng.random::<f64>()).collect();
        Self::euclidean_flat(dim, coords)
    }
}
