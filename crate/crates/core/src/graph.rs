//! Weighted edge lists and dense weight tables used by the solvers.

use serde::{Deserialize, Serialize};

use crate::oracle::{MetricInstance, VertexId, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.u != e.v && e.u < n && e.v < n));
        Self { n, edges }
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn adjacency(&self) -> Vec<Vec<(VertexId, Weight)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.weight));
            adj[e.v].push((e.u, e.weight));
        }
        adj
    }

    /// Every pair with its weight. Off-ledger: meant for tests and oracles.
    pub fn complete_from(instance: &MetricInstance) -> Self {
        let n = instance.n();
        let mut edges = Vec::with_capacity(instance.num_pairs() as usize);
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge {
                    u,
                    v,
                    weight: instance.raw_weight(u, v),
                });
            }
        }
        Self { n, edges }
    }
}

/// Full `n x n` weight table; absent edges weigh zero.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseWeights {
    n: usize,
    w: Vec<f64>,
}

impl DenseWeights {
    pub fn from_graph(graph: &WeightedGraph) -> Self {
        let n = graph.n;
        let mut w = vec![0.0; n * n];
        for e in &graph.edges {
            w[e.u * n + e.v] += e.weight;
            w[e.v * n + e.u] += e.weight;
        }
        Self { n, w }
    }

    /// Off-ledger snapshot of an instance.
    pub fn from_instance(instance: &MetricInstance) -> Self {
        let n = instance.n();
        let mut w = vec![0.0; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let x = instance.raw_weight(u, v);
                w[u * n + v] = x;
                w[v * n + u] = x;
            }
        }
        Self { n, w }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> f64 {
        self.w[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[f64] {
        &self.w[u * self.n..(u + 1) * self.n]
    }

    pub fn total_weight(&self) -> f64 {
        self.w.iter().sum::<f64>() / 2.0
    }

    /// Sum of weights over unordered pairs inside `vertices`.
    pub fn internal_weight(&self, vertices: &[VertexId]) -> f64 {
        let mut total = 0.0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                total += self.get(u, v);
            }
        }
        total
    }

    /// Internal weight over size, zero below two vertices.
    pub fn density(&self, vertices: &[VertexId]) -> f64 {
        if vertices.len() < 2 {
            0.0
        } else {
            self.internal_weight(vertices) / vertices.len() as f64
        }
    }

    pub fn cut_value(&self, side: &[bool]) -> f64 {
        let mut total = 0.0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if side[u] != side[v] {
                    total += self.get(u, v);
                }
            }
        }
        total
    }

    pub fn partition_value(&self, groups: &[Vec<VertexId>]) -> f64 {
        groups.iter().map(|g| self.internal_weight(g)).sum()
    }
}
