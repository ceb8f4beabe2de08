use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::SubgraphSelection;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Clone, Copy, Debug, PartialEq)]
struct Degree(f64);

impl Eq for Degree {}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Greedy peeling: repeatedly drop the vertex of least weighted degree
/// (smallest id on ties) and return the densest set seen along the way.
/// Achieves at least half the optimal density.
pub fn greedy_densest(graph: &WeightedGraph) -> Result<SubgraphSelection> {
    if graph.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let n = graph.n;
    let adj = graph.adjacency();
    let mut degree: Vec<f64> = adj.iter().map(|nb| nb.iter().map(|&(_, w)| w).sum()).collect();
    let mut queue: BTreeSet<(Degree, usize)> = (0..n).map(|v| (Degree(degree[v]), v)).collect();
    let mut alive = vec![true; n];
    let mut weight = graph.total_weight();
    let mut order = Vec::with_capacity(n);

    // removing `removed` vertices leaves a set of size n - removed
    let mut best_removed = 0;
    let mut best_density = weight / n as f64;
    while let Some((_, v)) = queue.pop_first() {
        alive[v] = false;
        order.push(v);
        weight -= degree[v];
        for &(u, w) in &adj[v] {
            if alive[u] {
                queue.remove(&(Degree(degree[u]), u));
                degree[u] -= w;
                queue.insert((Degree(degree[u]), u));
            }
        }
        let remaining = n - order.len();
        if remaining >= 2 {
            let density = weight / remaining as f64;
            if density > best_density {
                best_density = density;
                best_removed = order.len();
            }
        }
    }

    let mut keep = vec![true; n];
    for &v in &order[..best_removed] {
        keep[v] = false;
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let internal: f64 = graph
        .edges
        .iter()
        .filter(|e| keep[e.u] && keep[e.v])
        .map(|e| e.weight)
        .sum();
    let density = internal / vertices.len() as f64;
    Ok(SubgraphSelection { vertices, density })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DenseWeights, Edge};
    use crate::oracle::MetricInstance;

    fn complete(n: usize, w: f64) -> WeightedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge { u, v, weight: w });
            }
        }
        WeightedGraph::new(n, edges)
    }

    #[test]
    fn cliques() {
        let tri = greedy_densest(&complete(3, 1.0)).unwrap();
        assert_eq!(tri.vertices, vec![0, 1, 2]);
        assert_eq!(tri.density, 1.0);
        assert_eq!(greedy_densest(&complete(4, 1.0)).unwrap().density, 1.5);
    }

    #[test]
    fn star_takes_everything() {
        let g = WeightedGraph::complete_from(&MetricInstance::make_appendix_star(10).unwrap());
        let s = greedy_densest(&g).unwrap();
        assert_eq!(s.vertices.len(), 10);
        assert_eq!(s.density, 9.0);
    }

    #[test]
    fn finds_planted_dense_part() {
        // heavy triangle plus a light pendant path
        let mut edges = vec![
            Edge {
                u: 0,
                v: 1,
                weight: 10.0,
            },
            Edge {
                u: 1,
                v: 2,
                weight: 10.0,
            },
            Edge {
                u: 0,
                v: 2,
                weight: 10.0,
            },
        ];
        edges.extend((2..7).map(|u| Edge {
            u,
            v: u + 1,
            weight: 0.5,
        }));
        let g = WeightedGraph::new(8, edges);
        let s = greedy_densest(&g).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2]);
        assert_eq!(s.density, 10.0);
        assert_eq!(DenseWeights::from_graph(&g).density(&s.vertices), s.density);
    }

    #[test]
    fn no_edges_is_an_error() {
        assert!(matches!(
            greedy_densest(&WeightedGraph::new(3, vec![])),
            Err(Error::NoEdges)
        ));
    }
}
