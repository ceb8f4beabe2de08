use rand::Rng;

use super::CutAssignment;
use crate::error::{invalid, Result};
use crate::graph::WeightedGraph;

/// Single-vertex-flip local search from random starts. Any local optimum
/// cuts at least half the total weight, hence at least half the optimum.
pub fn local_search_maxcut<R: Rng + ?Sized>(
    graph: &WeightedGraph,
    rng: &mut R,
    restarts: usize,
) -> Result<CutAssignment> {
    let n = graph.n;
    if n < 2 {
        return Err(invalid("max cut needs at least two vertices"));
    }
    let adj = graph.adjacency();
    let tol = 1e-12 * (1.0 + graph.total_weight());
    let mut best: Option<CutAssignment> = None;
    for _ in 0..restarts.max(1) {
        let mut side: Vec<bool> = (0..n).map(|_| rng.random()).collect();
        // gain[v]: change in cut value if v switches sides
        let mut gain: Vec<f64> = (0..n)
            .map(|v| {
                adj[v]
                    .iter()
                    .map(|&(u, w)| if side[u] == side[v] { w } else { -w })
                    .sum()
            })
            .collect();
        while let Some(v) = (0..n).find(|&v| gain[v] > tol) {
            side[v] = !side[v];
            gain[v] = -gain[v];
            for &(u, w) in &adj[v] {
                // the pair flipped between cut and uncut
                gain[u] += if side[u] == side[v] { 2.0 * w } else { -2.0 * w };
            }
        }
        if side.iter().all(|&s| s == side[0]) {
            side[0] = !side[0];
        }
        if side[0] {
            side.iter_mut().for_each(|s| *s = !*s);
        }
        let value = cut_value(graph, &side);
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(CutAssignment { side, value });
        }
    }
    Ok(best.expect("at least one restart"))
}

pub(crate) fn cut_value(graph: &WeightedGraph, side: &[bool]) -> f64 {
    graph
        .edges
        .iter()
        .filter(|e| side[e.u] != side[e.v])
        .map(|e| e.weight)
        .sum()
}

/// No single vertex move raises the cut by more than `tol`.
pub fn is_local_optimum(graph: &WeightedGraph, cut: &CutAssignment, tol: f64) -> bool {
    let mut gain = vec![0.0; graph.n];
    for e in &graph.edges {
        let delta = if cut.side[e.u] == cut.side[e.v] {
            e.weight
        } else {
            -e.weight
        };
        gain[e.u] += delta;
        gain[e.v] += delta;
    }
    gain.iter().all(|&g| g <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::oracle::MetricInstance;
    use crate::rng::stream_rng;

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(
            2,
            vec![Edge {
                u: 0,
                v: 1,
                weight: 5.0,
            }],
        );
        let cut = local_search_maxcut(&g, &mut stream_rng(0, 0), 1).unwrap();
        assert_eq!(cut.value, 5.0);
        assert_eq!(cut.side, vec![false, true]);
    }

    #[test]
    fn four_points_on_a_line() {
        let g = WeightedGraph::complete_from(&MetricInstance::line(4));
        let cut = local_search_maxcut(&g, &mut stream_rng(1, 0), 8).unwrap();
        assert_eq!(cut.value, 8.0);
        assert_eq!(cut.sides(), (vec![0, 1], vec![2, 3]));
    }

    #[test]
    fn hidden_star_is_isolated() {
        let (_, g2) = MetricInstance::make_hardness_pair(5, 3).unwrap();
        let g = WeightedGraph::complete_from(&g2);
        let cut = local_search_maxcut(&g, &mut stream_rng(2, 0), 4).unwrap();
        assert_eq!(cut.value, 4.0);
        let (a, b) = cut.sides();
        assert!(a.len() == 1 || b.len() == 1);
    }

    #[test]
    fn result_is_local_optimum_with_both_sides() {
        let inst = MetricInstance::uniform_points(30, 2, 5).unwrap();
        let g = WeightedGraph::complete_from(&inst);
        for seed in 0..5 {
            let cut = local_search_maxcut(&g, &mut stream_rng(seed, 0), 2).unwrap();
            assert!(is_local_optimum(&g, &cut, 1e-9));
            let (a, b) = cut.sides();
            assert!(!a.is_empty() && !b.is_empty());
            assert!(cut.value >= g.total_weight() / 2.0 - 1e-9);
        }
    }

    #[test]
    fn empty_graph_still_splits() {
        let cut = local_search_maxcut(&WeightedGraph::new(3, vec![]), &mut stream_rng(0, 0), 1).unwrap();
        assert_eq!(cut.value, 0.0);
        let (a, b) = cut.sides();
        assert!(!a.is_empty() && !b.is_empty());
    }
}
