use rand::Rng;

use super::{canonical_groups, HypermatchingPartition};
use crate::error::{invalid, Result};
use crate::graph::{DenseWeights, WeightedGraph};

/// Greedy grouping followed by random improving swaps.
///
/// Each group starts from the heaviest edge between unassigned vertices and
/// grows by the vertex adding the most weight. Then pairs of vertices in
/// different groups are swapped when that raises the total, stopping after
/// `n` consecutive attempts without improvement. No approximation guarantee.
pub fn greedy_hypermatching<R: Rng + ?Sized>(
    graph: &WeightedGraph,
    k: usize,
    rng: &mut R,
) -> Result<HypermatchingPartition> {
    let n = graph.n;
    if k < 2 || n == 0 || !n.is_multiple_of(k) {
        return Err(invalid(format!("group size {k} must be at least 2 and divide n = {n}")));
    }
    let w = DenseWeights::from_graph(graph);

    let mut by_weight: Vec<_> = graph.edges.iter().filter(|e| e.weight > 0.0).collect();
    by_weight.sort_by(|a, b| {
        b.weight
            .total_cmp(&a.weight)
            .then((a.u.min(a.v), a.u.max(a.v)).cmp(&(b.u.min(b.v), b.u.max(b.v))))
    });
    let mut next_edge = 0;
    let mut free = vec![true; n];
    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(n / k);

    for _ in 0..n / k {
        while next_edge < by_weight.len() && !(free[by_weight[next_edge].u] && free[by_weight[next_edge].v]) {
            next_edge += 1;
        }
        let mut group = match by_weight.get(next_edge) {
            Some(e) => vec![e.u, e.v],
            None => (0..n).filter(|&v| free[v]).take(2).collect(),
        };
        for &v in &group {
            free[v] = false;
        }
        while group.len() < k {
            let mut pick = None;
            let mut pick_gain = f64::NEG_INFINITY;
            for v in (0..n).filter(|&v| free[v]) {
                let gain: f64 = group.iter().map(|&g| w.get(v, g)).sum();
                if gain > pick_gain {
                    pick_gain = gain;
                    pick = Some(v);
                }
            }
            let v = pick.expect("k divides n, so enough vertices remain");
            free[v] = false;
            group.push(v);
        }
        groups.push(group);
    }

    if groups.len() > 1 {
        let tol = 1e-12 * (1.0 + w.total_weight());
        let mut idle = 0;
        while idle < n {
            let g1 = rng.random_range(0..groups.len());
            let mut g2 = rng.random_range(0..groups.len() - 1);
            if g2 >= g1 {
                g2 += 1;
            }
            let i = rng.random_range(0..k);
            let j = rng.random_range(0..k);
            let (a, b) = (groups[g1][i], groups[g2][j]);
            let mut delta = 0.0;
            for &x in groups[g1].iter().filter(|&&x| x != a) {
                delta += w.get(b, x) - w.get(a, x);
            }
            for &y in groups[g2].iter().filter(|&&y| y != b) {
                delta += w.get(a, y) - w.get(b, y);
            }
            if delta > tol {
                groups[g1][i] = b;
                groups[g2][j] = a;
                idle = 0;
            } else {
                idle += 1;
            }
        }
    }

    let groups = canonical_groups(groups);
    let value = w.partition_value(&groups);
    Ok(HypermatchingPartition { groups, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::oracle::MetricInstance;
    use crate::rng::stream_rng;

    fn four_with_heavy_pair() -> WeightedGraph {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                let weight = if (u, v) == (0, 1) { 5.0 } else { 1.0 };
                edges.push(Edge { u, v, weight });
            }
        }
        WeightedGraph::new(4, edges)
    }

    #[test]
    fn heavy_pair_is_grouped() {
        let m = greedy_hypermatching(&four_with_heavy_pair(), 2, &mut stream_rng(0, 0)).unwrap();
        assert_eq!(m.groups, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(m.value, 6.0);
    }

    #[test]
    fn single_group_takes_everything() {
        let g = four_with_heavy_pair();
        let m = greedy_hypermatching(&g, 4, &mut stream_rng(0, 0)).unwrap();
        assert_eq!(m.groups, vec![vec![0, 1, 2, 3]]);
        assert_eq!(m.value, g.total_weight());
    }

    #[test]
    fn hidden_star_matching_is_one() {
        let (_, g2) = MetricInstance::make_hardness_pair(6, 1).unwrap();
        let m = greedy_hypermatching(&WeightedGraph::complete_from(&g2), 2, &mut stream_rng(0, 0)).unwrap();
        assert_eq!(m.value, 1.0);
    }

    #[test]
    fn rejects_bad_group_size() {
        let g = four_with_heavy_pair();
        assert!(greedy_hypermatching(&g, 3, &mut stream_rng(0, 0)).is_err());
        assert!(greedy_hypermatching(&g, 1, &mut stream_rng(0, 0)).is_err());
    }

    #[test]
    fn groups_partition_the_vertices() {
        let g = WeightedGraph::complete_from(&MetricInstance::uniform_points(12, 2, 4).unwrap());
        let m = greedy_hypermatching(&g, 3, &mut stream_rng(1, 0)).unwrap();
        assert_eq!(m.groups.len(), 4);
        let mut all: Vec<_> = m.groups.concat();
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
    }
}
