//! Reference computations shared by the integration tests. Everything here
//! reads weights off-ledger through a dense copy of the instance.

#![allow(dead_code)]

use linsample::decompose::{Decomposition, Level};
use linsample::graph::{DenseWeights, Edge, WeightedGraph};
use linsample::oracle::MetricInstance;

/// Heavy-neighbour counts of each member of `vertices` within `vertices`.
pub fn heavy_degrees(w: &DenseWeights, vertices: &[usize], threshold: f64) -> Vec<usize> {
    vertices
        .iter()
        .map(|&u| vertices.iter().filter(|&&v| v != u && w.get(u, v) >= threshold).count())
        .collect()
}

/// Members of `vertices` with at least `frac * |vertices|` heavy neighbours.
pub fn heavy_core(w: &DenseWeights, vertices: &[usize], threshold: f64, frac: f64) -> Vec<usize> {
    let need = frac * vertices.len() as f64;
    vertices
        .iter()
        .zip(heavy_degrees(w, vertices, threshold))
        .filter(|&(_, d)| d as f64 >= need)
        .map(|(&v, _)| v)
        .collect()
}

pub fn max_internal(w: &DenseWeights, vertices: &[usize]) -> f64 {
    let mut max = 0.0f64;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            max = max.max(w.get(u, v));
        }
    }
    max
}

/// Weight of the pairs inside `vertices` with at least one end in `nu`.
pub fn touching_weight(w: &DenseWeights, vertices: &[usize], nu: &[usize]) -> f64 {
    let mut in_nu = vec![false; w.n()];
    for &u in nu {
        in_nu[u] = true;
    }
    let mut total = 0.0;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if in_nu[u] || in_nu[v] {
                total += w.get(u, v);
            }
        }
    }
    total
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.contains(v))
}

/// Checks one level: its internal edges respect the bound, the pairs touching
/// `nu` carry weight between `(lambda/32) L |V| |nu|` and `L |V| |nu|`, and
/// `nu` sits between the half-heavy and quarter-heavy cores.
pub fn check_level(w: &DenseWeights, lambda: f64, level: &Level) -> Result<(), String> {
    let (bound, vertices, nu) = (level.bound, &level.vertices, &level.nu);
    let tol = 1e-9 * bound.max(1.0);
    let max = max_internal(w, vertices);
    if max > bound + tol {
        return Err(format!("internal edge {max} above level bound {bound}"));
    }
    let threshold = lambda * bound / 4.0;
    if threshold > 0.0 {
        let half = heavy_core(w, vertices, threshold, 0.5);
        let quarter = heavy_core(w, vertices, threshold, 0.25);
        if !is_subset(&half, nu) {
            return Err(format!(
                "half-heavy vertices missing from nu ({} vs {})",
                half.len(),
                nu.len()
            ));
        }
        if !is_subset(nu, &quarter) {
            return Err(format!(
                "nu has vertices outside the quarter-heavy core ({} vs {})",
                nu.len(),
                quarter.len()
            ));
        }
    }
    let mass = touching_weight(w, vertices, nu);
    let scale = bound * vertices.len() as f64 * nu.len() as f64;
    if mass < lambda / 32.0 * scale - tol || mass > scale + tol {
        return Err(format!(
            "touching weight {mass} outside [{}, {scale}]",
            lambda / 32.0 * scale
        ));
    }
    Ok(())
}

/// All level checks plus the partition structure and the residual bound.
pub fn check_decomposition(instance: &MetricInstance, d: &Decomposition) -> Result<(), String> {
    let w = DenseWeights::from_instance(instance);
    let lambda = instance.lambda();
    if d.levels.len() + 1 != d.t {
        return Err(format!("{} levels for t = {}", d.levels.len(), d.t));
    }
    let mut expected: Vec<usize> = (0..instance.n()).collect();
    for (i, level) in d.levels.iter().enumerate() {
        if level.vertices != expected {
            return Err(format!("level {} does not hold the previous remainder", i + 1));
        }
        check_level(&w, lambda, level).map_err(|e| format!("level {}: {e}", i + 1))?;
        expected.retain(|v| !level.nu.contains(v));
    }
    if d.residual != expected {
        return Err("residual is not the final remainder".into());
    }
    let max = max_internal(&w, &d.residual);
    if max > d.residual_bound() * (1.0 + 1e-9) {
        return Err(format!("residual edge {max} above {}", d.residual_bound()));
    }
    Ok(())
}

/// Builds a graph from `(u, v, weight)` triples over `n` vertices.
pub fn graph(n: usize, edges: &[(usize, usize, f64)]) -> WeightedGraph {
    WeightedGraph::new(n, edges.iter().map(|&(u, v, weight)| Edge { u, v, weight }).collect())
}

/// `k` standard deviations of a proportion `q` estimated from `trials` draws.
pub fn proportion_band(q: f64, trials: usize, k: f64) -> f64 {
    k * (q * (1.0 - q) / trials as f64).sqrt()
}
