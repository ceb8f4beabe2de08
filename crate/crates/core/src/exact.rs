//! Brute-force optima for small instances. Everything here reads weights
//! off-ledger and exists to check the sampled pipelines.

use crate::algorithms::{canonical_groups, CutAssignment, HypermatchingPartition, SubgraphSelection};
use crate::error::{invalid, Error, Result};
use crate::graph::DenseWeights;
use crate::oracle::{pairs, MetricInstance};

pub const DENSEST_CAP: usize = 20;
pub const MAXCUT_CAP: usize = 22;
pub const HYPERMATCHING_CAP: usize = 12;

/// Average weight over all `n choose 2` pairs.
pub fn exact_average(instance: &MetricInstance) -> Result<f64> {
    let n = instance.n();
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let mut total = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            total += instance.raw_weight(u, v);
        }
    }
    Ok(total / pairs(n) as f64)
}

fn check_cap(what: &'static str, n: usize, cap: usize, default: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    if cap > default {
        log::warn!("{what} raised past its default cap ({cap} > {default}); expect a long run");
    }
    Ok(())
}

pub fn exact_densest(w: &DenseWeights) -> Result<SubgraphSelection> {
    exact_densest_with_cap(w, DENSEST_CAP)
}

/// Densest subset of size at least 2 over all `2^n` subsets.
pub fn exact_densest_with_cap(w: &DenseWeights, cap: usize) -> Result<SubgraphSelection> {
    let n = w.n();
    check_cap("exact densest subgraph", n, cap, DENSEST_CAP)?;
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    // internal[mask] = internal[mask - lowest] + weight from lowest to the rest
    let mut internal = vec![0.0f64; 1 << n];
    let mut best_mask = (1usize << n) - 1;
    let mut best = f64::NEG_INFINITY;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let row = w.row(low);
        let mut add = 0.0;
        let mut bits = rest;
        while bits != 0 {
            add += row[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        internal[mask] = internal[rest] + add;
        let size = mask.count_ones();
        if size >= 2 {
            let density = internal[mask] / size as f64;
            if density > best || (density == best && subset_precedes(mask, best_mask)) {
                best = density;
                best_mask = mask;
            }
        }
    }
    Ok(SubgraphSelection {
        vertices: (0..n).filter(|&v| best_mask >> v & 1 == 1).collect(),
        density: best,
    })
}

/// Lexicographic order on sorted member lists. At the first vertex where
/// the sets differ, a set with nothing left is a prefix of the other and
/// comes first; otherwise the set containing that vertex comes first.
fn subset_precedes(a: usize, b: usize) -> bool {
    let first = (a ^ b).trailing_zeros();
    let (rest_a, rest_b) = (a >> first, b >> first);
    rest_a == 0 || (rest_b != 0 && rest_a & 1 == 1)
}

pub fn exact_maxcut(w: &DenseWeights) -> Result<CutAssignment> {
    exact_maxcut_with_cap(w, MAXCUT_CAP)
}

/// Best of the `2^(n-1)` cuts with vertex 0 on the `false` side, walked in
/// Gray-code order so each step flips one vertex.
pub fn exact_maxcut_with_cap(w: &DenseWeights, cap: usize) -> Result<CutAssignment> {
    let n = w.n();
    check_cap("exact max cut", n, cap, MAXCUT_CAP)?;
    if n < 2 {
        return Err(invalid("need at least two vertices"));
    }
    let mut side = vec![false; n];
    let mut value = 0.0;
    let mut best_value = f64::NEG_INFINITY;
    let mut best_side = side.clone();
    let steps = 1u64 << (n - 1);
    for step in 0..steps {
        if step > 0 {
            // vertex 1 + (index of the bit that changes)
            let v = 1 + step.trailing_zeros() as usize;
            let row = w.row(v);
            let mut delta = 0.0;
            for u in 0..n {
                if u != v {
                    delta += if side[u] == side[v] { row[u] } else { -row[u] };
                }
            }
            side[v] = !side[v];
            value += delta;
        }
        if side.iter().any(|&s| s) && value > best_value {
            best_value = value;
            best_side.clone_from(&side);
        }
    }
    // recompute to shed accumulated rounding
    let value = w.cut_value(&best_side);
    Ok(CutAssignment { side: best_side, value })
}

pub fn exact_hypermatching(w: &DenseWeights, k: usize) -> Result<HypermatchingPartition> {
    exact_hypermatching_with_cap(w, k, HYPERMATCHING_CAP)
}

/// Best partition into groups of size `k`, enumerated by always placing the
/// smallest unassigned vertex together with every choice of `k - 1` others.
pub fn exact_hypermatching_with_cap(w: &DenseWeights, k: usize, cap: usize) -> Result<HypermatchingPartition> {
    let n = w.n();
    check_cap("exact hypermatching", n, cap, HYPERMATCHING_CAP)?;
    if k < 2 || n == 0 || !n.is_multiple_of(k) {
        return Err(invalid(format!("group size {k} must be at least 2 and divide n = {n}")));
    }
    let mut search = Search {
        w,
        k,
        free: vec![true; n],
        groups: Vec::new(),
        best: None,
    };
    search.place(0.0);
    let (value, groups) = search.best.expect("some partition exists");
    Ok(HypermatchingPartition {
        groups: canonical_groups(groups),
        value,
    })
}

struct Search<'a> {
    w: &'a DenseWeights,
    k: usize,
    free: Vec<bool>,
    groups: Vec<Vec<usize>>,
    best: Option<(f64, Vec<Vec<usize>>)>,
}

impl Search<'_> {
    fn place(&mut self, value: f64) {
        let Some(first) = self.free.iter().position(|&f| f) else {
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.best = Some((value, self.groups.clone()));
            }
            return;
        };
        self.free[first] = false;
        self.groups.push(vec![first]);
        self.extend(first + 1, value);
        self.groups.pop();
        self.free[first] = true;
    }

    fn extend(&mut self, from: usize, value: f64) {
        let group_len = self.groups.last().map_or(0, Vec::len);
        if group_len == self.k {
            self.place(value);
            return;
        }
        for v in from..self.w.n() {
            if !self.free[v] {
                continue;
            }
            let gain: f64 = self.groups.last().unwrap().iter().map(|&g| self.w.get(v, g)).sum();
            self.free[v] = false;
            self.groups.last_mut().unwrap().push(v);
            self.extend(v + 1, value + gain);
            self.groups.last_mut().unwrap().pop();
            self.free[v] = true;
        }
    }
}
