//! Bernoulli selection over implicit pair index spaces.
//!
//! Sampling is always "keep index `i` independently with probability `p`".
//! Small `p` skips ahead by geometric gaps so the work tracks the number of
//! successes rather than the size of the space; large `p` flips a coin per
//! index, which is cheaper once most indices survive anyway.

use rand::Rng;
use rand_distr::{Distribution, Geometric};

use crate::error::Result;

const COIN_FLIP_ABOVE: f64 = 0.25;

pub(crate) fn for_each_selected<R, F>(total: u64, p: f64, rng: &mut R, mut f: F) -> Result<()>
where
    R: Rng + ?Sized,
    F: FnMut(u64) -> Result<()>,
{
    if total == 0 || p <= 0.0 {
        return Ok(());
    }
    if p >= 1.0 {
        for i in 0..total {
            f(i)?;
        }
        return Ok(());
    }
    if p > COIN_FLIP_ABOVE {
        // one draw per index against a 53-bit threshold, gathered into a
        // 64-index mask first so the coin flips do not branch
        let threshold = (p * (1u64 << 53) as f64) as u64;
        let mut start = 0;
        while start < total {
            let len = (total - start).min(64);
            let mut mask = 0u64;
            for j in 0..len {
                mask |= u64::from((rng.next_u64() >> 11) < threshold) << j;
            }
            while mask != 0 {
                f(start + mask.trailing_zeros() as u64)?;
                mask &= mask - 1;
            }
            start += len;
        }
        return Ok(());
    }
    let gap = Geometric::new(p).expect("0 < p < 1");
    let mut i = gap.sample(rng);
    while i < total {
        f(i)?;
        i = match i.checked_add(1).and_then(|x| x.checked_add(gap.sample(rng))) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(())
}

/// Decodes increasing indices of the strict upper triangle over a list of
/// `m` items into position pairs `(a, b)`, `a < b`, row-major. Indices must
/// be fed in increasing order; total work is `O(m + calls)`.
pub(crate) struct TriangleCursor {
    m: usize,
    row: usize,
    row_start: u64,
}

impl TriangleCursor {
    pub(crate) fn new(m: usize) -> Self {
        Self {
            m,
            row: 0,
            row_start: 0,
        }
    }

    pub(crate) fn locate(&mut self, idx: u64) -> (usize, usize) {
        loop {
            let row_len = (self.m - 1 - self.row) as u64;
            if idx < self.row_start + row_len {
                let col = self.row + 1 + (idx - self.row_start) as usize;
                return (self.row, col);
            }
            self.row_start += row_len;
            self.row += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    #[test]
    fn cursor_enumerates_triangle() {
        let m = 6;
        let mut cursor = TriangleCursor::new(m);
        let got: Vec<_> = (0..15).map(|i| cursor.locate(i)).collect();
        let mut want = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                want.push((a, b));
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn cursor_handles_skips() {
        let mut cursor = TriangleCursor::new(5);
        assert_eq!(cursor.locate(3), (0, 4));
        assert_eq!(cursor.locate(9), (3, 4));
    }

    fn count_selected(total: u64, p: f64, seed: u64) -> u64 {
        let mut rng = stream_rng(seed, 0);
        let mut count = 0;
        let mut last = None;
        for_each_selected(total, p, &mut rng, |i| {
            assert!(i < total);
            assert!(last.is_none_or(|l| i > l));
            last = Some(i);
            count += 1;
            Ok(())
        })
        .unwrap();
        count
    }

    #[test]
    fn selection_rate_matches_probability() {
        for &p in &[0.001, 0.05, 0.3, 0.9] {
            let total = 200_000u64;
            let c = count_selected(total, p, 5) as f64;
            let mean = p * total as f64;
            let sd = (total as f64 * p * (1.0 - p)).sqrt();
            assert!((c - mean).abs() <= 5.0 * sd, "p={p}: {c} vs {mean}");
        }
    }

    #[test]
    fn degenerate_probabilities() {
        assert_eq!(count_selected(100, 0.0, 1), 0);
        assert_eq!(count_selected(100, 1.0, 1), 100);
        assert_eq!(count_selected(0, 0.5, 1), 0);
    }
}
