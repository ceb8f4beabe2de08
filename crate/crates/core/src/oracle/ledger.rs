use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Counts edge-weight oracle invocations.
///
/// Every call through [`MetricInstance::weight_query`](super::MetricInstance::weight_query)
/// charges exactly one unit, repeats included. The count only moves forward
/// except through [`QueryLedger::reset`]. A ledger may carry a hard budget, in
/// which case the query that would exceed it fails with
/// [`Error::BudgetExhausted`] and is not charged.
///
/// The ledger also remembers the largest weight it has seen answered, which
/// is what a distinguishing game needs to decide whether anything nonzero
/// was ever revealed.
#[derive(Debug, Default)]
pub struct QueryLedger {
    count: AtomicU64,
    limit: Option<u64>,
    // Non-negative f64 bit patterns order the same way as the u64s they
    // reinterpret to, so fetch_max works on the raw bits.
    max_seen: AtomicU64,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(limit: u64) -> Self {
        Self {
            limit: Some(limit),
            ..Self::default()
        }
    }

    pub fn count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }

    pub fn budget(&self) -> Option<u64> {
        self.limit
    }

    pub fn reset(&self) {
        self.count.store(0, Ordering::Relaxed);
        self.max_seen.store(0, Ordering::Relaxed);
    }

    /// Largest weight returned so far (0 when nothing was queried).
    pub fn max_observed(&self) -> f64 {
        f64::from_bits(self.max_seen.load(Ordering::Relaxed))
    }

    pub(crate) fn charge(&self) -> Result<()> {
        match self.limit {
            None => {
                self.count.fetch_add(1, Ordering::Relaxed);
                Ok(())
            }
            Some(limit) => self
                .count
                .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |c| (c < limit).then_some(c + 1))
                .map(|_| ())
                .map_err(|_| Error::BudgetExhausted { limit }),
        }
    }

    pub(crate) fn observe(&self, weight: f64) {
        // the plain load keeps the common no-new-maximum case free of
        // read-modify-write traffic
        let bits = weight.to_bits();
        if weight > 0.0 && bits > self.max_seen.load(Ordering::Relaxed) {
            self.max_seen.fetch_max(bits, Ordering::Relaxed);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_refuses_without_charging() {
        let ledger = QueryLedger::with_budget(2);
        assert!(ledger.charge().is_ok());
        assert!(ledger.charge().is_ok());
        assert!(matches!(ledger.charge(), Err(Error::BudgetExhausted { limit: 2 })));
        assert_eq!(ledger.count(), 2);
    }

    #[test]
    fn max_observed_tracks_largest() {
        let ledger = QueryLedger::new();
        assert_eq!(ledger.max_observed(), 0.0);
        ledger.observe(0.5);
        ledger.observe(3.0);
        ledger.observe(1.0);
        assert_eq!(ledger.max_observed(), 3.0);
        ledger.reset();
        assert_eq!(ledger.max_observed(), 0.0);
        assert_eq!(ledger.count(), 0);
    }

    #[test]
    fn concurrent_charges_are_exact() {
        let ledger = QueryLedger::new();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for _ in 0..10_000 {
                        ledger.charge().unwrap();
                    }
                });
            }
        });
        assert_eq!(ledger.count(), 40_000);
    }
}
