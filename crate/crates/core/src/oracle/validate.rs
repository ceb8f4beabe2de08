use serde::Serialize;

use super::{MetricInstance, VertexId};
use crate::error::{Error, Result};

pub const DEFAULT_VALIDATION_CAP: usize = 500;
const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum MetricCheck {
    Ok,
    /// `w(a, via) + w(via, b) < lambda * w(a, b)` beyond tolerance.
    Violation {
        a: VertexId,
        b: VertexId,
        via: VertexId,
    },
}

impl MetricCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, MetricCheck::Ok)
    }
}

/// Exhaustive relaxed-triangle check at the instance's declared lambda.
///
/// Runs off-ledger: this is test support, not part of any algorithm's
/// query budget. Refuses instances above [`DEFAULT_VALIDATION_CAP`].
pub fn validate_lambda_metric(instance: &MetricInstance) -> Result<MetricCheck> {
    validate_lambda_metric_with(instance, DEFAULT_VALIDATION_CAP, DEFAULT_TOLERANCE)
}

pub fn validate_lambda_metric_with(instance: &MetricInstance, cap: usize, tolerance: f64) -> Result<MetricCheck> {
    let n = instance.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "lambda-metric validation",
            n,
            cap,
        });
    }
    let lambda = instance.lambda();
    let dense = instance.to_matrix();
    let w = |u: usize, v: usize| dense.raw_weight(u, v);
    for a in 0..n {
        for b in a + 1..n {
            let long = lambda * w(a, b) - tolerance;
            for via in (0..n).filter(|&c| c != a && c != b) {
                if w(a, via) + w(via, b) < long {
                    return Ok(MetricCheck::Violation { a, b, via });
                }
            }
        }
    }
    Ok(MetricCheck::Ok)
}
