//! Try to tell the all-zero instance from a hidden star under a query
//! budget smaller than the number of vertices.

use linsample::experiments::{cmd_hardness_demo, hardness_budget, HardnessRequest};

fn main() -> linsample::Result<()> {
    for delta in [0.0, 0.1, 0.5] {
        let req = HardnessRequest {
            n: 2000,
            delta,
            trials: 400,
            seed: 0,
            epsilon: 0.1,
        };
        let report = cmd_hardness_demo(&req)?;
        println!(
            "budget {:>4} queries: guessed right {:.1}% of the time",
            hardness_budget(req.n, delta),
            100.0 * report.aggregate.success_rate
        );
    }
    Ok(())
}
