//! Build a few instances, check the relaxed triangle inequality and watch
//! the ledger count every weight query.

use linsample::oracle::{validate_lambda_metric, MetricInstance, QueryLedger};

fn main() -> linsample::Result<()> {
    let points = vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 4.0]];
    let triangle = MetricInstance::euclidean(&points)?;
    let ledger = QueryLedger::new();
    println!("w(1,2) = {}", triangle.weight_query(1, 2, &ledger)?);
    println!("w(1,2) again = {}", triangle.weight_query(1, 2, &ledger)?);
    println!("queries so far: {}", ledger.count());

    // squared distances are a 1/2-metric, not a metric
    let squared = MetricInstance::line(6).power_wrap(2.0)?;
    println!(
        "squared line, lambda = {}: {:?}",
        squared.lambda(),
        validate_lambda_metric(&squared)?
    );
    let claimed = squared.clone().with_lambda(1.0)?;
    println!(
        "same weights claimed as a metric: {:?}",
        validate_lambda_metric(&claimed)?
    );

    let budgeted = QueryLedger::with_budget(2);
    let line = MetricInstance::line(10);
    for v in 1..4 {
        match line.weight_query(0, v, &budgeted) {
            Ok(w) => println!("w(0,{v}) = {w}"),
            Err(e) => println!("w(0,{v}) refused: {e}"),
        }
    }
    Ok(())
}
