//! ord(A, N) / log N over a range of moduli.
//!
//! Run: `cargo run --release --example scan`

use matperiod::growth::ord_scan;
use matperiod::matcore::IntMatrix;

fn main() -> matperiod::Result<()> {
    let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]])?;
    let scan = ord_scan(&a, 2, 5000)?;
    println!("{} coprime moduli, {} skipped", scan.records.len(), scan.skipped);
    let mut last = f64::INFINITY;
    for (n, v) in scan.running_minimum() {
        if v < last {
            println!("new minimum {v:.5} at N = {n}");
            last = v;
        }
    }
    Ok(())
}
