//! The stream gcd(A^n - I) and its growth relative to n.
//!
//! Run: `cargo run --example gcd_stream`

use matperiod::growth::gcd_power_stream;
use matperiod::matcore::IntMatrix;

fn main() -> matperiod::Result<()> {
    for (name, a) in [
        ("cat map [[2,1],[1,1]]", IntMatrix::from_i64(&[&[2, 1], &[1, 1]])?),
        ("diag(2,3)", IntMatrix::from_i64(&[&[2, 0], &[0, 3]])?),
    ] {
        let s = gcd_power_stream(&a, 30)?;
        println!("{name}");
        for r in s.records.iter().filter(|r| r.n % 5 == 0) {
            println!("  n = {:>2}  gcd = {:<12}  log(gcd)/n = {:.4}", r.n, r.g, r.ratio);
        }
        if let Some((n, v)) = s.tail_max(21) {
            println!("  largest ratio over n = 21..30: {v:.4} at n = {n}");
        }
    }
    Ok(())
}
