//! Moduli N_k = gcd(A^(rk) - I) on which A has period dividing rk, and the
//! Kronecker product with a swap.
//!
//! Run: `cargo run --example small_periods`

use matperiod::classify::classify_default;
use matperiod::growth::{kronecker, small_period_sequence};
use matperiod::matcore::IntMatrix;

fn main() -> matperiod::Result<()> {
    let cat = IntMatrix::from_i64(&[&[2, 1], &[1, 1]])?;
    for row in small_period_sequence(&cat, 1, 12)? {
        println!("k = {:>2}  N_k = {:<8}  ord = {:<3} ord/log N_k = {:.4}", row.k, row.modulus, row.order, row.ratio);
    }

    let swap = IntMatrix::from_i64(&[&[0, 1], &[1, 0]])?;
    let k = kronecker(&cat, &swap);
    let v = classify_default(&k)?;
    println!("cat ⊗ swap: {} / {}", v.verdict, v.branch);
    Ok(())
}
