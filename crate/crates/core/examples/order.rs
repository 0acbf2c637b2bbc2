//! Period of a matrix modulo N, with its certificate.
//!
//! Run: `cargo run --example order`

use matperiod::matcore::IntMatrix;
use matperiod::modorder::{order_mod, order_mod_bruteforce};
use num_bigint::BigInt;

fn main() -> matperiod::Result<()> {
    let fib = IntMatrix::from_i64(&[&[1, 1], &[1, 0]])?;
    for n in [10u64, 100, 1000, 1_000_000_007] {
        let r = order_mod(&fib, &BigInt::from(n))?;
        println!("ord(fib, {n}) = {}  (certificate verifies: {})", r.order, r.verify(&fib)?);
        for w in &r.certificate {
            println!("    p = {}: A^(ord/p) has entry ({}, {}) = {}", w.prime, w.row, w.col, w.residue);
        }
    }

    // cross-check against a baby-step giant-step search
    let slow = order_mod_bruteforce(&fib, 1000, 1_000_000)?;
    println!("bruteforce ord(fib, 1000) = {slow:?}");

    // 2 mod the Mersenne prime 2^127 - 1
    let two = IntMatrix::from_i64(&[&[2]])?;
    let m127 = (BigInt::from(1) << 127) - 1;
    println!("ord(2, 2^127 - 1) = {}", order_mod(&two, &m127)?.order);
    Ok(())
}
