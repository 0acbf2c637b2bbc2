//! Polynomial and integer factoring, eigenvalues, heights and
//! multiplicative relations.
//!
//! Run: `cargo run --example algebraic`

use matperiod::algnum::{eigenvalues, height, mult_dependent, power_minpoly};
use matperiod::matcore::{factor_int_poly, min_poly, IntMatrix, IntPoly};
use matperiod::modorder::factor_integer;
use num_bigint::BigInt;

fn main() -> matperiod::Result<()> {
    let f = IntPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 1]);
    let fac = factor_int_poly(&f)?;
    println!("{f} =");
    for (g, e) in &fac.factors {
        println!("    ({g})^{e}");
    }

    let n: BigInt = "1000000016000000063".parse().unwrap();
    println!("{n} = {}", factor_integer(&n)?);

    let a = IntMatrix::from_i64(&[&[2, 1, 0], &[1, 1, 0], &[0, 0, 3]])?;
    println!("minimal polynomial: {}", min_poly(&a)?);
    let eigs = eigenvalues(&a)?;
    for e in &eigs {
        let h = height(e)?;
        println!("eigenvalue {e}: height {:.6}, minpoly of its square {}", h.value, power_minpoly(e, 2)?);
    }
    for (i, x) in eigs.iter().enumerate() {
        for y in &eigs[i + 1..] {
            let rel = mult_dependent(x, y, 32)?;
            println!("{x} vs {y}: {rel:?}");
        }
    }
    Ok(())
}
