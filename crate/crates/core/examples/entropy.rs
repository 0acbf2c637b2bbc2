//! Sum of log|λ| over the expanding eigenvalues.
//!
//! Run: `cargo run --example entropy`

use matperiod::growth::entropy;
use matperiod::matcore::IntMatrix;

fn main() -> matperiod::Result<()> {
    for rows in [
        &[&[2i64, 1][..], &[1, 1]][..],
        &[&[2, 0], &[0, 3]],
        &[&[0, 0, 1], &[1, 0, -1], &[0, 1, 0]],
    ] {
        let a = IntMatrix::from_i64(rows)?;
        let e = entropy(&a)?;
        println!("{rows:?}: eta = {:.9} ± {:.1e}", e.eta.value, e.eta.err);
        for r in &e.expanding_roots {
            println!("    root {} (x{}), log|root| = {:.9}", r.root, r.multiplicity, r.log_modulus.value);
        }
    }
    Ok(())
}
