//! Exceptionality verdicts for a handful of matrices.
//!
//! Run: `cargo run --example classify`

use matperiod::classify::{classify_default, Witness};
use matperiod::matcore::IntMatrix;

fn main() -> matperiod::Result<()> {
    let cases: [(&str, &[&[i64]]); 6] = [
        ("fibonacci", &[&[1, 1], &[1, 0]]),
        ("rotation", &[&[0, -1], &[1, 0]]),
        ("diag(2,4)", &[&[2, 0], &[0, 4]]),
        ("diag(2,3)", &[&[2, 0], &[0, 3]]),
        ("unipotent", &[&[1, 1], &[0, 1]]),
        ("diag(-2,4)", &[&[-2, 0], &[0, 4]]),
    ];
    for (name, rows) in cases {
        let a = IntMatrix::from_i64(rows)?;
        let v = classify_default(&a)?;
        assert!(v.verify(&a)?);
        let witness = match &v.witness {
            Some(Witness::QuadraticUnit {
                r,
                generator,
                exponents,
                torsion_orders,
                ..
            }) => format!("r = {r}, eigenvalues = ζ·u^e with u = {generator}, e = {exponents:?}, ord ζ = {torsion_orders:?}"),
            Some(w) => format!("{w:?}"),
            None => String::new(),
        };
        println!("{name:<11} {:<16} {:<19} {witness}", v.verdict.as_str(), v.branch.as_str());
    }
    Ok(())
}
