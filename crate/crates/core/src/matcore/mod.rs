//! Exact integer matrices and integer polynomials.

mod factor;
mod matrix;
pub(crate) mod modp;
mod poly;

pub use factor::{factor_int_poly, is_irreducible, Factorization};
pub use matrix::IntMatrix;
pub use poly::IntPoly;


use crate::error::Result;

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.mul(b)
}

pub fn mat_pow(a: &IntMatrix, n: u64) -> IntMatrix {
    a.pow(n)
}

pub fn char_poly(a: &IntMatrix) -> IntPoly {
    a.char_poly()
}

/// Minimal polynomial over the rationals, in primitive integer form.
///
/// Built from the irreducible factors `g_i^(e_i)` of the characteristic
/// polynomial: candidate products `∏ g_i^(m_i)` with `1 ≤ m_i ≤ e_i` are tried
/// in increasing total degree and the first one annihilating `A` wins.
pub fn min_poly(a: &IntMatrix) -> Result<IntPoly> {
    let fac = factor_int_poly(&a.char_poly())?;
    let factors = &fac.factors;
    let mut candidates: Vec<Vec<u32>> = vec![vec![]];
    for (_, e) in factors {
        candidates = candidates
            .into_iter()
            .flat_map(|c| {
                (1..=*e).map(move |m| {
                    let mut c = c.clone();
                    c.push(m);
                    c
                })
            })
            .collect();
    }
    let total_degree = |c: &Vec<u32>| -> usize {
        c.iter()
            .zip(factors)
            .map(|(m, (f, _))| *m as usize * f.degree().unwrap_or(0))
            .sum()
    };
    candidates.sort_by_key(total_degree);
    for c in candidates {
        let mut p = IntPoly::one();
        for (m, (f, _)) in c.iter().zip(factors) {
            p = p.mul(&f.pow(*m));
        }
        if a.eval_poly(&p).is_zero() {
            return Ok(p.primitive_part());
        }
    }
    unreachable!("the characteristic polynomial annihilates A")
}
