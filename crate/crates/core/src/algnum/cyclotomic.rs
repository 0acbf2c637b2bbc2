//! Cyclotomic polynomials and detection.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matcore::{is_irreducible, IntPoly};
use crate::modorder::factor_u64;

pub fn euler_phi(m: u64) -> u64 {
    factor_u64(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

fn mobius(m: u64) -> i32 {
    let fac = factor_u64(m);
    if fac.iter().any(|&(_, e)| e > 1) {
        0
    } else if fac.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Φ_m = ∏_{d | m} (x^d - 1)^μ(m/d)`
pub fn cyclotomic_poly(m: u64) -> IntPoly {
    assert!(m >= 1);
    let x_d_minus_1 = |d: u64| IntPoly::monomial(d as usize).sub(&IntPoly::one());
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in (1..=m).filter(|d| m % d == 0) {
        match mobius(m / d) {
            1 => num = num.mul(&x_d_minus_1(d)),
            -1 => den = den.mul(&x_d_minus_1(d)),
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("nonzero divisor")
        .expect("exact division")
}

/// `m` with `f = ±Φ_m`, skipping the irreducibility check.
pub(crate) fn cyclotomic_index(f: &IntPoly) -> Option<u64> {
    let n = f.degree()? as u64;
    if n == 0 || !f.coeff(0).abs().is_one() || !f.lead().abs().is_one() {
        return None;
    }
    let f = f.primitive_part();
    if n > 1 && f.reversed() != f {
        return None;
    }
    // φ(m) ≥ sqrt(m/2), so φ(m) = n forces m ≤ 2n²
    (1..=2 * n * n + 2)
        .filter(|&m| euler_phi(m) == n)
        .find(|&m| cyclotomic_poly(m) == f)
}

/// Returns `m` when the irreducible `f` is the `m`-th cyclotomic polynomial.
pub fn is_cyclotomic(f: &IntPoly) -> Result<Option<u64>> {
    if !is_irreducible(&f.primitive_part())? || !f.content().is_one() {
        return Err(Error::Reducible);
    }
    Ok(cyclotomic_index(f))
}
