//! Sturm sequences over dyadic points and unit-circle root counting.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::interval::Dyadic;
use crate::matcore::IntPoly;

/// Sign of `f` at a dyadic point, computed exactly.
pub(crate) fn sign_at(f: &IntPoly, x: &Dyadic) -> i32 {
    let Some(n) = f.degree() else { return 0 };
    let (m, e) = (x.mant(), x.exp());
    let v = if e >= 0 {
        f.eval(&(m << e as usize))
    } else {
        // 2^(-e·n) f(m / 2^(-e)) = Σ c_i m^i 2^(-e(n-i))
        let k = (-e) as usize;
        let mut acc = BigInt::zero();
        let mut mp = BigInt::one();
        for (i, c) in f.coeffs().iter().enumerate() {
            acc += c * &mp << (k * (n - i));
            mp *= m;
        }
        acc
    };
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Divides out the positive content, keeping the sign.
fn shrink(f: IntPoly) -> IntPoly {
    let c = f.content();
    if c.is_zero() || c.is_one() {
        return f;
    }
    IntPoly::new(f.coeffs().iter().map(|x| x / &c).collect())
}

/// Sturm sequence `f, f', -rem(f, f'), …` with positive rescalings only.
pub(crate) fn sturm_sequence(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![shrink(f.clone()), shrink(f.derivative())];
    while !seq[seq.len() - 1].is_zero() && seq[seq.len() - 1].degree() != Some(0) {
        let a = &seq[seq.len() - 2];
        let b = &seq[seq.len() - 1];
        let (_, r, m) = a.pseudo_divrem(b).expect("nonzero divisor");
        // lc(b)^m a = q b + r, so -rem(a, b) has the sign of -r·lc(b)^m
        let flip = b.lead().is_negative() && m % 2 == 1;
        let next = if flip { r } else { r.neg() };
        if next.is_zero() {
            break;
        }
        seq.push(shrink(next));
    }
    seq
}

fn sign_changes(seq: &[IntPoly], x: &Dyadic) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of a squarefree `f` in the closed interval `[lo, hi]`.
pub(crate) fn count_real_roots(f: &IntPoly, lo: &Dyadic, hi: &Dyadic) -> usize {
    if f.degree().unwrap_or(0) == 0 || lo > hi {
        return 0;
    }
    let seq = sturm_sequence(f);
    let half_open = sign_changes(&seq, lo) - sign_changes(&seq, hi);
    half_open + usize::from(sign_at(f, lo) == 0)
}

/// For a reciprocal `f` of even degree `2m`, the `g` of degree `m` with
/// `f(x) = x^m g(x + 1/x)`.
pub(crate) fn trace_polynomial(f: &IntPoly) -> Option<IntPoly> {
    let n = f.degree()?;
    if n % 2 == 1 || f.reversed() != *f {
        return None;
    }
    let m = n / 2;
    // D_0 = 2, D_1 = t, D_{k+1} = t D_k - D_{k-1}, with D_k(x + 1/x) = x^k + x^-k
    let t = IntPoly::x();
    let mut d_prev = IntPoly::from_i64(&[2]);
    let mut d_cur = t.clone();
    let mut g = IntPoly::constant(f.coeff(m));
    for k in 1..=m {
        if k > 1 {
            let next = t.mul(&d_cur).sub(&d_prev);
            d_prev = std::mem::replace(&mut d_cur, next);
        }
        g = g.add(&d_cur.scale(&f.coeff(m + k)));
    }
    Some(g)
}

/// Number of roots on the unit circle of an irreducible integer polynomial.
///
/// Irreducible polynomials with such a root are reciprocal; for those of
/// degree `2m` the unit-circle roots pair up with the roots of the trace
/// polynomial in the open interval `(-2, 2)`.
pub(crate) fn unit_circle_roots_irreducible(f: &IntPoly) -> usize {
    match f.degree() {
        None | Some(0) => 0,
        Some(1) => usize::from(f.coeff(0).abs() == f.coeff(1).abs()),
        Some(_) => match trace_polynomial(f) {
            None => 0,
            Some(g) => {
                let (lo, hi) = (Dyadic::from_i64(-2), Dyadic::from_i64(2));
                let closed = count_real_roots(&g, &lo, &hi);
                let ends = usize::from(sign_at(&g, &lo) == 0) + usize::from(sign_at(&g, &hi) == 0);
                2 * (closed - ends)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn counts_real_roots() {
        // (x-1)(x-2)(x-3)
        let f = p(&[-6, 11, -6, 1]);
        let c = |a: f64, b: f64| count_real_roots(&f, &Dyadic::from_f64(a), &Dyadic::from_f64(b));
        assert_eq!(c(0.0, 10.0), 3);
        assert_eq!(c(1.5, 2.5), 1);
        assert_eq!(c(1.0, 2.0), 2);
        assert_eq!(c(3.5, 4.0), 0);
        // x^2 + 1 has none, x^2 - 2 has two
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &Dyadic::from_i64(-9), &Dyadic::from_i64(9)), 0);
        assert_eq!(count_real_roots(&p(&[-2, 0, 1]), &Dyadic::from_i64(-9), &Dyadic::from_i64(9)), 2);
    }

    #[test]
    fn negative_leading_coefficients() {
        let f = p(&[6, -11, 6, -1]);
        assert_eq!(count_real_roots(&f, &Dyadic::from_i64(0), &Dyadic::from_i64(10)), 3);
        let g = p(&[1, 3, 0, -2]); // -2x^3 + 3x + 1 has three real roots
        assert_eq!(count_real_roots(&g, &Dyadic::from_i64(-5), &Dyadic::from_i64(5)), 3);
    }

    #[test]
    fn trace_polynomial_of_cyclotomics() {
        // Φ_5 = x^4 + x^3 + x^2 + x + 1 = x^2 (t^2 + t - 1)
        assert_eq!(trace_polynomial(&p(&[1, 1, 1, 1, 1])), Some(p(&[-1, 1, 1])));
        assert_eq!(unit_circle_roots_irreducible(&p(&[1, 1, 1, 1, 1])), 4);
        assert_eq!(unit_circle_roots_irreducible(&p(&[1, 0, 1])), 2);
        assert_eq!(unit_circle_roots_irreducible(&p(&[1, 1])), 1);
    }

    #[test]
    fn salem_quartic_has_two_circle_roots() {
        // x^4 - x^3 - x^2 - x + 1: one root > 1, its inverse, two on the circle
        assert_eq!(unit_circle_roots_irreducible(&p(&[1, -1, -1, -1, 1])), 2);
        // x^2 - 3x + 1 is reciprocal with real roots off the circle
        assert_eq!(unit_circle_roots_irreducible(&p(&[1, -3, 1])), 0);
        assert_eq!(unit_circle_roots_irreducible(&p(&[-1, -1, 1])), 0);
    }
}
