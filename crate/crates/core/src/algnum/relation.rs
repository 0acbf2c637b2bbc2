//! Multiplicative dependence of two algebraic numbers.

use num_integer::Integer;

use super::algebraic::{height, monomial, AlgebraicNumber, Estimate};
use super::cyclotomic::cyclotomic_index;
use crate::error::{Error, Result};

pub const DEFAULT_EXP_BOUND: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DependenceKind {
    /// `α^a β^b = 1`
    ExactUnit,
    /// `α^a β^b` is a root of unity other than 1.
    Torsion,
}

/// `α^a β^b` is a primitive `torsion_order`-th root of unity; `a > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DependenceRelation {
    pub a: i64,
    pub b: i64,
    pub kind: DependenceKind,
    pub torsion_order: u64,
}

/// Continued-fraction convergents `p/q` of `x` with `p, q ≤ bound`.
fn convergents(x: f64, bound: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let (mut p0, mut q0, mut p1, mut q1) = (1u64, 0u64, x.floor() as u64, 1u64);
    let mut frac = x - x.floor();
    loop {
        if p1 > bound || q1 > bound {
            break;
        }
        if p1 > 0 {
            out.push((p1, q1));
        }
        if frac < 1e-12 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as u64;
        let (p2, q2) = (a.saturating_mul(p1).saturating_add(p0), a.saturating_mul(q1).saturating_add(q0));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    out
}

/// Reduced fractions `p/q` in `[lo, hi]` with `p, q ≤ bound`: convergents of
/// the midpoint first, then the rest by increasing `max(p, q)`.
fn candidates(lo: f64, hi: f64, bound: u64) -> Vec<(u64, u64)> {
    let mut swept = Vec::new();
    for q in 1..=bound {
        let p_lo = (lo * q as f64).ceil().max(1.0) as u64;
        let p_hi = ((hi * q as f64).floor()).min(bound as f64) as u64;
        for p in p_lo..=p_hi {
            if p.gcd(&q) == 1 {
                swept.push((p, q));
            }
        }
    }
    swept.sort_by_key(|&(p, q)| (p.max(q), q));
    let mut out: Vec<(u64, u64)> = convergents(0.5 * (lo + hi), bound)
        .into_iter()
        .filter(|c| swept.contains(c))
        .collect();
    for c in swept {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn check_operand(x: &AlgebraicNumber) -> Result<()> {
    if x.is_zero() {
        return Err(Error::ZeroAlgebraic);
    }
    if x.root_of_unity_order().is_some() {
        return Err(Error::RootOfUnity);
    }
    Ok(())
}

/// Exact test of `α^a β^b` against the roots of unity.
pub fn check_relation(alpha: &AlgebraicNumber, beta: &AlgebraicNumber, a: i64, b: i64) -> Result<Option<u64>> {
    let gamma = monomial(&[(alpha, a), (beta, b)])?;
    Ok(cyclotomic_index(gamma.minpoly()))
}

/// Searches for `α^a β^b ∈ μ_∞` with `0 < max(|a|, |b|) ≤ exp_bound`.
///
/// A relation forces `|a|·h(α) = |b|·h(β)`, so only ratios inside the
/// certified height-ratio interval are tried, after a cheap `|α^a β^b| = 1`
/// interval filter. Relations form a rank-one lattice, so the first hit
/// in lowest terms is the minimal one.
pub fn mult_dependent(
    alpha: &AlgebraicNumber,
    beta: &AlgebraicNumber,
    exp_bound: u64,
) -> Result<Option<DependenceRelation>> {
    if exp_bound < 1 {
        return Err(Error::InvalidBound("exp_bound must be at least 1".into()));
    }
    check_operand(alpha)?;
    check_operand(beta)?;
    let (ha, hb) = (height(alpha)?, height(beta)?);
    if ha.lo() <= 0.0 || hb.lo() <= 0.0 {
        return Err(Error::Internal("height too small to separate from zero".into()));
    }
    let (la, lb) = (alpha.ln_abs()?, beta.ln_abs()?);
    let lo = hb.lo() / ha.hi();
    let hi = hb.hi() / ha.lo();
    for (p, q) in candidates(lo, hi, exp_bound) {
        let a = p as i64;
        for b in [-(q as i64), q as i64] {
            if !log_abs_may_vanish(&la, &lb, a, b) {
                continue;
            }
            if let Some(m) = check_relation(alpha, beta, a, b)? {
                let kind = if m == 1 {
                    DependenceKind::ExactUnit
                } else {
                    DependenceKind::Torsion
                };
                return Ok(Some(DependenceRelation {
                    a,
                    b,
                    kind,
                    torsion_order: m,
                }));
            }
        }
    }
    Ok(None)
}

fn log_abs_may_vanish(la: &Estimate, lb: &Estimate, a: i64, b: i64) -> bool {
    let (a, b) = (a as f64, b as f64);
    let center = a * la.value + b * lb.value;
    let radius = a.abs() * la.err + b.abs() * lb.err + 1e-12 * (a.abs() + b.abs());
    center.abs() <= radius
}
