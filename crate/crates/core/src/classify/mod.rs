//! Exceptionality classification with re-checkable witnesses.
//!
//! A nonsingular `A` is exceptional when it has finite order, or it is
//! diagonalizable and some power `A^r` has all eigenvalues equal to powers
//! of one integer `a > 1`, or of one unit `λ ≠ ±1` of a real quadratic field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::algnum::{
    eigenvalues, euler_phi, height, monomial, mult_dependent, power, quadratic_unit_info, same_number,
    AlgebraicNumber,
};
use crate::error::{Error, Result};
use crate::matcore::{factor_int_poly, min_poly, IntMatrix, IntPoly};

pub const DEFAULT_R_CAP: u64 = 1_000_000;

/// `true` iff the minimal polynomial is squarefree.
pub fn is_diagonalizable(a: &IntMatrix) -> bool {
    min_poly(a).map(|m| m.is_squarefree()).unwrap_or(false)
}

/// Global order of `A` when finite, checked by an exact power.
pub fn finite_order(a: &IntMatrix) -> Result<Option<u64>> {
    if !is_diagonalizable(a) {
        return Ok(None);
    }
    let fac = factor_int_poly(&a.char_poly())?;
    let mut order = 1u64;
    for g in fac.irreducibles() {
        match crate::algnum::is_cyclotomic(g)? {
            Some(m) => order = order.lcm(&m),
            None => return Ok(None),
        }
    }
    if !a.pow(order).is_identity() {
        return Err(Error::Internal(format!("A^{order} is not the identity")));
    }
    Ok(Some(order))
}

/// Free rank of the group generated by the eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rank {
    Zero,
    One,
    AtLeastTwo,
}

/// `λ_i = ζ_i λ^(a_i)` with `ζ_i^r = 1`, or an independent pair.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRank {
    pub rank: Rank,
    pub generator: Option<AlgebraicNumber>,
    pub exponents: Option<Vec<i64>>,
    /// Order of each `ζ_i`; empty for rank two or more.
    pub torsion_orders: Vec<u64>,
    /// lcm of `torsion_orders`.
    pub torsion_order: u64,
    pub independent_pair: Option<(usize, usize)>,
}

fn ratio_of(rel_a: i64, rel_b: i64) -> (i128, i128) {
    // α^a β^b ∈ μ, so β ~ α^(-a/b)
    let (num, den) = if rel_b < 0 {
        (rel_a as i128, -(rel_b as i128))
    } else {
        (-(rel_a as i128), rel_b as i128)
    };
    let g = num.gcd(&den);
    (num / g, den / g)
}

/// Integers `c` with `Σ c_i a_i = gcd(a)`.
fn bezout(a: &[i64]) -> Vec<i64> {
    let mut c = vec![0i64; a.len()];
    let mut g = 0i64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if g == 0 {
            g = x;
            c[i] = 1;
            continue;
        }
        let e = g.extended_gcd(&x);
        for cj in c.iter_mut().take(i) {
            *cj *= e.x;
        }
        c[i] = e.y;
        g = e.gcd;
    }
    if g < 0 {
        c.iter_mut().for_each(|x| *x = -*x);
    }
    c
}

/// Rank of the eigenvalue group, with generator, exponents and torsion data
/// for rank at most one.
pub fn eigen_group_rank(eigs: &[AlgebraicNumber], exp_bound: u64) -> Result<GroupRank> {
    if eigs.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if eigs.iter().any(|e| e.is_zero()) {
        return Err(Error::ZeroAlgebraic);
    }
    let free: Vec<usize> = (0..eigs.len())
        .filter(|&i| eigs[i].root_of_unity_order().is_none())
        .collect();
    if free.is_empty() {
        let orders: Vec<u64> = eigs.iter().map(|e| e.root_of_unity_order().unwrap()).collect();
        return Ok(GroupRank {
            rank: Rank::Zero,
            generator: None,
            exponents: Some(vec![0; eigs.len()]),
            torsion_order: orders.iter().fold(1, |acc, o| acc.lcm(o)),
            torsion_orders: orders,
            independent_pair: None,
        });
    }
    let mut base = free[0];
    let mut best = height(&eigs[base])?.value;
    for &i in &free[1..] {
        let h = height(&eigs[i])?.value;
        if h < best {
            (base, best) = (i, h);
        }
    }
    // eigs[i] ~ eigs[base]^(q_i) modulo torsion
    let mut ratios: Vec<(i128, i128)> = vec![(0, 1); eigs.len()];
    ratios[base] = (1, 1);
    for &i in &free {
        if i == base {
            continue;
        }
        match mult_dependent(&eigs[base], &eigs[i], exp_bound)? {
            Some(rel) => ratios[i] = ratio_of(rel.a, rel.b),
            None => {
                return Ok(GroupRank {
                    rank: Rank::AtLeastTwo,
                    generator: None,
                    exponents: None,
                    torsion_orders: Vec::new(),
                    torsion_order: 1,
                    independent_pair: Some((base.min(i), base.max(i))),
                })
            }
        }
    }
    let overflow = || Error::Internal("exponent overflow".into());
    let den = ratios.iter().fold(1i128, |acc, (_, d)| acc.lcm(d));
    let scaled: Vec<i128> = ratios
        .iter()
        .map(|(n, d)| n.checked_mul(den / d).ok_or_else(overflow))
        .collect::<Result<_>>()?;
    let g = scaled.iter().fold(0i128, |acc, x| acc.gcd(x));
    let exponents: Vec<i64> = scaled
        .iter()
        .map(|x| i64::try_from(x / g).map_err(|_| overflow()))
        .collect::<Result<_>>()?;

    let generator = match exponents.iter().position(|x| x.abs() == 1) {
        Some(i) => power(&eigs[i], exponents[i])?,
        None => {
            let c = bezout(&exponents);
            let terms: Vec<(&AlgebraicNumber, i64)> =
                eigs.iter().zip(&c).filter(|(_, &ci)| ci != 0).map(|(e, &ci)| (e, ci)).collect();
            monomial(&terms)?
        }
    };
    let mut torsion_orders = Vec::with_capacity(eigs.len());
    for (e, &ai) in eigs.iter().zip(&exponents) {
        let zeta = monomial(&[(e, 1), (&generator, -ai)])?;
        let order = zeta
            .root_of_unity_order()
            .ok_or_else(|| Error::Internal(format!("{e} / λ^{ai} is not a root of unity")))?;
        torsion_orders.push(order);
    }
    Ok(GroupRank {
        rank: Rank::One,
        generator: Some(generator),
        exponents: Some(exponents),
        torsion_order: torsion_orders.iter().fold(1, |acc, o| acc.lcm(o)),
        torsion_orders,
        independent_pair: None,
    })
}

/// lcm of all `m` with `φ(m) ≤ 2d²`, capped at [`DEFAULT_R_CAP`].
pub fn default_r_bound(d: usize) -> u64 {
    let k = 2 * (d as u64).pow(2);
    // φ(m) ≥ sqrt(m/2)
    let mut acc = 1u64;
    for m in 1..=2 * k * k + 2 {
        if euler_phi(m) <= k {
            acc = acc.lcm(&m);
            if acc > DEFAULT_R_CAP {
                return DEFAULT_R_CAP;
            }
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Exceptional,
    NotExceptional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    FiniteOrder,
    IntegerPower,
    QuadraticUnit,
    NotDiagonalizable,
    RankGe2,
    Rank1Nonqualifying,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Exceptional => "exceptional",
            Verdict::NotExceptional => "not_exceptional",
        }
    }
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::FiniteOrder => "finite_order",
            Branch::IntegerPower => "integer_power",
            Branch::QuadraticUnit => "quadratic_unit",
            Branch::NotDiagonalizable => "not_diagonalizable",
            Branch::RankGe2 => "rank_ge_2",
            Branch::Rank1Nonqualifying => "rank1_nonqualifying",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `A^order = I`.
    FiniteOrder { order: u64 },
    /// `char_poly(A^r) = ∏ (x - base^(m_i))`, exponents sorted with multiplicity.
    IntegerPower {
        r: u64,
        torsion_order: u64,
        base: BigInt,
        exponents: Vec<i64>,
    },
    /// `λ_i^r = λ^(r a_i)` for the distinct eigenvalues in [`eigenvalues`] order.
    QuadraticUnit {
        r: u64,
        discriminant: BigInt,
        generator: AlgebraicNumber,
        exponents: Vec<i64>,
        torsion_orders: Vec<u64>,
    },
    /// Indices into [`eigenvalues`] of a pair with no relation within `exp_bound`.
    Independent { i: usize, j: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub exp_bound: u64,
    pub r_bound: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionalityVerdict {
    pub verdict: Verdict,
    pub branch: Branch,
    pub witness: Option<Witness>,
    pub search_bounds: SearchBounds,
}

impl ExceptionalityVerdict {
    fn new(verdict: Verdict, branch: Branch, witness: Option<Witness>, search_bounds: SearchBounds) -> Self {
        ExceptionalityVerdict {
            verdict,
            branch,
            witness,
            search_bounds,
        }
    }

    /// Re-checks the witness against `a` with exact arithmetic.
    pub fn verify(&self, a: &IntMatrix) -> Result<bool> {
        let ok = match &self.witness {
            None => match self.branch {
                Branch::NotDiagonalizable => !is_diagonalizable(a),
                _ => true,
            },
            Some(Witness::FiniteOrder { order }) => a.pow(*order).is_identity(),
            Some(Witness::IntegerPower { r, base, exponents, .. }) => {
                if exponents.iter().any(|&m| m < 0) || base <= &BigInt::one() {
                    return Ok(false);
                }
                let expected = exponents.iter().fold(IntPoly::one(), |acc, &m| {
                    acc.mul(&IntPoly::linear_root(num_traits::pow(base.clone(), m as usize)))
                });
                a.pow(*r).char_poly() == expected
            }
            Some(Witness::QuadraticUnit {
                r,
                discriminant,
                generator,
                exponents,
                ..
            }) => {
                let r = i64::try_from(*r).map_err(|_| Error::Internal("r too large".into()))?;
                let lr = power(generator, r)?;
                match quadratic_unit_info(&lr) {
                    Some(q) if q.real && q.unit && &q.discriminant == discriminant => {}
                    _ => return Ok(false),
                }
                let eigs = eigenvalues(a)?;
                if eigs.len() != exponents.len() {
                    return Ok(false);
                }
                for (e, &ai) in eigs.iter().zip(exponents) {
                    let lhs = power(e, r)?;
                    let same = if ai == 0 {
                        lhs.minpoly() == &IntPoly::linear_root(BigInt::one())
                    } else {
                        same_number(&lhs, &power(generator, r * ai)?)?
                    };
                    if !same {
                        return Ok(false);
                    }
                }
                true
            }
            Some(Witness::Independent { i, j }) => {
                let eigs = eigenvalues(a)?;
                match (eigs.get(*i), eigs.get(*j)) {
                    (Some(x), Some(y)) => mult_dependent(x, y, self.search_bounds.exp_bound)?.is_none(),
                    _ => false,
                }
            }
        };
        Ok(ok)
    }
}

/// Largest `t` with `n = b^t`, and that `b`.
fn perfect_power(n: &BigInt) -> (BigInt, u32) {
    let bits = n.bits() as u32;
    for t in (2..=bits).rev() {
        let b = n.nth_root(t);
        if num_traits::pow(b.clone(), t as usize) == *n {
            return (b, t);
        }
    }
    (n.clone(), 1)
}

/// Exceptionality decision: finite order, then diagonalizability, then the
/// rank of the eigenvalue group and the arithmetic of `λ^r`.
pub fn classify(a: &IntMatrix, exp_bound: u64, r_bound: u64) -> Result<ExceptionalityVerdict> {
    if !a.is_nonsingular() {
        return Err(Error::SingularMatrix);
    }
    if r_bound < 1 {
        return Err(Error::InvalidBound("r_bound must be at least 1".into()));
    }
    let bounds = SearchBounds { exp_bound, r_bound };
    if let Some(order) = finite_order(a)? {
        return Ok(ExceptionalityVerdict::new(
            Verdict::Exceptional,
            Branch::FiniteOrder,
            Some(Witness::FiniteOrder { order }),
            bounds,
        ));
    }
    if !is_diagonalizable(a) {
        return Ok(ExceptionalityVerdict::new(
            Verdict::NotExceptional,
            Branch::NotDiagonalizable,
            None,
            bounds,
        ));
    }
    let eigs = eigenvalues(a)?;
    let group = eigen_group_rank(&eigs, exp_bound)?;
    let verdict = match group.rank {
        Rank::Zero => return Err(Error::Internal("torsion eigenvalues without finite order".into())),
        Rank::AtLeastTwo => {
            let (i, j) = group.independent_pair.expect("pair");
            ExceptionalityVerdict::new(
                Verdict::NotExceptional,
                Branch::RankGe2,
                Some(Witness::Independent { i, j }),
                bounds,
            )
        }
        Rank::One => {
            let r = group.torsion_order;
            if r > r_bound {
                return Err(Error::BoundExceeded(format!("torsion order {r} exceeds r_bound {r_bound}")));
            }
            let generator = group.generator.expect("generator");
            let exponents = group.exponents.expect("exponents");
            let lr = power(&generator, i64::try_from(r).map_err(|_| Error::Internal("r too large".into()))?)?;
            match lr.degree() {
                1 => integer_power_verdict(a, &eigs, &lr, r, &exponents, bounds)?,
                2 => match quadratic_unit_info(&lr) {
                    Some(q) if q.real && q.unit => ExceptionalityVerdict::new(
                        Verdict::Exceptional,
                        Branch::QuadraticUnit,
                        Some(Witness::QuadraticUnit {
                            r,
                            discriminant: q.discriminant,
                            generator,
                            exponents,
                            torsion_orders: group.torsion_orders,
                        }),
                        bounds,
                    ),
                    _ => ExceptionalityVerdict::new(Verdict::NotExceptional, Branch::Rank1Nonqualifying, None, bounds),
                },
                _ => ExceptionalityVerdict::new(Verdict::NotExceptional, Branch::Rank1Nonqualifying, None, bounds),
            }
        }
    };
    if !verdict.verify(a)? {
        return Err(Error::Internal(format!("{} witness failed to verify", verdict.branch)));
    }
    Ok(verdict)
}

fn integer_power_verdict(
    a: &IntMatrix,
    eigs: &[AlgebraicNumber],
    lr: &AlgebraicNumber,
    r: u64,
    exponents: &[i64],
    bounds: SearchBounds,
) -> Result<ExceptionalityVerdict> {
    let v = lr.as_rational().expect("degree one");
    if !v.is_integer() {
        return Err(Error::Internal(format!("λ^{r} = {v} is not an integer")));
    }
    let mut v = v.to_integer();
    // the minimal-height eigenvalue has a positive exponent, so v^(a_i) integral forces a_i ≥ 0
    if v.abs() <= BigInt::one() || exponents.iter().any(|&x| x < 0) {
        return Err(Error::Internal(format!("λ^{r} = {v} with exponents {exponents:?}")));
    }
    let exps = exponents;
    // eigenvalues of A^r are v^(a_i); square once more when one is negative
    let positive = v.is_positive() || exps.iter().all(|x| x % 2 == 0);
    let power = if positive { r } else { 2 * r };
    if !positive {
        v = &v * &v;
    }
    let (base, t) = perfect_power(&v.abs());
    let fac = factor_int_poly(&a.char_poly())?;
    let mut with_mult = Vec::new();
    for (e, &ai) in eigs.iter().zip(exps) {
        let mult = fac
            .factors
            .iter()
            .find(|(g, _)| g == e.minpoly())
            .map(|(_, m)| *m)
            .ok_or_else(|| Error::Internal("eigenvalue missing from factorization".into()))?;
        with_mult.extend(std::iter::repeat(ai * t as i64).take(mult as usize));
    }
    with_mult.sort_unstable();
    Ok(ExceptionalityVerdict::new(
        Verdict::Exceptional,
        Branch::IntegerPower,
        Some(Witness::IntegerPower {
            r: power,
            torsion_order: r,
            base,
            exponents: with_mult,
        }),
        bounds,
    ))
}

/// Shorthand used by callers that only need the verdict with default bounds.
pub fn classify_default(a: &IntMatrix) -> Result<ExceptionalityVerdict> {
    classify(a, crate::algnum::DEFAULT_EXP_BOUND, default_r_bound(a.dim()))
}
