//! Algebraic numbers as (irreducible minimal polynomial, isolating box).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::cyclotomic_index;
use super::interval::{ComplexBox, Dyadic, Interval};
use super::roots::{is_refined, isolate_squarefree, refine_root, within, MAX_PREC};
use super::sturm::{count_real_roots, unit_circle_roots_irreducible};
use crate::error::{Error, Result};
use crate::matcore::{factor_int_poly, IntMatrix, IntPoly};
use crate::modorder::factor_integer;

/// Default working precision for freshly isolated roots.
pub const DEFAULT_PREC: u32 = 64;

/// Target absolute error for heights and log Mahler measures.
pub const HEIGHT_TOLERANCE: f64 = 1.0 / (1u64 << 20) as f64;

/// A float with an absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub err: f64,
}

impl Estimate {
    pub fn from_bounds(lo: f64, hi: f64) -> Self {
        Estimate {
            value: 0.5 * (lo + hi),
            err: 0.5 * (hi - lo),
        }
    }

    pub fn lo(&self) -> f64 {
        self.value - self.err
    }

    pub fn hi(&self) -> f64 {
        self.value + self.err
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo() <= x && x <= self.hi()
    }
}

/// A root of an irreducible integer polynomial, singled out by a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    root_box: ComplexBox,
    prec_bits: u32,
}

impl AlgebraicNumber {
    pub fn from_integer(n: &BigInt) -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::linear_root(n.clone()),
            root_box: ComplexBox::from_int(n),
            prec_bits: DEFAULT_PREC,
        }
    }

    /// Real roots get a degenerate imaginary part, certified with a Sturm count.
    pub(crate) fn from_parts(minpoly: IntPoly, root_box: ComplexBox, prec_bits: u32) -> Self {
        let mut root_box = root_box;
        if root_box.im.contains_zero()
            && (minpoly.degree() == Some(1)
                || count_real_roots(&minpoly, &root_box.re.lo, &root_box.re.hi) == 1)
        {
            root_box.im = Interval::zero();
        }
        AlgebraicNumber {
            minpoly,
            root_box,
            prec_bits,
        }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn root_box(&self) -> &ComplexBox {
        &self.root_box
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.minpoly == IntPoly::x()
    }

    pub fn is_real(&self) -> bool {
        self.root_box.im.lo.is_zero() && self.root_box.im.hi.is_zero()
    }

    /// Exact value when the degree is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.degree() == 1)
            .then(|| BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
    }

    /// `m` when this is a primitive `m`-th root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        cyclotomic_index(&self.minpoly)
    }

    /// Center of the box as floats.
    pub fn approx(&self) -> (f64, f64) {
        self.root_box.center_f64()
    }

    /// Same number with a box of relative width about `2^-prec`.
    pub fn refine(&self, prec: u32) -> Result<AlgebraicNumber> {
        if is_refined(&self.root_box, prec) {
            return Ok(self.clone());
        }
        let b = refine_root(&self.minpoly, &self.root_box, prec)?;
        Ok(AlgebraicNumber::from_parts(self.minpoly.clone(), b, prec.max(self.prec_bits)))
    }

    /// All roots of the minimal polynomial, this one included.
    pub fn conjugates(&self) -> Result<Vec<AlgebraicNumber>> {
        isolate_irreducible(&self.minpoly, self.prec_bits)
    }

    /// `|α|^2` as an interval at the given precision.
    pub(crate) fn abs_sqr(&self, prec: u32) -> Result<Interval> {
        Ok(self.refine(prec)?.root_box.norm_sqr(prec + 16))
    }

    /// Bounds on `ln|α|` for nonzero `α`.
    pub fn ln_abs(&self) -> Result<Estimate> {
        if self.is_zero() {
            return Err(Error::ZeroAlgebraic);
        }
        let mut prec = DEFAULT_PREC;
        loop {
            if let Some((lo, hi)) = self.abs_sqr(prec)?.ln_bounds() {
                if hi - lo <= HEIGHT_TOLERANCE {
                    return Ok(Estimate::from_bounds(0.5 * lo, 0.5 * hi));
                }
            }
            if prec >= MAX_PREC {
                return Err(Error::PrecisionExhausted(prec));
            }
            prec *= 2;
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.approx();
        if self.is_real() {
            write!(f, "{re:.6} (root of {})", self.minpoly)
        } else {
            write!(f, "{re:.6}{im:+.6}i (root of {})", self.minpoly)
        }
    }
}

fn isolate_irreducible(g: &IntPoly, prec: u32) -> Result<Vec<AlgebraicNumber>> {
    let (boxes, used) = isolate_squarefree(g, prec)?;
    let mut out: Vec<AlgebraicNumber> = boxes
        .into_iter()
        .map(|b| AlgebraicNumber::from_parts(g.clone(), b, used))
        .collect();
    out.sort_by(|a, b| {
        let (ar, ai) = a.approx();
        let (br, bi) = b.approx();
        br.total_cmp(&ar).then(bi.total_cmp(&ai))
    });
    Ok(out)
}

/// Every complex root of a squarefree `f`, each tagged with its irreducible factor.
pub fn isolate_roots(f: &IntPoly, prec_bits: u32) -> Result<Vec<AlgebraicNumber>> {
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let fac = factor_int_poly(f)?;
    let mut prec = prec_bits.max(8);
    loop {
        let mut roots = Vec::new();
        for g in fac.irreducibles() {
            roots.extend(isolate_irreducible(g, prec)?);
        }
        let disjoint = (0..roots.len()).all(|i| {
            (i + 1..roots.len()).all(|j| !roots[i].root_box.intersects(&roots[j].root_box))
        });
        if disjoint {
            return Ok(roots);
        }
        if prec >= MAX_PREC {
            return Err(Error::PrecisionExhausted(prec));
        }
        prec *= 2;
    }
}

/// All eigenvalues of `a`, one entry per distinct eigenvalue.
pub fn eigenvalues(a: &IntMatrix) -> Result<Vec<AlgebraicNumber>> {
    let cp = a.char_poly();
    isolate_roots(&cp.squarefree_part()?, DEFAULT_PREC)
}

/// Where a root lies relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CircleSide {
    Inside,
    On,
    /// With bounds on `ln|λ|`.
    Outside(Estimate),
}

/// Roots of an irreducible `g`, each placed strictly inside, on, or outside
/// the unit circle; `ln|λ|` of the outside ones to within `tol`.
pub fn root_moduli(g: &IntPoly, tol: f64) -> Result<Vec<(AlgebraicNumber, CircleSide)>> {
    let n = g.deg()?;
    if n == 1 {
        let root = isolate_irreducible(g, DEFAULT_PREC)?.remove(0);
        let (num, den) = (g.coeff(0).abs(), g.lead().abs());
        let side = match num.cmp(&den) {
            std::cmp::Ordering::Less => CircleSide::Inside,
            std::cmp::Ordering::Equal => CircleSide::On,
            std::cmp::Ordering::Greater => {
                let (num_lo, num_hi) = Dyadic::from_int(&num).ln_bounds();
                let (den_lo, den_hi) = Dyadic::from_int(&den).ln_bounds();
                CircleSide::Outside(Estimate::from_bounds(num_lo - den_hi, num_hi - den_lo))
            }
        };
        return Ok(vec![(root, side)]);
    }
    let on_circle = unit_circle_roots_irreducible(g);
    let mut prec = DEFAULT_PREC;
    loop {
        let roots = isolate_irreducible(g, prec)?;
        let one = Dyadic::from_i64(1);
        let mut sides = Vec::with_capacity(n);
        let mut ambiguous = 0;
        let mut width = 0.0;
        for r in &roots {
            let r2 = r.root_box.norm_sqr(prec + 16);
            if r2.lo > one {
                let (l, h) = r2.ln_bounds().expect("positive");
                width += 0.5 * (h - l);
                sides.push(CircleSide::Outside(Estimate::from_bounds(0.5 * l, 0.5 * h)));
            } else if r2.hi < one {
                sides.push(CircleSide::Inside);
            } else {
                ambiguous += 1;
                sides.push(CircleSide::On);
            }
        }
        // Unit-circle roots always look ambiguous; any extra means more precision.
        if ambiguous == on_circle && width <= tol {
            return Ok(roots.into_iter().zip(sides).collect());
        }
        if prec >= MAX_PREC {
            return Err(Error::PrecisionExhausted(prec));
        }
        prec *= 2;
    }
}

/// Bounds on `ln M(g)` for irreducible `g`, with `M` the Mahler measure.
fn log_mahler_irreducible(g: &IntPoly, tol: f64) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = Dyadic::from_int(&g.lead().abs()).ln_bounds();
    if g.deg()? > 1 && unit_circle_roots_irreducible(g) == g.deg()? {
        return Ok((lo.max(0.0), hi));
    }
    for (_, side) in root_moduli(g, tol)? {
        if let CircleSide::Outside(e) = side {
            lo += e.lo();
            hi += e.hi();
        }
    }
    Ok((lo.max(0.0), hi))
}

/// `ln M(f)` for any nonzero integer polynomial, counting multiplicity.
pub fn log_mahler_measure(f: &IntPoly) -> Result<Estimate> {
    let fac = factor_int_poly(f)?;
    let total: u32 = fac.factors.iter().map(|(_, e)| e).sum();
    let tol = HEIGHT_TOLERANCE / (2.0 * total.max(1) as f64);
    let (mut lo, mut hi) = Dyadic::from_int(&fac.content).ln_bounds();
    for (g, e) in &fac.factors {
        let (l, h) = log_mahler_irreducible(g, tol)?;
        lo += *e as f64 * l;
        hi += *e as f64 * h;
    }
    Ok(Estimate::from_bounds(lo.max(0.0), hi.max(0.0)))
}

/// Absolute logarithmic Weil height `ln M(minpoly) / deg`.
pub fn height(alpha: &AlgebraicNumber) -> Result<Estimate> {
    let n = alpha.degree() as f64;
    if alpha.root_of_unity_order().is_some() || alpha.is_zero() {
        return Ok(Estimate {
            value: 0.0,
            err: 0.0,
        });
    }
    let (lo, hi) = log_mahler_irreducible(&alpha.minpoly, HEIGHT_TOLERANCE)?;
    Ok(Estimate::from_bounds(lo / n, hi / n))
}

/// Picks the root of some irreducible factor of `poly` that lies in the box
/// produced by `target(prec)`, raising precision until exactly one matches.
fn select_root<F>(poly: &IntPoly, mut target: F) -> Result<AlgebraicNumber>
where
    F: FnMut(u32) -> Result<ComplexBox>,
{
    let fac = factor_int_poly(&poly.squarefree_part()?)?;
    let mut prec = DEFAULT_PREC;
    loop {
        let t = target(prec)?;
        let mut hits = Vec::new();
        for g in fac.irreducibles() {
            // a single rational root needs no isolation
            for r in isolate_irreducible(g, prec)? {
                if r.root_box.intersects(&t) {
                    hits.push(r);
                }
            }
        }
        match hits.len() {
            0 => return Err(Error::Internal("no root inside the target box".into())),
            1 => return Ok(hits.pop().unwrap()),
            _ if prec >= MAX_PREC => return Err(Error::PrecisionExhausted(prec)),
            _ => prec *= 2,
        }
    }
}

/// Polynomial whose roots are the `n`-th powers of the roots of `f` (`n > 0`).
///
/// For monic `F` this is the characteristic polynomial of `C_F^n`, which
/// equals `Res_y(F(y), x - y^n)` up to sign.
pub(crate) fn power_poly(f: &IntPoly, n: u64) -> Result<IntPoly> {
    let l = f.lead();
    let monic = f.monic_transform();
    let c = IntMatrix::companion(&monic)?;
    let h = c.pow(n).char_poly();
    // roots of h are (l α)^n
    Ok(if l.is_one() {
        h
    } else {
        h.scale_var(&num_traits::pow(l, n as usize)).primitive_part()
    })
}

/// Newton power sums `p_1..p_k` of the roots of a monic integer polynomial.
fn power_sums(f: &IntPoly, k: usize) -> Vec<BigInt> {
    let n = f.degree().unwrap_or(0);
    // a_i = coefficient of x^(n-i)
    let a: Vec<BigInt> = (0..=n).map(|i| f.coeff(n - i)).collect();
    let mut p = vec![BigInt::zero(); k + 1];
    for j in 1..=k {
        let mut s = BigInt::zero();
        for i in 1..j.min(n + 1) {
            s += &a[i] * &p[j - i];
        }
        if j <= n {
            s += &a[j] * BigInt::from(j);
        }
        p[j] = -s;
    }
    p
}

/// Monic polynomial of degree `k` with the given power sums.
fn from_power_sums(p: &[BigInt], k: usize) -> IntPoly {
    let mut e = vec![BigInt::one()];
    for j in 1..=k {
        let mut s = BigInt::zero();
        for i in 1..=j {
            let t = &e[j - i] * &p[i];
            if i % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        let (q, r) = s.div_rem(&BigInt::from(j));
        debug_assert!(r.is_zero());
        e.push(q);
    }
    let coeffs = (0..=k)
        .map(|i| {
            let c = e[k - i].clone();
            if (k - i) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

/// Polynomial whose roots are all products `α_i β_j` of roots of `f` and `g`.
///
/// Equals `Res_y(f(y), y^deg(g) g(x/y))` up to a constant; computed from
/// power sums, `p_k(αβ) = p_k(α) p_k(β)`.
pub(crate) fn product_poly(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    let (m, n) = (f.deg()?, g.deg()?);
    let (lf, lg) = (f.lead(), g.lead());
    let k = m * n;
    let pf = power_sums(&f.monic_transform(), k);
    let pg = power_sums(&g.monic_transform(), k);
    let p: Vec<BigInt> = pf.iter().zip(&pg).map(|(a, b)| a * b).collect();
    let h = from_power_sums(&p, k);
    // roots of h are (lf α)(lg β)
    let scale = lf * lg;
    Ok(if scale.is_one() {
        h
    } else {
        h.scale_var(&scale).primitive_part()
    })
}

/// `α^n` as an algebraic number.
pub fn power(alpha: &AlgebraicNumber, n: i64) -> Result<AlgebraicNumber> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if alpha.is_zero() {
        return Err(Error::ZeroAlgebraic);
    }
    if n == 1 {
        return Ok(alpha.clone());
    }
    let base = if n < 0 {
        alpha.minpoly.reversed().primitive_part()
    } else {
        alpha.minpoly.clone()
    };
    let poly = power_poly(&base, n.unsigned_abs())?;
    select_root(&poly, |prec| {
        let a = alpha.refine(prec)?;
        a.root_box
            .pow(n, prec + 16)
            .ok_or(Error::Internal("box around zero".into()))
    })
}

/// Irreducible minimal polynomial of `α^n`.
pub fn power_minpoly(alpha: &AlgebraicNumber, n: i64) -> Result<IntPoly> {
    Ok(power(alpha, n)?.minpoly)
}

/// `∏ α_i^(e_i)` as an algebraic number.
pub fn monomial(terms: &[(&AlgebraicNumber, i64)]) -> Result<AlgebraicNumber> {
    let mut acc: Option<AlgebraicNumber> = None;
    for &(alpha, e) in terms {
        if e == 0 {
            continue;
        }
        let next = power(alpha, e)?;
        acc = Some(match acc {
            None => next,
            Some(prev) => {
                let poly = product_poly(&prev.minpoly, &next.minpoly)?;
                select_root(&poly, |prec| {
                    let a = prev.refine(prec)?;
                    let b = next.refine(prec)?;
                    Ok(a.root_box.mul(&b.root_box, prec + 16))
                })?
            }
        });
    }
    Ok(acc.unwrap_or_else(|| AlgebraicNumber::from_integer(&BigInt::one())))
}

/// Exact equality of two algebraic numbers.
pub fn same_number(x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<bool> {
    if x.minpoly != y.minpoly {
        return Ok(false);
    }
    let mut prec = x.prec_bits.max(y.prec_bits).max(DEFAULT_PREC);
    loop {
        let (xr, yr) = (x.refine(prec)?, y.refine(prec)?);
        if !xr.root_box.intersects(&yr.root_box) {
            return Ok(false);
        }
        // each original box isolates one root of the shared minimal polynomial
        if within(&yr.root_box, &x.root_box) || within(&xr.root_box, &y.root_box) {
            return Ok(true);
        }
        if prec >= MAX_PREC {
            return Err(Error::PrecisionExhausted(prec));
        }
        prec *= 2;
    }
}

/// Arithmetic data of a quadratic algebraic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticInfo {
    /// Discriminant of the quadratic field.
    pub discriminant: BigInt,
    /// `α·ᾱ` as a reduced fraction.
    pub norm: BigRational,
    pub real: bool,
    pub unit: bool,
}

fn squarefree_kernel(n: &BigInt) -> BigInt {
    let fac = factor_integer(&n.abs()).expect("nonzero");
    let core = fac
        .factors()
        .iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigInt::one(), |acc, (p, _)| acc * p);
    if n.is_negative() {
        -core
    } else {
        core
    }
}

/// Field discriminant, norm, realness and unit status for degree 2; `None` otherwise.
pub fn quadratic_unit_info(alpha: &AlgebraicNumber) -> Option<QuadraticInfo> {
    if alpha.degree() != 2 {
        return None;
    }
    let f = &alpha.minpoly;
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    let d = squarefree_kernel(&disc);
    let field_disc = if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
        d
    } else {
        d * 4
    };
    let norm = BigRational::new(c, a.clone());
    let unit = a.abs().is_one() && norm.abs().is_one();
    Some(QuadraticInfo {
        real: field_disc.is_positive(),
        discriminant: field_disc,
        norm,
        unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn root(f: &[i64], re: f64) -> AlgebraicNumber {
        isolate_roots(&p(f), DEFAULT_PREC)
            .unwrap()
            .into_iter()
            .find(|r| (r.approx().0 - re).abs() < 1e-3)
            .unwrap()
    }

    #[test]
    fn isolation_marks_real_roots() {
        let roots = isolate_roots(&p(&[-1, 0, 1]), 64).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.is_real() && r.degree() == 1));
        let roots = isolate_roots(&p(&[1, 0, 1]), 64).unwrap();
        assert!(roots.iter().all(|r| !r.is_real() && !r.root_box.im.contains_zero()));
        let roots = isolate_roots(&p(&[-1, -1, 1]), 64).unwrap();
        assert!(roots.iter().all(|r| r.is_real()));
    }

    #[test]
    fn isolation_mixed_factors_are_tagged() {
        // (x^2 - 2)(x - 3)(x^2 + x + 1)
        let f = p(&[-2, 0, 1]).mul(&p(&[-3, 1])).mul(&p(&[1, 1, 1]));
        let roots = isolate_roots(&f, 64).unwrap();
        assert_eq!(roots.len(), 5);
        for r in &roots {
            assert!(r.minpoly().divides(&f).unwrap());
        }
        assert_eq!(roots.iter().filter(|r| r.degree() == 2).count(), 4);
    }

    #[test]
    fn heights() {
        let two = AlgebraicNumber::from_integer(&BigInt::from(2));
        assert!(height(&two).unwrap().contains(2f64.ln()));
        let phi = root(&[-1, -1, 1], 1.618);
        let h = height(&phi).unwrap();
        let expected = 0.5 * ((1.0 + 5f64.sqrt()) / 2.0).ln();
        assert!((h.value - expected).abs() <= h.err + 1e-12);
        assert!(h.err <= HEIGHT_TOLERANCE);
        let omega = root(&[1, 1, 1], -0.5);
        assert_eq!(height(&omega).unwrap().value, 0.0);
    }

    #[test]
    fn salem_height_uses_only_outside_roots() {
        // Lehmer's polynomial: Mahler measure 1.17628081825991750...
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = log_mahler_measure(&f).unwrap();
        assert!((m.value - 1.176_280_818_259_917_5f64.ln()).abs() < 1e-6);
    }

    #[test]
    fn power_minpolys() {
        let two = AlgebraicNumber::from_integer(&BigInt::from(2));
        assert_eq!(power_minpoly(&two, 3).unwrap(), p(&[-8, 1]));
        let phi = root(&[-1, -1, 1], 1.618);
        assert_eq!(power_minpoly(&phi, 2).unwrap(), p(&[1, -3, 1]));
        assert_eq!(power_minpoly(&phi, -1).unwrap(), p(&[-1, 1, 1]));
        assert_eq!(power_minpoly(&phi, 1).unwrap(), p(&[-1, -1, 1]));
        // i^2 = -1
        let i = root(&[1, 0, 1], 0.0);
        assert_eq!(power_minpoly(&i, 2).unwrap(), p(&[1, 1]));
        assert_eq!(power(&two, 0).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn power_poly_matches_sylvester_resultant() {
        // Res_y(f(y), x - y^2) evaluated at integer points
        let f = p(&[3, -1, 0, 2]);
        let composed = power_poly(&f, 2).unwrap();
        for x in -3i64..=3 {
            let lin = IntPoly::new(vec![BigInt::from(x), BigInt::zero(), BigInt::from(-1)]);
            let res = f.resultant(&lin).unwrap();
            let val = composed.eval(&BigInt::from(x));
            // both vanish together and are proportional
            assert_eq!(res.is_zero(), val.is_zero());
            if !res.is_zero() {
                let ratio = BigRational::new(res, val);
                let r0 = BigRational::new(
                    f.resultant(&IntPoly::from_i64(&[0, 0, -1])).unwrap(),
                    composed.eval(&BigInt::zero()),
                );
                assert_eq!(ratio, r0);
            }
        }
    }

    #[test]
    fn product_poly_roots() {
        // roots of x^2 - 2 times roots of x^2 - 3: ±√6 twice
        let h = product_poly(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap();
        assert_eq!(h, p(&[-6, 0, 1]).pow(2));
        // non-monic: (2x - 1) and (3x - 1) give 6x - 1
        assert_eq!(product_poly(&p(&[-1, 2]), &p(&[-1, 3])).unwrap(), p(&[-1, 6]));
    }

    #[test]
    fn monomials() {
        let phi = root(&[-1, -1, 1], 1.618);
        let psi = root(&[-1, -1, 1], -0.618);
        let prod = monomial(&[(&phi, 1), (&psi, 1)]).unwrap();
        assert_eq!(prod.minpoly(), &p(&[1, 1]));
        let sq2 = root(&[-2, 0, 1], 1.414);
        let sq3 = root(&[-3, 0, 1], 1.732);
        let s6 = monomial(&[(&sq2, 1), (&sq3, -1)]).unwrap();
        assert_eq!(s6.minpoly(), &p(&[-2, 0, 3]));
        assert!(s6.approx().0 > 0.0);
    }

    #[test]
    fn equality_of_conjugates() {
        let phi = root(&[-1, -1, 1], 1.618);
        let psi = root(&[-1, -1, 1], -0.618);
        let phi_again = power(&power(&phi, 2).unwrap(), 1).unwrap();
        assert!(!same_number(&phi, &psi).unwrap());
        assert!(same_number(&phi, &phi.refine(200).unwrap()).unwrap());
        // φ^2 = φ + 1, and φ^2 differs from φ
        assert!(!same_number(&phi, &phi_again).unwrap());
        let phi_sq = monomial(&[(&phi, 2)]).unwrap();
        assert!(same_number(&phi_sq, &phi_again).unwrap());
    }

    #[test]
    fn quadratic_info() {
        let phi = root(&[-1, -1, 1], 1.618);
        let q = quadratic_unit_info(&phi).unwrap();
        assert_eq!((q.discriminant.clone(), q.real, q.unit), (BigInt::from(5), true, true));
        assert_eq!(q.norm, BigRational::from_integer((-1).into()));
        let silver = root(&[-1, -2, 1], 2.414);
        let q = quadratic_unit_info(&silver).unwrap();
        assert_eq!((q.discriminant, q.unit), (BigInt::from(8), true));
        let nonunit = root(&[-4, -2, 1], 3.236);
        let q = quadratic_unit_info(&nonunit).unwrap();
        assert_eq!(q.norm, BigRational::from_integer((-4).into()));
        assert!(!q.unit);
        let i = root(&[1, 0, 1], 0.0);
        let q = quadratic_unit_info(&i).unwrap();
        assert_eq!((q.discriminant, q.real), (BigInt::from(-4), false));
        assert!(quadratic_unit_info(&AlgebraicNumber::from_integer(&BigInt::from(2))).is_none());
    }
}
