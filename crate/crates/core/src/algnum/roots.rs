//! Complex root isolation for squarefree integer polynomials.
//!
//! Approximations come from Aberth–Ehrlich iteration in dyadic floating
//! point. Certification uses the inclusion `|z - ζ| ≤ n·|f(z)/f'(z)|`, which
//! holds for some root `ζ` of a degree-`n` polynomial; when the `n` resulting
//! boxes are pairwise disjoint, each holds exactly one root.

use num_bigint::BigInt;
use num_traits::Zero;

use super::interval::{ComplexBox, Dyadic, Interval, Round};
use super::sturm::sign_at;
use crate::error::{Error, Result};
use crate::matcore::IntPoly;
use crate::util::ln_big;

pub(crate) const MAX_PREC: u32 = 1 << 15;

#[derive(Clone, Debug)]
struct Cx {
    re: Dyadic,
    im: Dyadic,
}

impl Cx {
    fn new(re: Dyadic, im: Dyadic) -> Self {
        Cx { re, im }
    }

    fn add(&self, o: &Cx, prec: u32) -> Cx {
        Cx::new(
            self.re.add(&o.re).round(prec, Round::Nearest),
            self.im.add(&o.im).round(prec, Round::Nearest),
        )
    }

    fn sub(&self, o: &Cx, prec: u32) -> Cx {
        Cx::new(
            self.re.sub(&o.re).round(prec, Round::Nearest),
            self.im.sub(&o.im).round(prec, Round::Nearest),
        )
    }

    fn mul(&self, o: &Cx, prec: u32) -> Cx {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Cx::new(re.round(prec, Round::Nearest), im.round(prec, Round::Nearest))
    }

    fn norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    fn div(&self, o: &Cx, prec: u32) -> Option<Cx> {
        let den = o.norm_sqr();
        if den.is_zero() {
            return None;
        }
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im));
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im));
        Some(Cx::new(
            re.div(&den, prec, Round::Nearest),
            im.div(&den, prec, Round::Nearest),
        ))
    }

    fn magnitude(&self) -> i64 {
        self.re.magnitude().max(self.im.magnitude())
    }
}

/// `(f(z), f'(z))` in approximate arithmetic.
fn eval_with_derivative(coeffs: &[Dyadic], z: &Cx, prec: u32) -> (Cx, Cx) {
    let zero = Cx::new(Dyadic::zero(), Dyadic::zero());
    let mut p = zero.clone();
    let mut dp = zero;
    for c in coeffs.iter().rev() {
        dp = dp.mul(z, prec).add(&p, prec);
        p = p.mul(z, prec).add(&Cx::new(c.clone(), Dyadic::zero()), prec);
    }
    (p, dp)
}

fn initial_guesses(f: &IntPoly) -> Vec<Cx> {
    let n = f.degree().unwrap_or(0);
    let c = f.coeffs();
    // Largest of |c_k / c_n|^(1/(n-k)); a crude root-radius estimate.
    let ln_lead = ln_big(&c[n]);
    let ln_r = (0..n)
        .filter(|&k| !c[k].is_zero())
        .map(|k| (ln_big(&c[k]) - ln_lead) / (n - k) as f64)
        .fold(f64::NEG_INFINITY, f64::max);
    let ln_r = if ln_r.is_finite() { ln_r } else { 0.0 };
    let radius = ln_r.exp().clamp(1e-300, 1e300);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Cx::new(
                Dyadic::from_f64(radius * theta.cos()),
                Dyadic::from_f64(radius * theta.sin()),
            )
        })
        .collect()
}

/// Aberth–Ehrlich iteration; returns once corrections fall below the
/// working precision or the iteration budget runs out.
fn aberth(coeffs: &[Dyadic], mut z: Vec<Cx>, prec: u32) -> Vec<Cx> {
    let n = z.len();
    let one = Cx::new(Dyadic::from_i64(1), Dyadic::zero());
    let budget = 200 + 20 * n;
    for _ in 0..budget {
        let mut converged = true;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, &z[i], prec);
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let Some(ratio) = p.div(&dp, prec) else {
                // perturb off a critical point
                let eps = Dyadic::pow2(z[i].magnitude() - prec as i64 / 2);
                z[i] = z[i].add(&Cx::new(eps.clone(), eps), prec);
                converged = false;
                continue;
            };
            let mut s = Cx::new(Dyadic::zero(), Dyadic::zero());
            for j in 0..n {
                if j != i {
                    if let Some(t) = one.div(&z[i].sub(&z[j], prec), prec) {
                        s = s.add(&t, prec);
                    }
                }
            }
            let denom = one.sub(&ratio.mul(&s, prec), prec);
            let w = ratio.div(&denom, prec).unwrap_or_else(|| ratio.clone());
            let scale = z[i].magnitude().max(0);
            if w.magnitude() > scale - prec as i64 + 8 {
                converged = false;
            }
            z[i] = z[i].sub(&w, prec);
        }
        if converged {
            break;
        }
    }
    z
}

/// Interval Horner evaluation of `f` and `f'` at a box.
pub(crate) fn eval_box(f: &IntPoly, z: &ComplexBox, prec: u32) -> ComplexBox {
    let mut acc = ComplexBox::from_int(&BigInt::zero());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z, prec).add(&ComplexBox::from_int(c), prec);
    }
    acc
}

/// Box around the disc `|w - z| ≤ n·|f(z)/f'(z)|`, which holds a root of `f`.
fn inclusion_box(f: &IntPoly, df: &IntPoly, z: &Cx, prec: u32) -> Option<ComplexBox> {
    let n = f.degree()? as i64;
    let pt = ComplexBox::point(z.re.clone(), z.im.clone());
    let fz = eval_box(f, &pt, prec).norm_sqr(prec);
    let dfz = eval_box(df, &pt, prec).norm_sqr(prec);
    if dfz.lo.signum() <= 0 {
        return None;
    }
    let r2 = Dyadic::from_i64(n * n).mul(&fz.hi).div(&dfz.lo, prec, Round::Up);
    let r = r2.sqrt_up(prec);
    Some(ComplexBox {
        re: Interval::ball(&z.re, &r),
        im: Interval::ball(&z.im, &r),
    })
}

/// Attempts to certify the approximations; `None` if the inclusion boxes overlap.
fn certify(f: &IntPoly, df: &IntPoly, approx: &[Cx], prec: u32) -> Option<Vec<ComplexBox>> {
    let boxes = approx
        .iter()
        .map(|z| inclusion_box(f, df, z, prec + 32))
        .collect::<Option<Vec<_>>>()?;
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    Some(boxes)
}

fn linear_root_box(f: &IntPoly, prec: u32) -> ComplexBox {
    let num = Dyadic::from_int(&-f.coeff(0));
    let den = Dyadic::from_int(&f.coeff(1));
    let (a, b) = if den.signum() < 0 {
        (num.neg(), den.neg())
    } else {
        (num, den)
    };
    ComplexBox {
        re: Interval::new(a.div(&b, prec, Round::Down), a.div(&b, prec, Round::Up)),
        im: Interval::zero(),
    }
}

pub(crate) fn within(inner: &ComplexBox, outer: &ComplexBox) -> bool {
    outer.re.lo <= inner.re.lo
        && inner.re.hi <= outer.re.hi
        && outer.im.lo <= inner.im.lo
        && inner.im.hi <= outer.im.hi
}

/// Half-width of the box is at most `2^(max(0, log2|center|) - prec)`.
pub(crate) fn is_refined(b: &ComplexBox, prec: u32) -> bool {
    let mag = b.re.mid().magnitude().max(b.im.mid().magnitude()).max(0);
    let target = Dyadic::pow2(mag - prec as i64 + 1);
    b.re.width() <= target && b.im.width() <= target
}

/// Shrinks an isolating box of a root of the squarefree `f` until it
/// satisfies [`is_refined`] for `prec`.
pub(crate) fn refine_root(f: &IntPoly, b: &ComplexBox, prec: u32) -> Result<ComplexBox> {
    if is_refined(b, prec) {
        return Ok(b.clone());
    }
    let n = f.deg()?;
    if n == 1 {
        let mut work = prec + 8;
        loop {
            let r = linear_root_box(f, work);
            if is_refined(&r, prec) {
                return Ok(r);
            }
            work *= 2;
        }
    }
    let df = f.derivative();
    let coeffs: Vec<Dyadic> = f.coeffs().iter().map(Dyadic::from_int).collect();
    // a box with a degenerate zero imaginary part holds exactly one real root
    let real = b.im.lo.mant().is_zero() && b.im.hi.mant().is_zero();
    let accept = |c: &ComplexBox| -> Option<ComplexBox> {
        if !is_refined(c, prec) {
            return None;
        }
        if real {
            let ok = c.im.contains_zero()
                && b.re.lo <= c.re.lo
                && c.re.hi <= b.re.hi
                && sign_at(f, &c.re.lo) * sign_at(f, &c.re.hi) <= 0;
            ok.then(|| ComplexBox {
                re: c.re.clone(),
                im: Interval::zero(),
            })
        } else {
            within(c, b).then(|| c.clone())
        }
    };
    let mut work = prec + 32;
    while work <= 2 * MAX_PREC {
        // Newton from the box center
        let mut z = Cx::new(b.re.mid(), b.im.mid());
        for _ in 0..(64 + work.ilog2() * 4) {
            let (p, dp) = eval_with_derivative(&coeffs, &z, work);
            let Some(step) = p.div(&dp, work) else { break };
            let done = step.magnitude() < z.magnitude().max(0) - work as i64;
            z = z.sub(&step, work);
            if done {
                break;
            }
        }
        if let Some(disc) = inclusion_box(f, &df, &z, work + 32) {
            if let Some(r) = accept(&disc) {
                return Ok(r);
            }
        }
        // fall back to isolating every root
        let (boxes, _) = isolate_squarefree(f, work)?;
        if let Some(nb) = boxes.iter().find_map(|nb| accept(nb)) {
            return Ok(nb);
        }
        work *= 2;
    }
    Err(Error::PrecisionExhausted(work))
}

/// Isolating boxes for all complex roots of a squarefree polynomial,
/// certified at some precision `≥ prec`. Returns the boxes and the
/// precision that succeeded.
pub(crate) fn isolate_squarefree(f: &IntPoly, prec: u32) -> Result<(Vec<ComplexBox>, u32)> {
    let n = f.deg()?;
    if n == 0 {
        return Ok((Vec::new(), prec));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if n == 1 {
        return Ok((vec![linear_root_box(f, prec)], prec));
    }
    let df = f.derivative();
    let mut prec = prec.max(64);
    let mut approx = initial_guesses(f);
    loop {
        let coeffs: Vec<Dyadic> = f.coeffs().iter().map(Dyadic::from_int).collect();
        approx = aberth(&coeffs, approx, prec);
        if let Some(boxes) = certify(f, &df, &approx, prec) {
            return Ok((boxes, prec));
        }
        if prec >= MAX_PREC {
            return Err(Error::PrecisionExhausted(prec));
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(b: &ComplexBox, re: f64, im: f64) -> bool {
        b.re.lo.to_f64() <= re
            && re <= b.re.hi.to_f64()
            && b.im.lo.to_f64() <= im
            && im <= b.im.hi.to_f64()
    }

    #[test]
    fn isolates_plus_minus_one() {
        let (boxes, _) = isolate_squarefree(&IntPoly::from_i64(&[-1, 0, 1]), 64).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().any(|b| contains(b, 1.0, 0.0)));
        assert!(boxes.iter().any(|b| contains(b, -1.0, 0.0)));
    }

    #[test]
    fn isolates_golden_ratio_by_bisection_oracle() {
        // Bisection on sign changes of x^2 - x - 1 over [1, 2] and [-1, 0].
        let f = |x: f64| x * x - x - 1.0;
        let bisect = |mut lo: f64, mut hi: f64| {
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if f(lo) * f(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        };
        let (phi, psi) = (bisect(1.0, 2.0), bisect(-1.0, 0.0));
        let (boxes, _) = isolate_squarefree(&IntPoly::from_i64(&[-1, -1, 1]), 64).unwrap();
        for r in [phi, psi] {
            let b = boxes
                .iter()
                .find(|b| (b.center_f64().0 - r).abs() < 1e-9)
                .expect("root found");
            assert!(b.radius_f64() < 1e-12);
        }
    }

    #[test]
    fn imaginary_unit_boxes_avoid_real_axis() {
        let (boxes, _) = isolate_squarefree(&IntPoly::from_i64(&[1, 0, 1]), 64).unwrap();
        assert_eq!(boxes.len(), 2);
        for b in &boxes {
            assert!(!b.im.contains_zero());
            assert!(contains(b, 0.0, b.center_f64().1.signum()));
        }
    }

    #[test]
    fn refinement_stays_inside() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let (boxes, _) = isolate_squarefree(&f, 64).unwrap();
        for b in &boxes {
            let r = refine_root(&f, b, 300).unwrap();
            assert!(within(&r, b));
            assert!(is_refined(&r, 300));
            // bracket check against exact squares: lo^2 < 2 < hi^2 on the positive root
            if r.re.lo.signum() > 0 {
                let two = Dyadic::from_i64(2);
                assert!(r.re.lo.mul(&r.re.lo) <= two && two <= r.re.hi.mul(&r.re.hi));
            }
        }
    }

    #[test]
    fn rejects_repeated_roots() {
        let f = IntPoly::from_i64(&[1, -2, 1]);
        assert_eq!(isolate_squarefree(&f, 64).unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn close_roots_and_large_degree() {
        // (x - 1000)(x - 1001)(x^10 - 3)
        let f = IntPoly::from_i64(&[-1000, 1])
            .mul(&IntPoly::from_i64(&[-1001, 1]))
            .mul(&IntPoly::from_i64(&[-3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        let (boxes, _) = isolate_squarefree(&f, 64).unwrap();
        assert_eq!(boxes.len(), 12);
        assert!(boxes.iter().any(|b| contains(b, 1000.0, 0.0)));
        assert!(boxes.iter().any(|b| contains(b, 1001.0, 0.0)));
    }
}
