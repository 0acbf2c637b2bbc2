//! Dyadic rationals, outward-rounded real intervals and complex rectangles.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `mant · 2^exp`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Round {
    Down,
    Up,
    Nearest,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// Exact conversion of a finite float.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite());
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    /// `2^e`
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: e,
        }
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Exponent of the most significant bit plus one (`|x| < 2^magnitude`).
    pub fn magnitude(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 4
        } else {
            self.mant.bits() as i64 + self.exp
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, o: &Dyadic) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &o.mant << (o.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Dyadic) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Self {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Rounds to at most `prec` significant bits.
    pub(crate) fn round(&self, prec: u32, mode: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let divisor = BigInt::one() << shift;
        let m = match mode {
            Round::Down => self.mant.div_floor(&divisor),
            Round::Up => -((-&self.mant).div_floor(&divisor)),
            Round::Nearest => (&self.mant + (&divisor >> 1usize)).div_floor(&divisor),
        };
        Dyadic::new(m, self.exp + shift as i64)
    }

    /// Quotient rounded in the given direction with about `prec` bits.
    pub(crate) fn div(&self, o: &Dyadic, prec: u32, mode: Round) -> Self {
        assert!(!o.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = (prec as i64 + o.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let num = &self.mant << shift as usize;
        let (q, r) = num.div_mod_floor(&o.mant);
        let q = match mode {
            Round::Down | Round::Nearest => q,
            Round::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            }
        };
        Dyadic::new(q, self.exp - o.exp - shift)
    }

    /// Upper bound for the square root of a nonnegative value.
    pub(crate) fn sqrt_up(&self, prec: u32) -> Self {
        assert!(self.signum() >= 0);
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut shift = (2 * prec as i64 - self.mant.bits() as i64).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mant << shift as usize;
        let mut s = m.sqrt();
        if &s * &s < m {
            s += 1;
        }
        Dyadic::new(s, (self.exp - shift) / 2)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (&self.mant >> shift as usize).to_f64().unwrap_or(0.0);
        let e = self.exp + shift;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    /// Natural log of a positive value as `(lower, upper)` float bounds.
    pub(crate) fn ln_bounds(&self) -> (f64, f64) {
        assert!(self.signum() > 0);
        let bits = self.mant.bits() as i64;
        let shift = bits - 53;
        let (lo_m, hi_m) = if shift > 0 {
            let lo = (&self.mant >> shift as usize).to_f64().unwrap();
            (lo, lo + 1.0)
        } else {
            let v = self.mant.to_f64().unwrap();
            (v, v)
        };
        let e = (self.exp + shift.max(0)) as f64;
        let ln2 = std::f64::consts::LN_2;
        let lo = lo_m.ln() + e * ln2;
        let hi = hi_m.ln() + e * ln2;
        let slack = 8.0 * f64::EPSILON * (1.0 + lo.abs().max(hi.abs()));
        (lo - slack, hi + slack)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).signum().cmp(&0)
    }
}

/// Closed real interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn point(x: Dyadic) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    pub fn from_int(n: &BigInt) -> Self {
        Interval::point(Dyadic::from_int(n))
    }

    /// `[c - r, c + r]`
    pub fn ball(c: &Dyadic, r: &Dyadic) -> Self {
        Interval {
            lo: c.sub(r),
            hi: c.add(r),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Interval {
            lo: lo.round(prec, Round::Down),
            hi: hi.round(prec, Round::Up),
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn add(&self, o: &Interval, prec: u32) -> Self {
        Self::rounded(self.lo.add(&o.lo), self.hi.add(&o.hi), prec)
    }

    pub fn sub(&self, o: &Interval, prec: u32) -> Self {
        Self::rounded(self.lo.sub(&o.hi), self.hi.sub(&o.lo), prec)
    }

    pub fn mul(&self, o: &Interval, prec: u32) -> Self {
        let c = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self::rounded(lo, hi, prec)
    }

    pub fn sqr(&self, prec: u32) -> Self {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        let (mn, mx) = if a < b { (a, b) } else { (b, a) };
        if self.contains_zero() {
            Self::rounded(Dyadic::zero(), mx, prec)
        } else {
            Self::rounded(mn, mx, prec)
        }
    }

    pub fn scale_int(&self, k: &BigInt, prec: u32) -> Self {
        self.mul(&Interval::from_int(k), prec)
    }

    /// `1 / self`; `None` when the interval contains zero.
    pub fn recip(&self, prec: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let one = Dyadic::from_i64(1);
        Some(Interval {
            lo: one.div(&self.hi, prec, Round::Down),
            hi: one.div(&self.lo, prec, Round::Up),
        })
    }

    pub fn div(&self, o: &Interval, prec: u32) -> Option<Self> {
        o.recip(prec).map(|r| self.mul(&r, prec))
    }

    /// Float bounds of `ln` over a positive interval.
    pub fn ln_bounds(&self) -> Option<(f64, f64)> {
        if self.lo.signum() <= 0 {
            return None;
        }
        Some((self.lo.ln_bounds().0, self.hi.ln_bounds().1))
    }
}

/// Axis-aligned complex rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn point(re: Dyadic, im: Dyadic) -> Self {
        ComplexBox {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn from_int(n: &BigInt) -> Self {
        ComplexBox {
            re: Interval::from_int(n),
            im: Interval::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(&BigInt::one())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, o: &ComplexBox) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn conj(&self) -> Self {
        ComplexBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &ComplexBox, prec: u32) -> Self {
        ComplexBox {
            re: self.re.add(&o.re, prec),
            im: self.im.add(&o.im, prec),
        }
    }

    pub fn sub(&self, o: &ComplexBox, prec: u32) -> Self {
        ComplexBox {
            re: self.re.sub(&o.re, prec),
            im: self.im.sub(&o.im, prec),
        }
    }

    pub fn mul(&self, o: &ComplexBox, prec: u32) -> Self {
        let rr = self.re.mul(&o.re, prec);
        let ii = self.im.mul(&o.im, prec);
        let ri = self.re.mul(&o.im, prec);
        let ir = self.im.mul(&o.re, prec);
        ComplexBox {
            re: rr.sub(&ii, prec),
            im: ri.add(&ir, prec),
        }
    }

    /// `|z|^2` as a real interval.
    pub fn norm_sqr(&self, prec: u32) -> Interval {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }

    pub fn recip(&self, prec: u32) -> Option<Self> {
        let n = self.norm_sqr(prec);
        let inv = n.recip(prec)?;
        Some(ComplexBox {
            re: self.re.mul(&inv, prec),
            im: self.im.neg().mul(&inv, prec),
        })
    }

    /// Integer power; negative exponents need a box excluding zero.
    pub fn pow(&self, n: i64, prec: u32) -> Option<Self> {
        let base = if n < 0 { self.recip(prec)? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = ComplexBox::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b, prec);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b, prec);
            }
        }
        Some(acc)
    }

    /// Midpoint as a float pair, for display.
    pub fn center_f64(&self) -> (f64, f64) {
        (self.re.mid().to_f64(), self.im.mid().to_f64())
    }

    /// Larger of the two half-widths, as a float upper bound.
    pub fn radius_f64(&self) -> f64 {
        let w = self.re.width().to_f64().max(self.im.width().to_f64());
        w / 2.0
    }
}
