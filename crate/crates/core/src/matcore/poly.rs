use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first.
///
/// Coefficients are kept trimmed, so a nonzero polynomial always has a
/// nonzero leading coefficient. The zero polynomial has no coefficients and
/// no degree: [`IntPoly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - c`
    pub fn linear_root(c: BigInt) -> Self {
        Self::new(vec![-c, BigInt::one()])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as an error.
    pub fn deg(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Gcd of the coefficients (nonnegative; zero only for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, sign-normalized so the leading coefficient is positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// `x^deg · f(1/x)`: the polynomial whose roots are the inverses.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// `f(-x)`
    pub fn negate_var(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `f(k·x)`
    /// `l^(n-1) f(y / l)` for leading coefficient `l`: monic, with roots `l·α`.
    pub fn monic_transform(&self) -> IntPoly {
        let Some(n) = self.degree() else { return IntPoly::zero() };
        let l = self.lead();
        if n == 0 {
            return IntPoly::one();
        }
        let mut c = vec![BigInt::one(); n + 1];
        let mut p = BigInt::one();
        for i in (0..n).rev() {
            c[i] = &self.coeffs[i] * &p;
            p *= &l;
        }
        IntPoly::new(c)
    }

    pub fn scale_var(&self, k: &BigInt) -> IntPoly {
        let mut p = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= k;
        }
        IntPoly::new(out)
    }

    /// Pseudo-division: returns `(q, r, m)` with `lead(d)^m · self = q·d + r`.
    pub fn pseudo_divrem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly, u32)> {
        let dd = d.deg()?;
        let lc = d.lead();
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n == 0 || n - 1 < dd {
            return Ok((IntPoly::zero(), self.clone(), 0));
        }
        let mut q = vec![BigInt::zero(); n - dd];
        let mut m = 0;
        for k in (dd..n).rev() {
            let t = r[k].clone();
            for x in q.iter_mut() {
                *x *= &lc;
            }
            for x in r.iter_mut().take(k + 1) {
                *x *= &lc;
            }
            m += 1;
            if !t.is_zero() {
                q[k - dd] += &t;
                for (j, c) in d.coeffs.iter().enumerate() {
                    r[k - dd + j] -= &t * c;
                }
            }
        }
        r.truncate(dd);
        Ok((IntPoly::new(q), IntPoly::new(r), m))
    }

    /// Exact division over the integers. `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Result<Option<IntPoly>> {
        let dd = d.deg()?;
        let lc = d.lead();
        if self.is_zero() {
            return Ok(Some(IntPoly::zero()));
        }
        let n = self.coeffs.len() - 1;
        if n < dd {
            return Ok(None);
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            let (t, rem) = r[k].div_rem(&lc);
            if !rem.is_zero() {
                return Ok(None);
            }
            if !t.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    r[k - dd + j] -= &t * c;
                }
            }
            q[k - dd] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(q)))
    }

    pub fn divides(&self, other: &IntPoly) -> Result<bool> {
        Ok(other.div_exact(self)?.is_some())
    }

    /// Gcd over the integers via the primitive remainder sequence; the result
    /// is primitive with positive leading coefficient, times the gcd of the
    /// contents.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r, _) = a.pseudo_divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Product of the distinct irreducible factors (primitive).
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        self.deg()?;
        let p = self.primitive_part();
        let g = p.gcd(&p.derivative());
        Ok(p
            .div_exact(&g)?
            .expect("gcd divides")
            .primitive_part())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Yun's squarefree decomposition of the primitive part:
    /// returns `(g_i, i)` with `primpart(self) = ∏ g_i^i`, each `g_i` squarefree.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(IntPoly, u32)>> {
        let f = self.primitive_part();
        f.deg()?;
        let mut out = Vec::new();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0)?.expect("gcd divides");
        let mut c = fp.div_exact(&a0)?.expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let a = a.primitive_part();
            b = b.div_exact(&a)?.expect("gcd divides");
            c = d.div_exact(&a)?.expect("gcd divides");
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Resultant of two nonzero polynomials via the Sylvester determinant.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt> {
        let m = self.deg()?;
        let n = other.deg()?;
        if m == 0 && n == 0 {
            return Ok(BigInt::one());
        }
        let size = m + n;
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                rows[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                rows[n + i][i + j] = c.clone();
            }
        }
        Ok(super::matrix::bareiss_det(rows))
    }

    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.deg()?;
        let r = self.resultant(&self.derivative())?;
        let sign = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok(sign * r / self.lead())
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Polynomial with rational coefficients `c_i`, scaled to a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn from_rationals(coeffs: &[BigRational]) -> IntPoly {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
