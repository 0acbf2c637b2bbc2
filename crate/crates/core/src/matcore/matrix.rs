use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from rows; rejects empty, ragged and non-square input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            entries.extend(row);
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * diag.len() + i] = d.clone();
        }
        m
    }

    /// Companion matrix of a monic polynomial (subdiagonal ones, last column
    /// holding the negated coefficients).
    pub fn companion(f: &IntPoly) -> Result<Self> {
        let n = f.deg()?;
        if n == 0 || !f.is_monic() {
            return Err(Error::InvalidBound(
                "companion matrix needs a monic polynomial of positive degree".into(),
            ));
        }
        let mut m = Self::zeros(n);
        for i in 1..n {
            m.entries[i * n + i - 1] = BigInt::one();
        }
        for i in 0..n {
            m.entries[i * n + n - 1] = -f.coeff(i);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, x)| {
            if k / self.dim == k % self.dim {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_dim(other)?;
        Ok(IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_dim(other)?;
        Ok(IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    /// `self - I`
    pub fn minus_identity(&self) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] -= 1;
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim;
        let mut out = vec![BigInt::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * &other.entries[k * d + j];
                }
            }
        }
        IntMatrix { dim: d, entries: out }
    }

    /// `self^n` by binary exponentiation; `self^0 = I`.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        m
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(self.rows())
    }

    /// Transposed cofactor matrix, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> IntMatrix {
        let d = self.dim;
        let mut adj = IntMatrix::zeros(d);
        if d == 1 {
            adj.entries[0] = BigInt::one();
            return adj;
        }
        for i in 0..d {
            for j in 0..d {
                let minor: Vec<Vec<BigInt>> = (0..d)
                    .filter(|&r| r != j)
                    .map(|r| {
                        (0..d)
                            .filter(|&c| c != i)
                            .map(|c| self.entries[r * d + c].clone())
                            .collect()
                    })
                    .collect();
                let c = bareiss_det(minor);
                adj.entries[i * d + j] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        adj
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.det().is_zero()
    }

    /// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier. Every
    /// division by `k` is exact over the integers.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut next = self.mul_unchecked(&m);
            for i in 0..n {
                next.entries[i * n + i] += &coeffs[n - k + 1];
            }
            let t = self.mul_unchecked(&next).trace();
            coeffs[n - k] = -t / BigInt::from(k);
            m = next;
        }
        IntPoly::new(coeffs)
    }

    /// Evaluates `f(A)` by Horner's rule.
    pub fn eval_poly(&self, f: &IntPoly) -> IntMatrix {
        let n = self.dim;
        let mut acc = IntMatrix::zeros(n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul_unchecked(self);
            for i in 0..n {
                acc.entries[i * n + i] += c;
            }
        }
        acc
    }

    /// Largest absolute value among the entries.
    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default()
    }

    fn check_dim(&self, other: &IntMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }
}

/// Fraction-free Gaussian elimination; returns the determinant.
pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    /// Cofactor expansion; independent of Bareiss.
    fn det_by_expansion(a: &IntMatrix) -> BigInt {
        let d = a.dim();
        if d == 1 {
            return a.get(0, 0).clone();
        }
        let mut total = BigInt::zero();
        for j in 0..d {
            let minor = minor(a, 0, j);
            let term = a.get(0, j) * det_by_expansion(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn minor(a: &IntMatrix, r: usize, c: usize) -> IntMatrix {
        let d = a.dim();
        let rows = (0..d)
            .filter(|&i| i != r)
            .map(|i| {
                (0..d)
                    .filter(|&j| j != c)
                    .map(|j| a.get(i, j).clone())
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(rows).unwrap()
    }

    fn adjugate(a: &IntMatrix) -> IntMatrix {
        let d = a.dim();
        let mut adj = IntMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let c = det_by_expansion(&minor(a, j, i));
                adj.set(i, j, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        adj
    }

    #[test]
    fn product_examples() {
        let fib = m(&[&[1, 1], &[1, 0]]);
        assert_eq!(IntMatrix::identity(2).mul(&fib).unwrap(), fib);
        assert_eq!(fib.mul(&fib).unwrap(), m(&[&[2, 1], &[1, 1]]));
        assert!(fib.mul(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn adjugate_identity_on_random_3x3() {
        let a = m(&[&[3, -1, 4], &[1, 5, -9], &[2, 6, 5]]);
        let det = det_by_expansion(&a);
        assert_eq!(a.det(), det);
        let prod = a.mul(&adjugate(&a)).unwrap();
        assert_eq!(prod, IntMatrix::identity(3).scale(&det));
        assert_eq!(a.adjugate(), adjugate(&a));
    }

    #[test]
    fn power_examples() {
        let fib = m(&[&[1, 1], &[1, 0]]);
        assert!(fib.pow(0).is_identity());
        let mut direct = IntMatrix::identity(2);
        for _ in 0..10 {
            direct = direct.mul(&fib).unwrap();
        }
        assert_eq!(fib.pow(10), direct);
        assert_eq!(fib.pow(10), m(&[&[89, 55], &[55, 34]]));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).pow(4), m(&[&[16, 0], &[0, 81]]));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(m(&[&[1, 1], &[1, 0]]).char_poly(), IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).char_poly(), IntPoly::from_i64(&[6, -5, 1]));
        for f in [[7, -3, 2, 1], [-5, 0, 0, 1], [1, 4, -4, 1]] {
            let f = IntPoly::from_i64(&f);
            assert_eq!(IntMatrix::companion(&f).unwrap().char_poly(), f);
        }
    }

    #[test]
    fn char_poly_annihilates() {
        let a = m(&[&[3, -1, 4], &[1, 5, -9], &[2, 6, 5]]);
        assert!(a.eval_poly(&a.char_poly()).is_zero());
        assert_eq!(a.char_poly().coeff(0), -a.det());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(IntMatrix::from_i64(&[&[1, 2], &[3]]).is_err());
        assert_eq!(IntMatrix::from_rows(vec![]), Err(Error::EmptyMatrix));
    }
}
