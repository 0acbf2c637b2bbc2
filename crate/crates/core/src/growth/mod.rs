//! gcd(A^n - I) streams, entropy, small-period moduli, Kronecker products
//! and order scans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algnum::{root_moduli, AlgebraicNumber, CircleSide, Estimate, HEIGHT_TOLERANCE};
use crate::error::{Error, Result};
use crate::matcore::{factor_int_poly, IntMatrix};
use crate::modorder::{factor_u64, order_mod, order_mod_from_multiple, FactoredInteger};
use crate::util::ln_or_zero;

/// gcd of all entries; 0 for the zero matrix.
pub fn gcd_entries(m: &IntMatrix) -> BigInt {
    m.entries()
        .iter()
        .fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GcdRecord {
    pub n: u64,
    /// gcd of the entries of `A^n - I`; 0 when `A^n = I`.
    pub g: BigInt,
    pub log_g: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GcdStream {
    pub records: Vec<GcdRecord>,
}

impl GcdStream {
    /// Largest `log g / n` over `n ≥ from`, with its `n`.
    pub fn tail_max(&self, from: u64) -> Option<(u64, f64)> {
        self.records
            .iter()
            .filter(|r| r.n >= from)
            .fold(None, |best: Option<(u64, f64)>, r| match best {
                Some((_, v)) if v >= r.ratio => best,
                _ => Some((r.n, r.ratio)),
            })
    }
}

/// `gcd(A^n - I)` for `n = 1..=n_max`, one multiplication per step.
pub fn gcd_power_stream(a: &IntMatrix, n_max: u64) -> Result<GcdStream> {
    if !a.is_nonsingular() {
        return Err(Error::SingularMatrix);
    }
    if n_max < 1 {
        return Err(Error::InvalidBound("n_max must be at least 1".into()));
    }
    let mut records = Vec::with_capacity(n_max as usize);
    let mut power = a.clone();
    for n in 1..=n_max {
        if n > 1 {
            power = power.mul(a)?;
        }
        let g = gcd_entries(&power.minus_identity());
        let log_g = ln_or_zero(&g);
        records.push(GcdRecord {
            n,
            g,
            log_g,
            ratio: log_g / n as f64,
        });
    }
    Ok(GcdStream { records })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpandingRoot {
    pub root: AlgebraicNumber,
    pub multiplicity: u32,
    pub log_modulus: Estimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyResult {
    pub eta: Estimate,
    pub expanding_roots: Vec<ExpandingRoot>,
}

/// `η_A = Σ_{|λ| > 1} log|λ|` over eigenvalues with multiplicity.
pub fn entropy(a: &IntMatrix) -> Result<EntropyResult> {
    if !a.is_nonsingular() {
        return Err(Error::SingularMatrix);
    }
    let fac = factor_int_poly(&a.char_poly())?;
    let total: u32 = fac.factors.iter().map(|(g, e)| g.degree().unwrap_or(0) as u32 * e).sum();
    let tol = HEIGHT_TOLERANCE / (2.0 * total.max(1) as f64);
    let (mut lo, mut hi) = (0.0, 0.0);
    let mut expanding_roots = Vec::new();
    for (g, e) in &fac.factors {
        for (root, side) in root_moduli(g, tol)? {
            if let CircleSide::Outside(l) = side {
                lo += *e as f64 * l.lo();
                hi += *e as f64 * l.hi();
                expanding_roots.push(ExpandingRoot {
                    root,
                    multiplicity: *e,
                    log_modulus: l,
                });
            }
        }
    }
    expanding_roots.sort_by(|x, y| y.log_modulus.value.total_cmp(&x.log_modulus.value));
    Ok(EntropyResult {
        eta: Estimate::from_bounds(lo.max(0.0), hi),
        expanding_roots,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SmallPeriodRow {
    pub k: u64,
    /// `N_k = gcd(A^(rk) - I)`
    pub modulus: BigInt,
    pub order: BigInt,
    pub ratio: f64,
}

/// Rows `(k, N_k, ord(A, N_k), ord / log N_k)` for `k ≤ k_max` with `N_k > 1`.
pub fn small_period_sequence(a: &IntMatrix, r: u64, k_max: u64) -> Result<Vec<SmallPeriodRow>> {
    if !a.is_nonsingular() {
        return Err(Error::SingularMatrix);
    }
    if r < 1 {
        return Err(Error::InvalidBound("r must be at least 1".into()));
    }
    let step = a.pow(r);
    let mut power = IntMatrix::identity(a.dim());
    let mut rows = Vec::new();
    for k in 1..=k_max {
        power = power.mul(&step)?;
        let n_k = gcd_entries(&power.minus_identity());
        if n_k.is_zero() {
            return Err(Error::FiniteOrder(format!("A^{} = I", r * k)));
        }
        if n_k.is_one() {
            continue;
        }
        let rk = r * k;
        let multiple = FactoredInteger::from_factors(
            factor_u64(rk).into_iter().map(|(p, e)| (BigInt::from(p), e)).collect(),
        )?;
        let order = order_mod_from_multiple(a, &n_k, &multiple)?;
        if order > BigInt::from(rk) {
            return Err(Error::Internal(format!("ord(A, N_{k}) = {order} exceeds {rk}")));
        }
        let ratio = order.to_f64().unwrap_or(f64::INFINITY) / ln_or_zero(&n_k);
        rows.push(SmallPeriodRow {
            k,
            modulus: n_k,
            order,
            ratio,
        });
    }
    Ok(rows)
}

/// Kronecker product `a ⊗ b`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let rows = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| a.get(i / db, j / db) * b.get(i % db, j % db))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("square")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRecord {
    pub n: u64,
    pub order: BigInt,
    /// `ord / ln N`
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scan {
    pub records: Vec<ScanRecord>,
    /// Moduli sharing a factor with `det A`.
    pub skipped: u64,
}

impl Scan {
    /// Running minimum of the ratio after each record, with its argmin.
    pub fn running_minimum(&self) -> Vec<(u64, f64)> {
        let mut best: Option<(u64, f64)> = None;
        self.records
            .iter()
            .map(|r| {
                if best.map_or(true, |(_, v)| r.ratio < v) {
                    best = Some((r.n, r.ratio));
                }
                best.unwrap()
            })
            .collect()
    }

    /// Overall minimum ratio and the first `N` attaining it.
    pub fn minimum(&self) -> Option<(u64, f64)> {
        self.running_minimum().last().copied()
    }
}

/// `ord(A, N)` for every `N` in `[n_min, n_max]` coprime to `det A`, ascending.
pub fn ord_scan(a: &IntMatrix, n_min: u64, n_max: u64) -> Result<Scan> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidBound(format!("need 2 ≤ N_min ≤ N_max, got {n_min}..{n_max}")));
    }
    let det = a.det();
    let results: Vec<Option<ScanRecord>> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| -> Result<Option<ScanRecord>> {
            let nb = BigInt::from(n);
            if !det.gcd(&nb).is_one() {
                return Ok(None);
            }
            let order = order_mod(a, &nb)?.order;
            let ratio = order.to_f64().unwrap_or(f64::INFINITY) / (n as f64).ln();
            Ok(Some(ScanRecord { n, order, ratio }))
        })
        .collect::<Result<_>>()?;
    let skipped = results.iter().filter(|r| r.is_none()).count() as u64;
    Ok(Scan {
        records: results.into_iter().flatten().collect(),
        skipped,
    })
}
