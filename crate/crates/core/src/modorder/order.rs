//! Orders of integer matrices modulo `N`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::intfactor::{factor_integer, FactoredInteger};
use crate::algnum::cyclotomic_poly;
use crate::error::{Error, Result};
use crate::matcore::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Entries {
    Word(Vec<u64>),
    Big(Vec<BigInt>),
}

/// Square matrix with entries reduced into `[0, N)`.
#[derive(Clone, Debug)]
pub(crate) struct ModMatrix {
    dim: usize,
    modulus: BigInt,
    word: Option<u64>,
    entries: Entries,
}

impl PartialEq for ModMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.entries == o.entries
    }
}

impl ModMatrix {
    pub fn new(a: &IntMatrix, n: &BigInt) -> Self {
        let reduced: Vec<BigInt> = a.entries().iter().map(|x| x.mod_floor(n)).collect();
        let word = n.to_u64();
        let entries = match word {
            Some(_) => Entries::Word(reduced.iter().map(|x| x.to_u64().unwrap()).collect()),
            None => Entries::Big(reduced),
        };
        ModMatrix {
            dim: a.dim(),
            modulus: n.clone(),
            word,
            entries,
        }
    }

    pub fn identity(dim: usize, n: &BigInt) -> Self {
        ModMatrix::new(&IntMatrix::identity(dim), n)
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        let d = self.dim;
        let entries = match (&self.entries, &o.entries) {
            (Entries::Word(a), Entries::Word(b)) => {
                let n = self.word.unwrap();
                let mut out = vec![0u64; d * d];
                if n <= 1 << 32 {
                    for i in 0..d {
                        for j in 0..d {
                            let mut acc = 0u128;
                            for k in 0..d {
                                acc += (a[i * d + k] * b[k * d + j]) as u128;
                            }
                            out[i * d + j] = (acc % n as u128) as u64;
                        }
                    }
                } else {
                    let n = n as u128;
                    for i in 0..d {
                        for j in 0..d {
                            let mut acc = 0u128;
                            for k in 0..d {
                                acc += a[i * d + k] as u128 * b[k * d + j] as u128 % n;
                            }
                            out[i * d + j] = (acc % n) as u64;
                        }
                    }
                }
                Entries::Word(out)
            }
            (Entries::Big(a), Entries::Big(b)) => {
                let mut out = vec![BigInt::zero(); d * d];
                for i in 0..d {
                    for j in 0..d {
                        let mut acc = BigInt::zero();
                        for k in 0..d {
                            acc += &a[i * d + k] * &b[k * d + j];
                        }
                        out[i * d + j] = acc % &self.modulus;
                    }
                }
                Entries::Big(out)
            }
            _ => unreachable!("matrices over the same modulus"),
        };
        ModMatrix {
            entries,
            ..self.clone()
        }
    }

    pub fn pow(&self, e: &BigInt) -> ModMatrix {
        let mut acc = ModMatrix::identity(self.dim, &self.modulus);
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc);
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        match &self.entries {
            Entries::Word(v) => BigInt::from(v[i * self.dim + j]),
            Entries::Big(v) => v[i * self.dim + j].clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let one = BigInt::one().mod_floor(&self.modulus);
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let want = if i == j { one.clone() } else { BigInt::zero() };
                self.entry(i, j) == want
            })
        })
    }

    /// First entry `(row, col, value)` where this differs from the identity.
    pub fn first_non_identity(&self) -> Option<(usize, usize, BigInt)> {
        let one = BigInt::one().mod_floor(&self.modulus);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.entry(i, j);
                let want = if i == j { &one } else { &BigInt::ZERO };
                if &v != want {
                    return Some((i, j, v));
                }
            }
        }
        None
    }

    pub fn to_int(&self) -> IntMatrix {
        let d = self.dim;
        let rows = (0..d)
            .map(|i| (0..d).map(|j| self.entry(i, j)).collect())
            .collect();
        IntMatrix::from_rows(rows).expect("square")
    }

    fn word_key(&self) -> Vec<u64> {
        match &self.entries {
            Entries::Word(v) => v.clone(),
            Entries::Big(_) => unreachable!("word-sized modulus"),
        }
    }
}

/// `A^e mod N`, entries in `[0, N)`.
pub fn mat_pow_mod(a: &IntMatrix, e: &BigInt, n: &BigInt) -> Result<IntMatrix> {
    if n < &BigInt::one() {
        return Err(Error::InvalidModulus(1));
    }
    if e.is_negative() {
        return Err(Error::InvalidBound(format!("negative exponent {e}")));
    }
    Ok(ModMatrix::new(a, n).pow(e).to_int())
}

/// `A^(k/q) mod N` differs from the identity at `(row, col)`, where it equals `residue`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderWitness {
    pub prime: BigInt,
    pub row: usize,
    pub col: usize,
    pub residue: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderResult {
    pub order: BigInt,
    pub modulus: BigInt,
    /// One witness per prime dividing the order, primes increasing.
    pub certificate: Vec<OrderWitness>,
}

impl OrderResult {
    /// Recomputes `A^k` and every `A^(k/q)` and checks them against the claim.
    pub fn verify(&self, a: &IntMatrix) -> Result<bool> {
        let m = ModMatrix::new(a, &self.modulus);
        if !m.pow(&self.order).is_identity() {
            return Ok(false);
        }
        let fac = factor_integer(&self.order)?;
        let primes: Vec<&BigInt> = fac.primes().collect();
        let listed: Vec<&BigInt> = self.certificate.iter().map(|w| &w.prime).collect();
        if primes != listed {
            return Ok(false);
        }
        for w in &self.certificate {
            let p = m.pow(&(&self.order / &w.prime));
            let identity_entry = if w.row == w.col {
                BigInt::one().mod_floor(&self.modulus)
            } else {
                BigInt::zero()
            };
            if p.entry(w.row, w.col) != w.residue || w.residue == identity_entry {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_invertible(a: &IntMatrix, n: &BigInt) -> Result<()> {
    let g = a.det().gcd(n);
    if !g.is_one() {
        return Err(Error::NotInvertibleModN(format!("{n} (gcd(det A, N) = {g})")));
    }
    Ok(())
}

/// Smallest divisor `k` of the multiple with `A^k = I`, given `A^multiple = I`.
fn reduce_multiple(m: &ModMatrix, multiple: &[(BigInt, u32)]) -> BigInt {
    let mut k = multiple
        .iter()
        .fold(BigInt::one(), |acc, (q, e)| acc * num_traits::pow(q.clone(), *e as usize));
    for (q, e) in multiple {
        let qe = num_traits::pow(q.clone(), *e as usize);
        let rest = &k / &qe;
        let mut b = m.pow(&rest);
        let mut j = 0;
        while !b.is_identity() {
            b = b.pow(q);
            j += 1;
        }
        k = rest * num_traits::pow(q.clone(), j);
    }
    k
}

/// Factorization of `E_p = p^t · lcm(p - 1, p^2 - 1, …, p^d - 1)` with
/// `p^t ≥ d`, a multiple of the exponent of `GL_d(F_p)`.
fn group_exponent_multiple(p: &BigInt, d: usize) -> Result<Vec<(BigInt, u32)>> {
    let mut exps: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut t = 0u32;
    let mut pt = BigInt::one();
    while pt < BigInt::from(d) {
        pt *= p;
        t += 1;
    }
    if t > 0 {
        exps.insert(p.clone(), t);
    }
    // p^i - 1 = ∏_{j | i} Φ_j(p)
    let mut phi_values: Vec<Vec<(BigInt, u32)>> = vec![Vec::new()];
    for j in 1..=d {
        let v = cyclotomic_poly(j as u64).eval(p);
        phi_values.push(factor_integer(&v)?.factors().to_vec());
    }
    for i in 1..=d {
        let mut local: BTreeMap<BigInt, u32> = BTreeMap::new();
        for j in (1..=i).filter(|j| i % j == 0) {
            for (q, e) in &phi_values[j] {
                *local.entry(q.clone()).or_default() += e;
            }
        }
        for (q, e) in local {
            let slot = exps.entry(q).or_default();
            *slot = (*slot).max(e);
        }
    }
    Ok(exps.into_iter().collect())
}

/// Order of `A` modulo a prime power `p^e`.
fn local_order(a: &IntMatrix, p: &BigInt, e: u32) -> Result<BigInt> {
    let seed = group_exponent_multiple(p, a.dim())?;
    let mut k = reduce_multiple(&ModMatrix::new(a, p), &seed);
    let mut pj = p.clone();
    for _ in 1..e {
        pj *= p;
        if !ModMatrix::new(a, &pj).pow(&k).is_identity() {
            k *= p;
        }
    }
    Ok(k)
}

fn certify(a: &IntMatrix, n: &BigInt, order: BigInt) -> Result<OrderResult> {
    let m = ModMatrix::new(a, n);
    let mut certificate = Vec::new();
    for q in factor_integer(&order)?.primes() {
        let (row, col, residue) = m
            .pow(&(&order / q))
            .first_non_identity()
            .ok_or_else(|| Error::Internal(format!("order {order} is not minimal at {q}")))?;
        certificate.push(OrderWitness {
            prime: q.clone(),
            row,
            col,
            residue,
        });
    }
    Ok(OrderResult {
        order,
        modulus: n.clone(),
        certificate,
    })
}

/// `ord(A, N)`: least `k ≥ 1` with `A^k ≡ I (mod N)`.
pub fn order_mod(a: &IntMatrix, n: &BigInt) -> Result<OrderResult> {
    if n < &BigInt::from(2) {
        return Err(Error::InvalidModulus(2));
    }
    check_invertible(a, n)?;
    order_mod_factored(a, &factor_integer(n)?)
}

/// As [`order_mod`], with the factorization of `N` supplied by the caller.
pub fn order_mod_factored(a: &IntMatrix, n: &FactoredInteger) -> Result<OrderResult> {
    let modulus = n.n().clone();
    if modulus < BigInt::from(2) {
        return Err(Error::InvalidModulus(2));
    }
    check_invertible(a, &modulus)?;
    let mut order = BigInt::one();
    for (p, e) in n.factors() {
        order = order.lcm(&local_order(a, p, *e)?);
    }
    certify(a, &modulus, order)
}

/// Reduces a known period `M` (with `A^M ≡ I mod N`) to the exact order.
pub fn order_mod_from_multiple(a: &IntMatrix, n: &BigInt, multiple: &FactoredInteger) -> Result<BigInt> {
    if n < &BigInt::one() {
        return Err(Error::InvalidModulus(1));
    }
    let m = ModMatrix::new(a, n);
    if !m.pow(multiple.n()).is_identity() {
        return Err(Error::InvalidBound(format!("A^{} is not the identity mod {n}", multiple.n())));
    }
    Ok(reduce_multiple(&m, multiple.factors()))
}

fn inverse_mod(a: &IntMatrix, n: &BigInt) -> Result<ModMatrix> {
    let det = a.det();
    let ext = det.mod_floor(n).extended_gcd(n);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertibleModN(n.to_string()));
    }
    Ok(ModMatrix::new(&a.adjugate().scale(&ext.x), n))
}

/// Smallest `k ≤ cap` with `A^k ≡ I (mod N)`, found without factoring.
///
/// Baby-step giant-step over `A^j` and `A^(-im)`; the first giant step
/// that hits a stored baby step yields the least exponent.
pub fn order_mod_bruteforce(a: &IntMatrix, n: u64, cap: u64) -> Result<Option<u64>> {
    if n < 2 {
        return Err(Error::InvalidModulus(2));
    }
    let nb = BigInt::from(n);
    check_invertible(a, &nb)?;
    if cap == 0 {
        return Ok(None);
    }
    let base = ModMatrix::new(a, &nb);
    let steps = (cap as f64).sqrt().ceil() as u64 + 1;
    let mut table: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut cur = ModMatrix::identity(a.dim(), &nb);
    for j in 0..steps {
        if j > 0 && cur.is_identity() {
            return Ok((j <= cap).then_some(j));
        }
        table.entry(cur.word_key()).or_insert(j);
        cur = cur.mul(&base);
    }
    let giant = inverse_mod(a, &nb)?.pow(&BigInt::from(steps));
    let mut g = giant.clone();
    let mut i = 1u64;
    while i * steps <= cap {
        if let Some(&j) = table.get(&g.word_key()) {
            let k = i * steps + j;
            return Ok((k <= cap).then_some(k));
        }
        g = g.mul(&giant);
        i += 1;
    }
    Ok(None)
}
