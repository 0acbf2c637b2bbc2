//! Integer factorization: trial division by primes below 10^6, Miller–Rabin,
//! Pollard rho with Brent's cycle detection.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_ROUNDS: usize = 40;

/// `n = ∏ p^e` with primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    n: BigInt,
    factors: Vec<(BigInt, u32)>,
}

impl FactoredInteger {
    /// Builds from a claimed factorization, checking the product and primality.
    pub fn from_factors(mut factors: Vec<(BigInt, u32)>) -> Result<Self> {
        factors.retain(|(_, e)| *e > 0);
        factors.sort();
        let mut n = BigInt::one();
        for (i, (p, e)) in factors.iter().enumerate() {
            if i > 0 && factors[i - 1].0 == *p {
                return Err(Error::BadFactorization(format!("repeated prime {p}")));
            }
            if !is_probable_prime(p) {
                return Err(Error::BadFactorization(format!("{p} is not prime")));
            }
            n *= num_traits::pow(p.clone(), *e as usize);
        }
        Ok(FactoredInteger { n, factors })
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            match factors.iter_mut().find(|(q, _)| q == p) {
                Some((_, f)) => *f += e,
                None => factors.push((p.clone(), *e)),
            }
        }
        factors.sort();
        FactoredInteger {
            n: &self.n * &other.n,
            factors,
        }
    }
}

impl std::fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n];
        let mut out = Vec::new();
        for i in 2..n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// Complete factorization of `n ≥ 1`.
pub fn factor_integer(n: &BigInt) -> Result<FactoredInteger> {
    if !n.is_positive() {
        return Err(Error::InvalidBound(format!("cannot factor {n}")));
    }
    let mut m = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        let p = BigInt::from(p);
        if &p * &p > m {
            break;
        }
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    if !m.is_one() {
        let mut big = Vec::new();
        split(&m, &mut big);
        big.sort();
        for p in big {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(FactoredInteger {
        n: n.clone(),
        factors,
    })
}

/// Factorization of a `u64`, for callers working in machine integers.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_integer(&BigInt::from(n))
        .expect("positive")
        .factors
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("fits"), e))
        .collect()
}

fn split(m: &BigInt, out: &mut Vec<BigInt>) {
    if m.is_one() {
        return;
    }
    if is_probable_prime(m) {
        out.push(m.clone());
        return;
    }
    let d = find_divisor(m);
    split(&d, out);
    split(&(m / &d), out);
}

static FACTOR_SEED: AtomicU64 = AtomicU64::new(0);

/// Sets the seed mixed into the randomized stages (Pollard rho starts and
/// Miller–Rabin bases above 2^64). Results never depend on it.
pub fn set_factor_seed(seed: u64) {
    FACTOR_SEED.store(seed, Ordering::Relaxed);
}

fn seed_for(n: &BigInt) -> u64 {
    let h = n
        .to_bytes_le()
        .1
        .iter()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    h ^ FACTOR_SEED.load(Ordering::Relaxed).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// A nontrivial divisor of an odd composite `n`.
fn find_divisor(n: &BigInt) -> BigInt {
    if let Some(r) = perfect_square_root(n) {
        return r;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(n));
    if let Some(small) = n.to_u64() {
        loop {
            let c = rng.gen_range(1..small);
            let y = rng.gen_range(0..small);
            let d = brent_u64(small, c, y);
            if d != small {
                return BigInt::from(d);
            }
        }
    }
    loop {
        let c = rng.gen_bigint_range(&BigInt::one(), n);
        let y = rng.gen_bigint_range(&BigInt::zero(), n);
        let d = brent_big(n, &c, &y);
        if &d != n {
            return d;
        }
    }
}

fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn brent_u64(n: u64, c: u64, y0: u64) -> u64 {
    let f = |y: u64| ((y as u128 * y as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut r, mut q, mut g) = (y0, 1u64, 1u64, 1u64);
    let m = 128;
    let (mut x, mut ys) = (y, y);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    g
}

fn brent_big(n: &BigInt, c: &BigInt, y0: &BigInt) -> BigInt {
    let f = |y: &BigInt| (y * y + c) % n;
    let (mut y, mut r, mut q, mut g) = (y0.clone(), 1u64, BigInt::one(), BigInt::one());
    let m = 128;
    let (mut x, mut ys) = (y.clone(), y.clone());
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    g
}

const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic below 2^64; above, a strong probable-prime test with 40
/// bases drawn from a generator seeded by `n`.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &small_primes()[..64] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(n));
    let two = BigInt::from(2);
    let bases = DETERMINISTIC_BASES
        .iter()
        .map(|&b| BigInt::from(b))
        .chain((0..MR_ROUNDS).map(|_| rng.gen_bigint_range(&two, &n1)));
    'base: for a in bases {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for &a in &DETERMINISTIC_BASES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    fn trial_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(factor_u64(91), vec![(7, 1), (13, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(1_048_575), trial_oracle(1_048_575));
        assert_eq!(factor_u64(1_048_575), vec![(3, 1), (5, 2), (11, 1), (31, 1), (41, 1)]);
    }

    #[test]
    fn zero_rejected() {
        assert!(factor_integer(&BigInt::zero()).is_err());
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in (1..3000u64).chain([999_983 * 1_000_003, 4_294_967_297, 600_851_475_143]) {
            if n < 10_000_000_000_000 {
                assert_eq!(factor_u64(n), trial_oracle(n), "n = {n}");
            }
        }
    }

    #[test]
    fn semiprimes_beyond_trial_range() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(factor_u64(p * q), vec![(q, 1), (p, 1)]);
        assert_eq!(factor_u64(p * p), vec![(p, 2)]);
        // a product of two 40-bit primes squared overflows u64
        let r = big(1_099_511_627_791);
        let s = big(1_099_511_628_401);
        let n = &r * &r * &s;
        let fac = factor_integer(&n).unwrap();
        assert_eq!(fac.factors(), &[(r, 2), (s, 1)]);
    }

    #[test]
    fn semiprime_above_2_63() {
        // 3499999991 · 4294967291 lies between 2^63 and 2^64
        let (p, q) = (3_499_999_991u64, 4_294_967_291u64);
        assert_eq!(factor_u64(p * q), vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        let m127 = (BigInt::one() << 127) - 1;
        assert!(is_probable_prime(&m127));
        assert!(!is_probable_prime(&((BigInt::one() << 128) + 1)));
    }

    #[test]
    fn from_factors_validates() {
        assert!(FactoredInteger::from_factors(vec![(big(4), 1)]).is_err());
        let f = FactoredInteger::from_factors(vec![(big(5), 2), (big(3), 1)]).unwrap();
        assert_eq!(f.n(), &big(75));
        assert_eq!(f.to_string(), "3 * 5^2");
    }
}
