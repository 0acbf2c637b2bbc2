//! Factorization of univariate integer polynomials: squarefree decomposition,
//! factorization modulo a good prime, multifactor Hensel lifting and subset
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PrimeField};
use super::poly::IntPoly;
use crate::error::Result;

/// `unit · content · ∏ factor^multiplicity`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `1` or `-1`.
    pub unit: i8,
    /// Positive.
    pub content: BigInt,
    /// Irreducible, primitive, positive leading coefficient, pairwise distinct;
    /// sorted by degree then coefficients.
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    /// Multiplies everything back out.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(&self.content * BigInt::from(self.unit));
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    /// Irreducible factors without multiplicities.
    pub fn irreducibles(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Complete factorization over the integers.
pub fn factor_int_poly(f: &IntPoly) -> Result<Factorization> {
    f.deg()?;
    let unit = if f.lead().is_negative() { -1 } else { 1 };
    let content = f.content();
    let prim = f.primitive_part();
    let mut factors = Vec::new();
    if prim.deg()? > 0 {
        for (g, mult) in prim.squarefree_decomposition()? {
            for h in factor_squarefree(&g)? {
                factors.push((h, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(Factorization {
        unit,
        content,
        factors,
    })
}

/// True when `f` (nonconstant, primitive up to sign) is irreducible over the integers.
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    if f.deg()? == 0 {
        return Ok(false);
    }
    if !f.content().is_one() {
        return Ok(false);
    }
    Ok(factor_int_poly(f)?.is_irreducible())
}

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
fn factor_squarefree(g: &IntPoly) -> Result<Vec<IntPoly>> {
    let n = g.deg()?;
    if n == 1 {
        return Ok(vec![g.primitive_part()]);
    }
    if g.coeff(0).is_zero() {
        let rest = g.div_exact(&IntPoly::x())?.expect("x divides");
        let mut out = vec![IntPoly::x()];
        if rest.deg()? > 0 {
            out.extend(factor_squarefree(&rest)?);
        }
        return Ok(out);
    }
    // F(y) = l^(n-1) g(y/l) is monic; its factors G map back to primpart(G(l x)).
    let l = g.lead();
    let monic = g.monic_transform();
    let monic_factors = factor_monic_squarefree(&monic)?;
    Ok(monic_factors
        .into_iter()
        .map(|h| if l.is_one() { h } else { h.scale_var(&l).primitive_part() })
        .collect())
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

/// Irreducible monic factors of a monic squarefree integer polynomial.
fn factor_monic_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let n = f.deg()?;
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7470_6572);
    let mut best: Option<(PrimeField, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let field = PrimeField::new(p);
        let fp = field.reduce(f.coeffs());
        if fp.len() != n + 1 {
            continue;
        }
        let g = field.gcd(&fp, &field.derivative(&fp));
        if g.len() != 1 {
            continue;
        }
        let factors = field.factor_squarefree(&fp, &mut rng);
        tried += 1;
        let better = best.as_ref().map_or(true, |(_, b)| factors.len() < b.len());
        if better {
            best = Some((field, factors));
        }
        if best.as_ref().is_some_and(|(_, b)| b.len() == 1) || tried >= 5 {
            break;
        }
    }
    let (field, modular) = best.expect("a good prime always exists");
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    // Coefficients of any monic factor are bounded by 2^n ||f||_1.
    let bound = (BigInt::one() << n) * f.l1_norm();
    let p = BigInt::from(field.p);
    let mut modulus = p.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift(f, &field, &modular, k);
    Ok(recombine(f, lifted, &modulus))
}

/// Lifts `f ≡ ∏ u_i (mod p)` to `f ≡ ∏ U_i (mod p^k)`, all factors monic.
fn hensel_lift(f: &IntPoly, field: &PrimeField, factors: &[Fp], k: u32) -> Vec<IntPoly> {
    let r = factors.len();
    // s_i = (∏_{j≠i} u_j)^(-1) mod u_i
    let cofactor_inverses: Vec<Fp> = (0..r)
        .map(|i| {
            let mut prod = vec![1u64];
            for (j, u) in factors.iter().enumerate() {
                if j != i {
                    prod = field.rem(&field.mul_poly(&prod, u), &factors[i]);
                }
            }
            let (g, s, _) = field.ext_gcd(&prod, &factors[i]);
            debug_assert_eq!(g, vec![1]);
            field.rem(&s, &factors[i])
        })
        .collect();

    let to_int = |v: &Fp| IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect());
    let mut lifted: Vec<IntPoly> = factors.iter().map(to_int).collect();
    let p = BigInt::from(field.p);
    let mut q = p.clone();
    for _ in 1..k {
        let prod = lifted
            .iter()
            .fold(IntPoly::one(), |acc, u| acc.mul(u));
        let err = f.sub(&prod);
        let e: Vec<BigInt> = err.coeffs().iter().map(|c| c / &q).collect();
        let e_bar = field.reduce(&e);
        for (i, u) in lifted.iter_mut().enumerate() {
            let delta = field.rem(&field.mul_poly(&e_bar, &cofactor_inverses[i]), &factors[i]);
            *u = u.add(&to_int(&delta).scale(&q));
        }
        q *= &p;
    }
    lifted
}

fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Zassenhaus subset recombination of the lifted factors.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut g = IntPoly::one();
            for &i in &idx {
                g = symmetric_mod(&g.mul(&lifted[i]), modulus);
            }
            if let Ok(Some(q)) = rest.div_exact(&g) {
                out.push(g);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
