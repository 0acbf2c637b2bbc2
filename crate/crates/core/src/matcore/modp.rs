//! Dense polynomials over the prime field with `p < 2^31`, lowest degree first.

use rand::Rng;

pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        PrimeField { p }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[cfg(test)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut f: Fp) -> Fp {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn reduce(&self, coeffs: &[num_bigint::BigInt]) -> Fp {
        use num_traits::ToPrimitive;
        let pb = num_bigint::BigInt::from(self.p);
        let v = coeffs
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                r.to_u64().expect("residue fits")
            })
            .collect();
        self.trim(v)
    }

    #[cfg(test)]
    pub fn add_poly(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn sub_poly(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn mul_poly(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn scale_poly(&self, a: &Fp, k: u64) -> Fp {
        self.trim(a.iter().map(|&x| self.mul(x, k)).collect())
    }

    pub fn make_monic(&self, a: &Fp) -> Fp {
        match a.last() {
            Some(&lc) => self.scale_poly(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for k in (db..a.len()).rev() {
            let t = self.mul(r[k], inv);
            if t == 0 {
                continue;
            }
            q[k - db] = t;
            for (j, &c) in b.iter().enumerate() {
                r[k - db + j] = self.sub(r[k - db + j], self.mul(t, c));
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.make_monic(&a)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.last() {
            Some(&lc) => {
                let inv = self.inv(lc);
                (
                    self.scale_poly(&r0, inv),
                    self.scale_poly(&s0, inv),
                    self.scale_poly(&t0, inv),
                )
            }
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod m`
    pub fn powmod(&self, base: &Fp, mut e: u128, m: &Fp) -> Fp {
        let mut acc = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul_poly(&acc, &b), m);
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.mul_poly(&b, &b), m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// returns `(g_d, d)` where `g_d` is the product of all irreducible
    /// factors of degree `d`.
    pub fn distinct_degree(&self, f: &Fp) -> Vec<(Fp, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                let deg = f.len() - 1;
                out.push((f, deg));
                break;
            }
            h = self.powmod(&h, self.p as u128, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic product of irreducibles, all of
    /// degree `d` (odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &Fp, d: usize, rng: &mut R) -> Vec<Fp> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.clone()];
        }
        loop {
            let a: Fp = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            // a^((p^d - 1)/2) = (a · a^p · … · a^(p^(d-1)))^((p-1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = self.powmod(&frob, self.p as u128, f);
                norm = self.rem(&self.mul_poly(&norm, &frob), f);
            }
            let b = self.powmod(&norm, ((self.p - 1) / 2) as u128, f);
            let g = self.gcd(&self.sub_poly(&b, &vec![1]), f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.make_monic(&h), d, rng));
                return out;
            }
        }
    }

    /// All monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &Fp, rng: &mut R) -> Vec<Fp> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}
