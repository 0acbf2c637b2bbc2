//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use matperiod::matcore::{IntMatrix, IntPoly};
use num_bigint::BigInt;
use rand::Rng;

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows).unwrap()
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn swap() -> IntMatrix {
    m(&[&[0, 1], &[1, 0]])
}

pub fn cat() -> IntMatrix {
    m(&[&[2, 1], &[1, 1]])
}

/// Companion matrix of `x^2 - 2x - 4`.
pub fn companion_2_4() -> IntMatrix {
    IntMatrix::companion(&IntPoly::from_i64(&[-4, -2, 1])).unwrap()
}

/// The classifier vector suite with expected `(verdict, branch)`.
pub fn suite() -> Vec<(&'static str, IntMatrix, &'static str, &'static str)> {
    vec![
        ("I", IntMatrix::identity(2), "exceptional", "finite_order"),
        ("[[0,-1],[1,0]]", m(&[&[0, -1], &[1, 0]]), "exceptional", "finite_order"),
        ("diag(2,4)", m(&[&[2, 0], &[0, 4]]), "exceptional", "integer_power"),
        ("[[1,1],[1,0]]", m(&[&[1, 1], &[1, 0]]), "exceptional", "quadratic_unit"),
        ("[[2,1],[1,1]]", cat(), "exceptional", "quadratic_unit"),
        ("[[2,1],[1,1]] ⊗ swap", matperiod::growth::kronecker(&cat(), &swap()), "exceptional", "quadratic_unit"),
        ("diag(2,3)", m(&[&[2, 0], &[0, 3]]), "not_exceptional", "rank_ge_2"),
        ("[[1,1],[0,1]]", m(&[&[1, 1], &[0, 1]]), "not_exceptional", "not_diagonalizable"),
        ("companion(x^2-2x-4)", companion_2_4(), "not_exceptional", "rank1_nonqualifying"),
    ]
}

/// Random product of elementary matrices and sign flips; determinant ±1.
pub fn random_unimodular<R: Rng>(d: usize, steps: usize, rng: &mut R) -> IntMatrix {
    let mut p = IntMatrix::identity(d);
    if d == 1 {
        return if rng.gen_bool(0.5) { p } else { m(&[&[-1]]) };
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let mut e = IntMatrix::identity(d);
        e.set(i, j, big(rng.gen_range(-2..=2)));
        if rng.gen_bool(0.1) {
            e.set(i, i, big(-1));
        }
        p = p.mul(&e).unwrap();
    }
    p
}

/// `P^{-1}` for unimodular `P`.
pub fn unimodular_inverse(p: &IntMatrix) -> IntMatrix {
    p.adjugate().scale(&p.det())
}

pub fn conjugate(a: &IntMatrix, p: &IntMatrix) -> IntMatrix {
    p.mul(a).unwrap().mul(&unimodular_inverse(p)).unwrap()
}

pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = IntMatrix::zeros(da + db);
    for i in 0..da {
        for j in 0..da {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..db {
        for j in 0..db {
            out.set(da + i, da + j, b.get(i, j).clone());
        }
    }
    out
}

/// Random `d×d` matrix with entries in `[-r, r]` and nonzero determinant.
pub fn random_nonsingular<R: Rng>(d: usize, r: i64, rng: &mut R) -> IntMatrix {
    loop {
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|_| (0..d).map(|_| big(rng.gen_range(-r..=r))).collect())
            .collect();
        let a = IntMatrix::from_rows(rows).unwrap();
        if a.is_nonsingular() {
            return a;
        }
    }
}

