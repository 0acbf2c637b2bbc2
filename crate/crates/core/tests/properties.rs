//! Randomized invariants across the public API.

#[allow(dead_code)]
mod common;

use common::*;
use matperiod::algnum::{
    cyclotomic_poly, eigenvalues, height, isolate_roots, mult_dependent, power, power_minpoly, same_number,
};
use matperiod::growth::gcd_power_stream;
use matperiod::matcore::{char_poly, factor_int_poly, mat_pow, min_poly, IntMatrix, IntPoly};
use matperiod::modorder::{factor_integer, order_mod, order_mod_bruteforce};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(d: usize, r: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-r..=r, d * d).prop_map(move |v| {
        let rows: Vec<Vec<BigInt>> = v.chunks(d).map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntMatrix::from_rows(rows).unwrap()
    })
}

fn nonsingular(d: usize, r: i64) -> impl Strategy<Value = IntMatrix> {
    matrix(d, r).prop_filter("singular", |a| !a.det().is_zero())
}

fn poly(deg: usize, r: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-r..=r, deg + 1)
        .prop_filter("nonzero lead", |c| c.last() != Some(&0))
        .prop_map(|c| IntPoly::from_i64(&c))
}

fn bi(n: u64) -> BigInt {
    BigInt::from(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn char_poly_is_conjugation_invariant(a in matrix(3, 5), seed in any::<u64>()) {
        let p = random_unimodular(3, 6, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(char_poly(&conjugate(&a, &p)), char_poly(&a));
    }

    #[test]
    fn min_poly_annihilates_and_divides(a in matrix(3, 4)) {
        let mu = min_poly(&a).unwrap();
        prop_assert!(a.eval_poly(&mu).is_zero());
        prop_assert!(mu.divides(&char_poly(&a)).unwrap());
    }

    #[test]
    fn mat_pow_adds_exponents(a in matrix(2, 4), s in 0u64..12, t in 0u64..12) {
        prop_assert_eq!(mat_pow(&a, s).mul(&mat_pow(&a, t)).unwrap(), mat_pow(&a, s + t));
    }

    #[test]
    fn factorization_expands_back(f in poly(5, 9)) {
        let fac = factor_int_poly(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        for g in fac.irreducibles() {
            prop_assert!(factor_int_poly(g).unwrap().is_irreducible());
        }
    }

    #[test]
    fn integer_factorization_multiplies_back(n in 2u64..u64::MAX) {
        let f = factor_integer(&bi(n)).unwrap();
        let prod = f.factors().iter().fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(prod, bi(n));
    }

    #[test]
    fn cyclotomic_divides_x_to_the_m_minus_one(m in 1u64..40, k in 1u64..4) {
        let mut c = vec![0i64; (m * k) as usize + 1];
        c[0] = -1;
        c[(m * k) as usize] = 1;
        prop_assert!(cyclotomic_poly(m).divides(&IntPoly::from_i64(&c)).unwrap());
    }

    #[test]
    fn roots_multiply_to_constant_term(f in poly(4, 6)) {
        let f = f.primitive_part();
        prop_assume!(f.is_squarefree() && !f.coeff(0).is_zero());
        let roots = isolate_roots(&f, 60).unwrap();
        prop_assert_eq!(roots.len(), 4);
        let (mut re, mut im) = (1.0f64, 0.0f64);
        for r in &roots {
            let (x, y) = r.approx();
            (re, im) = (re * x - im * y, re * y + im * x);
        }
        let target = f.coeff(0).to_string().parse::<f64>().unwrap() / f.lead().to_string().parse::<f64>().unwrap();
        prop_assert!((re - target).abs() <= 1e-6 * target.abs().max(1.0), "{} vs {}", re, target);
        prop_assert!(im.abs() <= 1e-6 * target.abs().max(1.0));
    }

    #[test]
    fn height_scales_with_powers(a in nonsingular(2, 4), n in 1i64..6) {
        for e in eigenvalues(&a).unwrap() {
            let h = height(&e).unwrap();
            let en = power(&e, n).unwrap();
            let hn = height(&en).unwrap();
            let want = n as f64 * h.value;
            prop_assert!((hn.value - want).abs() <= hn.err + n as f64 * h.err + 1e-9);
            prop_assert_eq!(&power_minpoly(&e, n).unwrap(), en.minpoly());
        }
    }

    #[test]
    fn power_inverse_round_trips(a in nonsingular(2, 4), n in 1i64..5) {
        for e in eigenvalues(&a).unwrap() {
            let back = power(&power(&e, n).unwrap(), -1).unwrap();
            prop_assert!(same_number(&power(&back, -1).unwrap(), &power(&e, n).unwrap()).unwrap());
        }
    }

    #[test]
    fn dependence_is_symmetric(a in nonsingular(2, 3)) {
        let eigs = eigenvalues(&a).unwrap();
        prop_assume!(eigs.len() == 2 && eigs.iter().all(|e| height(e).unwrap().value > 1e-6));
        let ab = mult_dependent(&eigs[0], &eigs[1], 24).unwrap();
        let ba = mult_dependent(&eigs[1], &eigs[0], 24).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let (Some(x), Some(y)) = (ab, ba) {
            prop_assert_eq!((x.a.abs(), x.b.abs()), (y.b.abs(), y.a.abs()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_bruteforce(a in matrix(2, 6), n in 2u64..500) {
        prop_assume!(a.det().gcd(&bi(n)).is_one());
        let r = order_mod(&a, &bi(n)).unwrap();
        prop_assert!(r.verify(&a).unwrap());
        let slow = order_mod_bruteforce(&a, n, n * n).unwrap().unwrap();
        prop_assert_eq!(r.order, bi(slow));
    }

    #[test]
    fn order_of_lcm_is_lcm_of_orders(a in matrix(2, 6), n1 in 2u64..200, n2 in 2u64..200) {
        prop_assume!(a.det().gcd(&bi(n1 * n2)).is_one());
        let o1 = order_mod(&a, &bi(n1)).unwrap().order;
        let o2 = order_mod(&a, &bi(n2)).unwrap().order;
        let o = order_mod(&a, &bi(n1.lcm(&n2))).unwrap().order;
        prop_assert_eq!(o, o1.lcm(&o2));
    }

    #[test]
    fn order_of_power(a in matrix(2, 6), n in 2u64..300, k in 1u64..20) {
        prop_assume!(a.det().gcd(&bi(n)).is_one());
        let o = order_mod(&a, &bi(n)).unwrap().order;
        let ok = order_mod(&mat_pow(&a, k), &bi(n)).unwrap().order;
        prop_assert_eq!(ok, &o / o.gcd(&bi(k)));
    }

    #[test]
    fn gcd_stream_respects_divisibility(a in nonsingular(2, 5)) {
        prop_assume!(!(0..=12u64).any(|n| n > 0 && mat_pow(&a, n).is_identity()));
        let g: Vec<BigInt> = gcd_power_stream(&a, 24).unwrap().records.into_iter().map(|r| r.g).collect();
        for n in 1..=24usize {
            for d in (1..=n).filter(|d| n % d == 0) {
                prop_assert!((&g[n - 1] % &g[d - 1]).is_zero());
            }
            if g[n - 1] > BigInt::one() {
                let o = order_mod(&a, &g[n - 1]).unwrap().order;
                prop_assert!((bi(n as u64) % o).is_zero());
            }
        }
    }
}
