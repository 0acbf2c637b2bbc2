//! Acceptance criteria 1–9, one `PASS`/`FAIL` line each; exits nonzero on
//! any failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use matperiod::algnum::{eigenvalues, height, power, power_minpoly};
use matperiod::classify::{classify, classify_default, default_r_bound, finite_order};
use matperiod::growth::{entropy, gcd_power_stream, ord_scan, small_period_sequence};
use matperiod::matcore::{factor_int_poly, IntMatrix};
use matperiod::modorder::{factor_integer, order_mod, order_mod_bruteforce};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `ln((3 + √5) / 2)`
fn log_lambda() -> f64 {
    ((3.0 + 5f64.sqrt()) / 2.0).ln()
}

fn criterion_1_order_oracle_equivalence() -> (bool, String) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut checked, mut mismatches) = (0u64, Vec::new());
    for _ in 0..200 {
        let d = rng.gen_range(1..=3usize);
        let a = random_nonsingular(d, 5, &mut rng);
        let det = a.det();
        for n in 2..=300u64 {
            if !det.gcd(&BigInt::from(n)).is_one() {
                continue;
            }
            let fast = order_mod(&a, &BigInt::from(n)).unwrap().order;
            let cap = n.pow(d as u32);
            let slow = order_mod_bruteforce(&a, n, cap).unwrap();
            checked += 1;
            if slow.map(BigInt::from) != Some(fast.clone()) {
                mismatches.push((a.rows(), n, fast, slow));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed < Duration::from_secs(30);
    let mut detail = format!(
        "{checked} (A, N) pairs, {} mismatches, {:.2}s (limit 30s)",
        mismatches.len(),
        elapsed.as_secs_f64()
    );
    if let Some(first) = mismatches.first() {
        detail += &format!("; first {first:?}");
    }
    (ok, detail)
}

fn criterion_2_powers_of_two() -> (bool, String) {
    let a = m(&[&[2]]);
    let mut ok = true;
    for k in 2..=20u32 {
        let n = (BigInt::one() << k) - 1;
        ok &= order_mod(&a, &n).unwrap().order == BigInt::from(k);
    }
    let ratio = 20.0 / ((1u64 << 20) as f64 - 1.0).ln();
    let target = 1.0 / 2f64.ln();
    let rel = (ratio - target).abs() / target;
    ok &= rel <= 0.05;
    (
        ok,
        format!("ord(2, 2^k-1) = k for k = 2..20; k=20 ratio {ratio:.5} vs {target:.5} ({:.2}% off, limit 5%)", 100.0 * rel),
    )
}

fn criterion_3_small_order_for_cat_map() -> (bool, String) {
    let start = Instant::now();
    let rows = small_period_sequence(&cat(), 1, 30).unwrap();
    let elapsed = start.elapsed();
    let best = rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let hits = rows.iter().filter(|r| r.ratio <= 2.30).count();
    let ok = hits >= 1 && elapsed < Duration::from_secs(10);
    (
        ok,
        format!(
            "{hits} rows with ratio <= 2.30 (best {best:.5}, 2/log λ = {:.5}), {:.2}s (limit 10s)",
            2.0 / log_lambda(),
            elapsed.as_secs_f64()
        ),
    )
}

/// Fitted on `2 ≤ k ≤ 10` by the big-integer gcd table; attained at `k = 2`.
const GROWTH_C: f64 = 0.9624236501192069;

fn criterion_4_exponential_gcd_growth() -> (bool, String) {
    let s = gcd_power_stream(&cat(), 40).unwrap();
    let lower = |k: u64| k as f64 / 2.0 * log_lambda();
    let refit = s.records[1..10]
        .iter()
        .map(|r| lower(r.n) - r.log_g)
        .fold(f64::NEG_INFINITY, f64::max);
    let violations: Vec<u64> = s.records[1..]
        .iter()
        .filter(|r| r.log_g < lower(r.n) - GROWTH_C - 1e-9)
        .map(|r| r.n)
        .collect();
    let ok = violations.is_empty() && (refit - GROWTH_C).abs() < 1e-9;
    (ok, format!("C = {GROWTH_C:.6} (refit {refit:.6}); violations for 2 <= k <= 40: {violations:?}"))
}

/// Largest `log gcd(2^n - 1, 3^n - 1) / n` over `100 ≤ n ≤ 400` is 0.223924 (n = 120).
const DIAG23_TAIL_THRESHOLD: f64 = 0.225;

fn criterion_5_gcd_trend() -> (bool, String) {
    let s = gcd_power_stream(&m(&[&[2, 0], &[0, 3]]), 400).unwrap();
    let (arg, max) = s
        .records
        .iter()
        .filter(|r| r.n >= 100)
        .fold((0, f64::NEG_INFINITY), |acc, r| if r.ratio > acc.1 { (r.n, r.ratio) } else { acc });
    let two = gcd_power_stream(&m(&[&[2]]), 400).unwrap();
    let min_two = two
        .records
        .iter()
        .filter(|r| r.n >= 100)
        .map(|r| r.ratio)
        .fold(f64::INFINITY, f64::min);
    let ok = max < DIAG23_TAIL_THRESHOLD && min_two > 0.6 * 2f64.ln();
    (
        ok,
        format!(
            "diag(2,3) max ratio {max:.6} at n={arg} (threshold {DIAG23_TAIL_THRESHOLD}); (2) min ratio {min_two:.6} > {:.6}",
            0.6 * 2f64.ln()
        ),
    )
}

fn criterion_6_classifier_vectors() -> (bool, String) {
    let (mut passed, mut failures) = (0, Vec::new());
    for (name, a, verdict, branch) in suite() {
        let v = classify_default(&a).unwrap();
        let mut good = v.verdict.as_str() == verdict && v.branch.as_str() == branch && v.verify(&a).unwrap();
        let mut extra = String::new();
        match (name, &v.witness) {
            ("I", Some(matperiod::classify::Witness::FiniteOrder { order })) => good &= *order == 1,
            ("[[0,-1],[1,0]]", Some(matperiod::classify::Witness::FiniteOrder { order })) => good &= *order == 4,
            ("diag(2,4)", Some(matperiod::classify::Witness::IntegerPower { base, .. })) => good &= *base == big(2),
            (_, Some(matperiod::classify::Witness::QuadraticUnit { r, discriminant, .. })) => {
                good &= *discriminant == big(5);
                if name.contains('⊗') {
                    good &= *r == 2;
                }
                extra = format!(" r={r} disc={discriminant}");
            }
            _ => {}
        }
        if good {
            passed += 1;
        } else {
            failures.push(format!("{name}: got {}/{}{extra}, expected {verdict}/{branch}", v.verdict, v.branch));
        }
    }
    let detail = format!("{passed}/{} vectors exact; failures: [{}]", passed + failures.len(), failures.join("; "));
    (failures.is_empty(), detail)
}

fn criterion_7_gcd_moduli_have_dividing_order() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, a, _, _) in suite() {
        if finite_order(&a).unwrap().is_some() {
            continue;
        }
        for r in gcd_power_stream(&a, 30).unwrap().records {
            if r.g <= BigInt::one() {
                continue;
            }
            let ord = order_mod(&a, &r.g).unwrap().order;
            checked += 1;
            if !BigInt::from(r.n).is_multiple_of(&ord) {
                bad.push((name, r.n, ord));
            }
        }
    }
    let ok = bad.is_empty() && checked > 0;
    (ok, format!("{checked} (A, n) pairs with g > 1; failures {bad:?}"))
}

/// `max (2 / log 6)·log N - ord(diag(2,3), N)` over valid `N ≤ 100`, attained at `N = 5`.
const ENTROPY_C0: f64 = -2.203511196592146;

fn criterion_8_entropy_lower_bound() -> (bool, String) {
    let a = m(&[&[2, 0], &[0, 3]]);
    let eta = entropy(&a).unwrap().eta;
    let eta_ok = (eta.value - 6f64.ln()).abs() <= eta.err + 1e-12;
    let slope = 2.0 / eta.value;
    let scan = ord_scan(&a, 2, 10_000).unwrap();
    let deficit = |r: &matperiod::growth::ScanRecord| slope * (r.n as f64).ln() - r.order.to_f64().unwrap();
    let refit = scan
        .records
        .iter()
        .filter(|r| r.n <= 100)
        .map(deficit)
        .fold(f64::NEG_INFINITY, f64::max);
    let violations: Vec<u64> = scan
        .records
        .iter()
        .filter(|r| deficit(r) > ENTROPY_C0 + 1e-9)
        .map(|r| r.n)
        .collect();
    let ok = eta_ok && violations.is_empty() && (refit - ENTROPY_C0).abs() < 1e-9;
    (
        ok,
        format!(
            "eta = {:.6} ± {:.1e}; C0 = {ENTROPY_C0:.6} (refit {refit:.6}); {} moduli N <= 10^4, violations {violations:?}",
            eta.value,
            eta.err,
            scan.records.len()
        ),
    )
}

fn divisibility_ladder() -> bool {
    suite().iter().all(|(_, a, _, _)| {
        let g: Vec<BigInt> = gcd_power_stream(a, 30).unwrap().records.into_iter().map(|r| r.g).collect();
        (1..=30usize).all(|n| (1..=n).filter(|mm| n % mm == 0).all(|mm| divides(&g[mm - 1], &g[n - 1])))
    })
}

/// `a | b`, with `0 | 0`.
fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        b.is_multiple_of(a)
    }
}

fn order_laws(rng: &mut ChaCha8Rng) -> bool {
    let ord = |a: &IntMatrix, n: u64| order_mod(a, &BigInt::from(n)).unwrap();
    for _ in 0..30 {
        let d = rng.gen_range(1..=3usize);
        let a = random_nonsingular(d, 5, rng);
        let det = a.det();
        let coprime = |n: u64| det.gcd(&BigInt::from(n)).is_one();
        let (mm, nn) = (rng.gen_range(2..60u64), rng.gen_range(2..60u64));
        if !coprime(mm) || !coprime(nn) {
            continue;
        }
        let (om, on) = (ord(&a, mm), ord(&a, nn));
        if !om.verify(&a).unwrap() {
            return false;
        }
        if mm.gcd(&nn) == 1 && ord(&a, mm * nn).order != om.order.lcm(&on.order) {
            return false;
        }
        if !ord(&a, mm * nn).order.is_multiple_of(&om.order) {
            return false;
        }
        let p = rng.gen_range(1..=6u64);
        let expect = &om.order / om.order.gcd(&BigInt::from(p));
        if ord(&a.pow(p), mm).order != expect {
            return false;
        }
    }
    true
}

fn conjugation_invariance(rng: &mut ChaCha8Rng) -> bool {
    suite().iter().all(|(_, a, _, _)| {
        let base = classify_default(a).unwrap();
        (0..20).all(|_| {
            let p = random_unimodular(a.dim(), 4, rng);
            let b = conjugate(a, &p);
            let v = classify(&b, 64, default_r_bound(b.dim())).unwrap();
            b.char_poly() == a.char_poly() && v.verdict == base.verdict && v.branch == base.branch && v.verify(&b).unwrap()
        })
    })
}

fn power_stability() -> bool {
    suite().iter().all(|(_, a, _, _)| {
        let base = classify_default(a).unwrap().verdict;
        (1..=4).all(|k| classify_default(&a.pow(k)).unwrap().verdict == base)
    })
}

fn factorization_round_trips(rng: &mut ChaCha8Rng) -> bool {
    let polys = suite().iter().all(|(_, a, _, _)| {
        let f = a.char_poly();
        factor_int_poly(&f).unwrap().expand() == f
    });
    let ints = (0..50).all(|_| {
        let n = BigInt::from(rng.gen_range(2u64..u64::MAX)) * BigInt::from(rng.gen_range(2u64..1 << 20));
        let f = factor_integer(&n).unwrap();
        f.factors().iter().fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize)) == n
    });
    polys && ints
}

fn height_power_consistency() -> bool {
    suite().iter().all(|(_, a, _, _)| {
        eigenvalues(a).unwrap().iter().all(|x| {
            let h = height(x).unwrap();
            power_minpoly(x, 1).unwrap() == *x.minpoly()
                && [-3i64, -1, 2, 3, 6].iter().all(|&n| {
                    let hn = height(&power(x, n).unwrap()).unwrap();
                    let want = n.unsigned_abs() as f64 * h.value;
                    (hn.value - want).abs() <= hn.err + n.unsigned_abs() as f64 * h.err + 1e-9
                })
        })
    })
}

fn entropy_laws(rng: &mut ChaCha8Rng) -> bool {
    let close = |x: &matperiod::algnum::Estimate, y: f64, slack: f64| (x.value - y).abs() <= x.err + slack + 1e-9;
    suite().iter().all(|(_, a, _, _)| {
        let e = entropy(a).unwrap().eta;
        let cube = entropy(&a.pow(3)).unwrap().eta;
        let p = random_unimodular(a.dim(), 4, rng);
        let conj = entropy(&conjugate(a, &p)).unwrap().eta;
        let sum = entropy(&block_diag(a, &cat())).unwrap().eta;
        close(&cube, 3.0 * e.value, 3.0 * e.err)
            && close(&conj, e.value, e.err)
            && close(&sum, e.value + log_lambda(), e.err + 1e-12)
    })
}

fn criterion_9_invariant_suites() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let suites: Vec<(&str, bool)> = vec![
        ("divisibility ladder", divisibility_ladder()),
        ("order laws (lcm, divisibility, powers, certificates)", order_laws(&mut rng)),
        ("conjugation invariance of classify", conjugation_invariance(&mut rng)),
        ("power stability of classify", power_stability()),
        ("factorization round trips", factorization_round_trips(&mut rng)),
        ("height / power_minpoly consistency", height_power_consistency()),
        ("entropy laws", entropy_laws(&mut rng)),
    ];
    let failed: Vec<&str> = suites.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let names: Vec<&str> = suites.iter().map(|(n, _)| *n).collect();
    (
        failed.is_empty(),
        format!("{} suites [{}]; failed {failed:?}", suites.len(), names.join(", ")),
    )
}

type Criterion = fn() -> (bool, String);

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("1", criterion_1_order_oracle_equivalence),
        ("2", criterion_2_powers_of_two),
        ("3", criterion_3_small_order_for_cat_map),
        ("4", criterion_4_exponential_gcd_growth),
        ("5", criterion_5_gcd_trend),
        ("6", criterion_6_classifier_vectors),
        ("7", criterion_7_gcd_moduli_have_dividing_order),
        ("8", criterion_8_entropy_lower_bound),
        ("9", criterion_9_invariant_suites),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (id, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|x| x == id) {
            continue;
        }
        let (ok, detail) = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        failed += usize::from(!ok);
        println!("{} criterion {id}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
