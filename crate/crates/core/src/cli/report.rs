//! JSON and CSV rendering of library results.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::algnum::{AlgebraicNumber, Estimate};
use crate::classify::{ExceptionalityVerdict, Witness};
use crate::growth::{EntropyResult, GcdStream, Scan, SmallPeriodRow};
use crate::modorder::OrderResult;

const EXACT_LIMIT: i64 = 1 << 53;

/// JSON number below `2^53` in absolute value, decimal string otherwise.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() < EXACT_LIMIT => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

/// Rounds to 6 significant digits.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().expect("float")
}

pub fn real_json(x: f64) -> Value {
    let r = sig6(x);
    if r.is_finite() {
        Value::from(r)
    } else {
        Value::Null
    }
}

pub fn real_csv(x: f64) -> String {
    format!("{}", sig6(x))
}

fn obj(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

fn ints(xs: impl IntoIterator<Item = i64>) -> Value {
    Value::Array(xs.into_iter().map(Value::from).collect())
}

pub fn algebraic_json(x: &AlgebraicNumber) -> Value {
    let (re, im) = x.approx();
    obj(vec![
        ("minpoly", Value::Array(x.minpoly().coeffs().iter().map(int_json).collect())),
        ("re", real_json(re)),
        ("im", real_json(im)),
        ("err", real_json(x.root_box().radius_f64())),
    ])
}

fn estimate_pair(e: &Estimate) -> (Value, Value) {
    (real_json(e.value), real_json(e.err))
}

pub fn order_json(r: &OrderResult) -> Value {
    let cert = r
        .certificate
        .iter()
        .map(|w| {
            obj(vec![
                ("prime", int_json(&w.prime)),
                ("row", Value::from(w.row)),
                ("col", Value::from(w.col)),
                ("residue", int_json(&w.residue)),
            ])
        })
        .collect();
    obj(vec![
        ("order", int_json(&r.order)),
        ("modulus", int_json(&r.modulus)),
        ("certificate", Value::Array(cert)),
    ])
}

pub fn entropy_json(e: &EntropyResult) -> Value {
    let (eta, err) = estimate_pair(&e.eta);
    let roots = e
        .expanding_roots
        .iter()
        .map(|r| {
            let (l, le) = estimate_pair(&r.log_modulus);
            obj(vec![
                ("root", algebraic_json(&r.root)),
                ("multiplicity", Value::from(r.multiplicity)),
                ("log_modulus", l),
                ("log_modulus_err", le),
            ])
        })
        .collect();
    obj(vec![("eta", eta), ("eta_err", err), ("expanding_roots", Value::Array(roots))])
}

pub fn verdict_json(v: &ExceptionalityVerdict, eigs: &[AlgebraicNumber]) -> Value {
    let witness = match &v.witness {
        None => Value::Null,
        Some(Witness::FiniteOrder { order }) => obj(vec![("order", Value::from(*order))]),
        Some(Witness::IntegerPower {
            r,
            torsion_order,
            base,
            exponents,
        }) => obj(vec![
            ("r", Value::from(*r)),
            ("torsion_order", Value::from(*torsion_order)),
            ("base", int_json(base)),
            ("exponents", ints(exponents.iter().copied())),
        ]),
        Some(Witness::QuadraticUnit {
            r,
            discriminant,
            generator,
            exponents,
            torsion_orders,
        }) => obj(vec![
            ("r", Value::from(*r)),
            ("discriminant", int_json(discriminant)),
            ("generator", algebraic_json(generator)),
            ("exponents", ints(exponents.iter().copied())),
            ("torsion_orders", Value::Array(torsion_orders.iter().map(|&o| Value::from(o)).collect())),
            ("eigenvalues", Value::Array(eigs.iter().map(algebraic_json).collect())),
        ]),
        Some(Witness::Independent { i, j }) => obj(vec![
            ("pair", Value::Array(vec![Value::from(*i), Value::from(*j)])),
            (
                "eigenvalues",
                Value::Array([*i, *j].iter().filter_map(|&k| eigs.get(k)).map(algebraic_json).collect()),
            ),
        ]),
    };
    obj(vec![
        ("verdict", Value::from(v.verdict.as_str())),
        ("branch", Value::from(v.branch.as_str())),
        ("witness", witness),
        (
            "search_bounds",
            obj(vec![
                ("exp_bound", Value::from(v.search_bounds.exp_bound)),
                ("r_bound", Value::from(v.search_bounds.r_bound)),
            ]),
        ),
    ])
}

/// Lines of a CSV report: `#` comments, a header row, data rows, `#` footer.
pub struct Csv {
    lines: Vec<String>,
}

impl Csv {
    pub fn new(comment: &str, header: &[&str]) -> Self {
        Csv {
            lines: vec![format!("# {comment}"), header.join(",")],
        }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.lines.push(cells.join(","));
    }

    pub fn footer(&mut self, text: &str) {
        self.lines.push(format!("# {text}"));
    }

    pub fn finish(self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

pub fn gcd_csv(s: &GcdStream, comment: &str, tail_from: u64) -> String {
    let mut csv = Csv::new(comment, &["n", "gcd", "log_gcd", "ratio"]);
    for r in &s.records {
        csv.row(&[r.n.to_string(), r.g.to_string(), real_csv(r.log_g), real_csv(r.ratio)]);
    }
    if let Some((n, v)) = s.tail_max(tail_from) {
        csv.footer(&format!("tail_from={tail_from} max_ratio={} argmax={n}", real_csv(v)));
    }
    csv.finish()
}

pub fn gcd_json(s: &GcdStream, tail_from: u64) -> Value {
    let records = s
        .records
        .iter()
        .map(|r| {
            obj(vec![
                ("n", Value::from(r.n)),
                ("gcd", int_json(&r.g)),
                ("log_gcd", real_json(r.log_g)),
                ("ratio", real_json(r.ratio)),
            ])
        })
        .collect();
    let tail = match s.tail_max(tail_from) {
        Some((n, v)) => obj(vec![
            ("from", Value::from(tail_from)),
            ("max_ratio", real_json(v)),
            ("argmax", Value::from(n)),
        ]),
        None => Value::Null,
    };
    obj(vec![("records", Value::Array(records)), ("tail", tail)])
}

pub fn scan_csv(s: &Scan, comment: &str) -> String {
    let mut csv = Csv::new(comment, &["N", "ord", "ratio"]);
    for r in &s.records {
        csv.row(&[r.n.to_string(), r.order.to_string(), real_csv(r.ratio)]);
    }
    match s.minimum() {
        Some((n, v)) => csv.footer(&format!("min_ratio={} argmin={n} skipped={}", real_csv(v), s.skipped)),
        None => csv.footer(&format!("no coprime moduli skipped={}", s.skipped)),
    }
    csv.finish()
}

pub fn scan_json(s: &Scan) -> Value {
    let records = s
        .records
        .iter()
        .map(|r| {
            obj(vec![
                ("N", Value::from(r.n)),
                ("ord", int_json(&r.order)),
                ("ratio", real_json(r.ratio)),
            ])
        })
        .collect();
    let (min, argmin) = match s.minimum() {
        Some((n, v)) => (real_json(v), Value::from(n)),
        None => (Value::Null, Value::Null),
    };
    obj(vec![
        ("records", Value::Array(records)),
        ("skipped", Value::from(s.skipped)),
        ("min_ratio", min),
        ("argmin", argmin),
    ])
}

pub fn construct_csv(rows: &[SmallPeriodRow], comment: &str) -> String {
    let mut csv = Csv::new(comment, &["k", "N_k", "ord", "ratio"]);
    for r in rows {
        csv.row(&[r.k.to_string(), r.modulus.to_string(), r.order.to_string(), real_csv(r.ratio)]);
    }
    csv.finish()
}

pub fn construct_json(rows: &[SmallPeriodRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                obj(vec![
                    ("k", Value::from(r.k)),
                    ("N_k", int_json(&r.modulus)),
                    ("ord", int_json(&r.order)),
                    ("ratio", real_json(r.ratio)),
                ])
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_switch_to_strings_at_2_53() {
        assert_eq!(int_json(&BigInt::from(60)), Value::from(60));
        let edge = BigInt::from(1i64 << 53);
        assert_eq!(int_json(&edge), Value::String("9007199254740992".into()));
        assert_eq!(int_json(&(&edge - 1)), Value::from((1i64 << 53) - 1));
        assert_eq!(int_json(&-edge), Value::String("-9007199254740992".into()));
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(real_csv(0.9624236501192069), "0.962424");
        assert_eq!(real_csv(1234567.0), "1234570");
        assert_eq!(real_csv(0.0), "0");
        assert_eq!(real_json(1.791759469228055).to_string(), "1.79176");
    }
}
