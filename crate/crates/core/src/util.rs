use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// `ln|n|` as a float, for nonzero `n` of any size.
pub(crate) fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits() as i64;
    let shift = (bits - 60).max(0);
    let top = (n.abs() >> shift as usize).to_f64().unwrap_or(1.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln n` for `n > 1`, else 0.
pub(crate) fn ln_or_zero(n: &BigInt) -> f64 {
    if n > &BigInt::from(1) {
        ln_big(n)
    } else {
        0.0
    }
}
