//! Multiplicative order of an integer matrix modulo `N`.
//!
//! The order modulo each prime `p` divides `p^t · lcm(p^i - 1)`, which is
//! factored through cyclotomic values and stripped prime by prime; orders
//! modulo `p^e` follow by lifting, and the local orders combine by lcm.

mod intfactor;
mod order;

pub use intfactor::{factor_integer, factor_u64, is_prime_u64, is_probable_prime, set_factor_seed, FactoredInteger};
pub use order::{
    mat_pow_mod, order_mod, order_mod_bruteforce, order_mod_factored, order_mod_from_multiple,
    OrderResult, OrderWitness,
};
