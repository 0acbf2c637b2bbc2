//! Periods of integer matrices modulo N.
//!
//! For a nonsingular `A ∈ M_d(Z)` the crate computes `ord(A, N)` exactly,
//! the stream `gcd(A^n - I)`, the entropy `Σ log|λ|` over expanding
//! eigenvalues, and decides whether `A` is exceptional (finite order, an
//! integer-power spectrum, or a quadratic-unit spectrum after a power).
//!
//! Modules, bottom up:
//!
//! - [`matcore`]: big-integer matrices, polynomials, factoring over `Z`.
//! - [`algnum`]: certified algebraic numbers, heights, multiplicative relations.
//! - [`modorder`]: integer factoring and matrix orders modulo `N`.
//! - [`growth`]: gcd streams, entropy, small-period moduli, order scans.
//! - [`classify`]: the exceptionality verdict with a checkable witness.
//! - [`cli`]: the `matperiod` command line.
//!
//! Runnable examples live in `examples/`: `order`, `gcd_stream`, `classify`,
//! `entropy`, `small_periods`, `scan` and `algebraic`.
//!
//! ```
//! use matperiod::matcore::IntMatrix;
//! use matperiod::modorder::order_mod;
//!
//! let fib = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
//! assert_eq!(order_mod(&fib, &10.into()).unwrap().order, 60.into());
//! ```

pub mod algnum;
pub mod classify;
pub mod cli;
pub mod error;
pub mod growth;
pub mod matcore;
pub mod modorder;
mod util;

pub use error::{Error, Result};
