//! Certified algebraic numbers: root isolation, heights, powers and
//! products, cyclotomic and quadratic-unit detection, multiplicative
//! dependence.

mod algebraic;
mod cyclotomic;
pub mod interval;
mod relation;
mod roots;
mod sturm;

pub use algebraic::{
    eigenvalues, height, isolate_roots, log_mahler_measure, monomial, power, power_minpoly,
    quadratic_unit_info, root_moduli, same_number, AlgebraicNumber, CircleSide, Estimate, QuadraticInfo,
    DEFAULT_PREC, HEIGHT_TOLERANCE,
};
pub use cyclotomic::{cyclotomic_poly, euler_phi, is_cyclotomic};
pub use relation::{check_relation, mult_dependent, DependenceKind, DependenceRelation, DEFAULT_EXP_BOUND};
