//! Exact coefficient arithmetic.
//!
//! Two coefficient fields are used throughout the crate: arbitrary-precision
//! rationals ([`Rational`]) for Jacobi-type computations and rational
//! functions in `v = q^{1/2}` ([`QRat`]) for Macdonald-type computations.
//! Polynomials in `v` ([`VPoly`]) double as the integral domain in which
//! fraction-free linear solves are carried out. Complex rationals only appear
//! in the one-variable series of [`crate::onevar`].

mod coeff;
mod qrat;
mod rational;
mod unipoly;
mod zpoly;

pub use coeff::{Coeff, ExactDiv, FieldCoeff};
pub use qrat::{qrat_eval, qrat_normalize, QRat, QRatJson};
pub use rational::{
    format_rational, int, parse_rational, rat, rat_arith, rational_str, ArithOp, ComplexRational,
    Rational,
};
pub use unipoly::{ChebPoly, UniPoly, VPoly};
pub use zpoly::ZPoly;
pub(crate) use unipoly::rational_to_f64;
