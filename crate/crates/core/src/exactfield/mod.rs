//! Exact arithmetic: rationals, sparse polynomials in `m, t1, t2`, and the field of
//! rational functions over them in canonical form.

pub mod gcd;
pub mod modp;
pub mod mpoly;
pub mod rational;
pub mod ratfunc;

pub use gcd::{poly_gcd, prs_gcd};
pub use mpoly::{Exponent, MPoly, Semantics, Var};
pub use ratfunc::RatFunc;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation point is a pole")]
    Pole,
    #[error("evaluation point outside the domain (zero raised to a negative power)")]
    Domain,
    #[error("operands carry different semantics tags")]
    SemanticsMismatch,
    #[error("negative exponent not allowed here")]
    NegativeExponent,
    #[error("invalid rational literal `{0}`")]
    Parse(String),
}
