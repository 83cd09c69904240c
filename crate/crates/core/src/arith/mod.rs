//! Exact scalars: rationals, single quadratic fields, and the biquadratic
//! compositum needed when real irrational eigenvalues meet imaginary weights.

mod biquad;
mod quad;
pub mod rational;
mod ring;

use alloc::string::String;

pub use biquad::BiQuad;
pub use quad::QuadExt;
pub use rational::{format_rational, int, parse_rational, rat, rational_sqrt, squarefree_decompose};
pub use ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("incompatible quadratic fields Q(sqrt {0}) and Q(sqrt {1})")]
    IncompatibleField(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative rational")]
    NegativeInput,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("square-free part does not fit in 64 bits")]
    FieldTooLarge,
    #[error("{0} is not a square-free discriminant other than 0 and 1")]
    NotSquareFree(i64),
    #[error("sign requested for a non-real element")]
    NotReal,
}
