//! Rational polynomials and Sturm-sequence root counting.

mod ratpoly;
mod sturm;

pub use ratpoly::RatPoly;
pub use sturm::{count_real_roots, tarski_query, Endpoint, Interval, SturmChain};

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("the zero polynomial has no Sturm chain")]
    ZeroPolynomial,
    #[error("interval endpoint is a root of the polynomial")]
    EndpointIsRoot,
    #[error("interval lower end is not below its upper end")]
    InvalidInterval,
    #[error(transparent)]
    Arith(#[from] ArithError),
}
