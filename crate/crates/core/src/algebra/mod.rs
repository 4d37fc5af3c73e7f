//! Exact scalar arithmetic: rationals, sparse multivariate polynomials in the
//! Darboux coordinates `(x_1..x_n, y_1..y_n, z)`, and rational functions.

mod poly;
mod rat;
mod ratfn;

pub use poly::{Monomial, Poly};
pub use rat::{ParseRatError, Rat};
pub use ratfn::RatFn;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
}

impl AlgebraError {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraError::DimensionMismatch { .. } => "DimensionMismatch",
            AlgebraError::DivisionByZero => "DivisionByZero",
            AlgebraError::VariableOutOfRange { .. } => "VariableOutOfRange",
        }
    }
}
