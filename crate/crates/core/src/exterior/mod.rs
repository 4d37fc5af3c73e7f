//! Exterior calculus over rational-function coefficients: vector fields,
//! differential forms, the Cartan operations, and exact linear solves.

mod field;
mod form;
mod linear;

pub use field::VectorField;
pub use form::DiffForm;
pub use linear::{mat_vec, solve_linear, solve_system};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("expected {expected} components, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("form index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("interior product of a 0-form")]
    DegreeZero,
    #[error("matrix is {rows}x{cols}, expected square with matching right-hand side")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix and right-hand side shapes disagree")]
    ShapeMismatch,
    #[error("singular matrix: no nonzero pivot in some column")]
    SingularMatrix,
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ExteriorError {
    pub fn name(&self) -> &'static str {
        match self {
            ExteriorError::DimensionMismatch { .. } => "DimensionMismatch",
            ExteriorError::DegreeMismatch { .. } => "DegreeMismatch",
            ExteriorError::WrongLength { .. } => "WrongLength",
            ExteriorError::IndexOutOfRange { .. } => "IndexOutOfRange",
            ExteriorError::DegreeZero => "DegreeZero",
            ExteriorError::NotSquare { .. } => "NotSquare",
            ExteriorError::ShapeMismatch => "ShapeMismatch",
            ExteriorError::SingularMatrix => "SingularMatrix",
            ExteriorError::InconsistentSystem => "InconsistentSystem",
            ExteriorError::Algebra(e) => e.name(),
        }
    }
}
