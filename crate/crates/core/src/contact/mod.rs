//! Contact geometry on the Darboux model: the Heisenberg frame, the
//! Hamiltonian correspondence, the Lagrange bracket, the splitting
//! `Vect = CVect ⊕ TVect`, tangent-field pairing and matrix action, tensor
//! densities, and rescaling of the contact form.

mod density;
mod hamiltonian;
mod model;
mod rescale;
mod tangent;

pub use density::Density;
pub use hamiltonian::Hamiltonian;
pub use model::{DarbouxModel, HeisenbergFrame};
pub use rescale::RescaledContact;
pub use tangent::{ActionMatrix, RealizedTangent, TangentCoords};

use crate::algebra::{AlgebraError, Rat};
use crate::exterior::ExteriorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContactError {
    #[error("model dimension must be positive, got n = {0}")]
    InvalidDimension(usize),
    #[error("value has n = {value} but the model has n = {model}")]
    DimensionMismatch { model: usize, value: usize },
    #[error("not contact: the field does not preserve the contact structure, or the form is not contact")]
    NotContact,
    #[error("vector field is not tangent to the contact distribution")]
    NotTangent,
    #[error("forced dz coefficient disagrees with the frame")]
    InconsistentFrame,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("expected {expected} frame coordinates, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("cannot add densities of weights {left} and {right}")]
    WeightMismatch { left: Rat, right: Rat },
    #[error("invariant violated: {0}")]
    InvariantViolated(&'static str),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

impl From<AlgebraError> for ContactError {
    fn from(e: AlgebraError) -> Self {
        ContactError::Exterior(ExteriorError::Algebra(e))
    }
}

impl ContactError {
    pub fn name(&self) -> &'static str {
        match self {
            ContactError::InvalidDimension(_) => "InvalidDimension",
            ContactError::DimensionMismatch { .. } => "DimensionMismatch",
            ContactError::NotContact => "NotContact",
            ContactError::NotTangent => "NotTangent",
            ContactError::InconsistentFrame => "InconsistentFrame",
            ContactError::ZeroFunction => "ZeroFunction",
            ContactError::WrongArity { .. } => "WrongArity",
            ContactError::WeightMismatch { .. } => "WeightMismatch",
            ContactError::InvariantViolated(_) => "InvariantViolated",
            ContactError::Exterior(e) => e.name(),
        }
    }
}
