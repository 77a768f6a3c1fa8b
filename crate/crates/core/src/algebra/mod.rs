//! Bound quiver algebras with explicit bases, their Cartan matrices, and
//! finite-dimensional representations: simples, projectives, covers,
//! kernels and Hom spaces.

mod bound;
mod modules;
mod representation;

use thiserror::Error;

pub use bound::BoundQuiverAlgebra;
pub use modules::{GeneratorMap, ProjectiveSum};
pub use representation::{ModuleMap, Representation, RepresentationFile};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed representation: {0}")]
    Shape(String),
    #[error("representation does not satisfy the relations")]
    RelationsViolated,
}
