//! Projective resolutions, Ext, global dimension, Coxeter polynomials and
//! the invariant certificate; Hochschild cohomology through the relative
//! bar complex and through the nerve.

mod hochschild;
mod invariants;
mod nerve;
mod resolution;

use serde::Serialize;
use thiserror::Error;

pub use hochschild::{hochschild_bar, hochschild_bar_with_budget, DEFAULT_COCHAIN_BUDGET, MAX_HOCHSCHILD_DEGREE};
pub use invariants::{
    certificate, coxeter_matrix, coxeter_polynomial, coxeter_polynomial_of, coxeter_polynomial_transposed,
    euler_form_check, euler_form_check_with, Certificate, FieldComparison, COXETER_CONVENTION, INVARIANT_FIELDS,
};
pub use nerve::nerve_cohomology;
pub use resolution::{
    ext_dims, ext_dims_from_resolution, global_dimension, hom_complex, minimal_resolution, simple_resolutions,
    ProjectiveResolution,
};

use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::Field;
use crate::posets::Poset;
use crate::quivers::{hasse_quiver, incidence_presentation, unique_path_property};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("resolution did not terminate within {0} steps")]
    CapExceeded(usize),
    #[error("Hochschild degree {requested} requested, at most {max} supported")]
    DegreeUnsupported { requested: usize, max: usize },
    #[error("cochain space in degree {degree} has dimension {dim}, over the budget of {budget}")]
    BudgetExceeded { degree: usize, dim: usize, budget: usize },
}

/// Both sides of the hereditary criterion for an incidence algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MitchellReport {
    pub gldim: usize,
    pub unique_paths: bool,
    pub agree: bool,
}

/// `gldim kX <= 1` against unique paths in the Hasse diagram.
pub fn mitchell_equivalence_check<F: Field>(p: &Poset) -> Result<MitchellReport, HomologyError> {
    let pres = incidence_presentation::<F>(p).expect("incidence presentations exist for every poset");
    let gldim = global_dimension(&BoundQuiverAlgebra::new(pres))?;
    let unique_paths = unique_path_property(&hasse_quiver(p));
    Ok(MitchellReport { gldim, unique_paths, agree: (gldim <= 1) == unique_paths })
}
