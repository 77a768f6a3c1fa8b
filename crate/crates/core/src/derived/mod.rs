//! Bounded complexes of representations with shift and cone, the functor
//! from diagrams of complexes over `X_p` to complexes over `Λ(p)`, derived
//! Hom between complexes, Ext tables of simples and their images, and the
//! verification and search pipelines built on the invariant certificate.
//!
//! Degrees are cohomological. A stalk in degree `d` is `M[-d]`, and
//! `Hom(M[-d], N[-e][i]) = Ext^{i + d - e}(M, N)`.

mod beilinson;
mod complex;
mod dhom;
mod functor;
mod random;
mod search;
mod verify;

use thiserror::Error;

pub use beilinson::{beilinson_table_check, BeilinsonReport, ExtTable};
pub use complex::{ChainMap, ComplexOfReps, StalkComplex, VecComplex};
pub use dhom::{
    derived_hom_complexes, derived_hom_dims, derived_hom_from_resolution, resolve_complex, stalk_hom_with_resolution,
    ComplexResolution,
};
pub use functor::{f_images_of_simples, DiagramOfComplexes, FunctorF};
pub use random::random_projective_complex;
pub use search::{a_tilde_algebra, certificate_search, no_poset_search, reflection_orbit, RetainedAnalysis, SearchReport, MAX_SEARCH_P};
pub use verify::{
    canonical_algebra, incidence_algebra, verify_remark, verify_t2, verify_weights, BeilinsonSummary, CertificatePair,
    DTildeComparison, OrientationResult, RemarkReport, T2Report, Verdict, WeightsReport, DEFAULT_WINDOW,
};

use crate::homology::HomologyError;
use crate::posets::PosetError;
use crate::quivers::QuiverError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DerivedError {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("not a chain map in degree {0}")]
    NotChainMap(i64),
    #[error("diagram does not commute")]
    NotCommutative,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("window [{}, {}] is smaller than the required [{}, {}]", .given.0, .given.1, .required.0, .required.1)]
    WindowTooSmall { given: (i64, i64), required: (i64, i64) },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}
