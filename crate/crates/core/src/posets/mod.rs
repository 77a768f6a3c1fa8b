//! Finite posets, their Hasse diagrams and order complexes, isomorphism
//! testing, enumeration, and the explicit poset families.

mod enumerate;
mod families;
mod iso;
mod order_complex;
mod poset;

use thiserror::Error;

pub use enumerate::{enumerate_posets, MAX_ENUMERATION_SIZE};
pub use families::{
    all_orientations, arm_label, build_remark_poset, build_xp, canonical_labels, remark_free_edges, RemarkFamily,
    XpFamily,
};
pub use iso::{are_isomorphic, canonical_form, is_isomorphism, refined_colors};
pub use order_complex::{order_complex, OrderComplex};
pub use poset::{HasseDiagram, Poset, PosetFile, MAX_ELEMENTS};

pub(crate) use poset::find_cycle;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("covers contain a directed cycle: {}", .0.join(" -> "))]
    Cycle(Vec<String>),
    #[error("relation is not reflexive at {0:?}")]
    NotReflexive(String),
    #[error("relation is not antisymmetric on {0:?}, {1:?}")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: missing {0:?} <= {1:?}")]
    NotTransitive(String, String),
    #[error("poset with {0} elements exceeds the supported size")]
    TooLarge(usize),
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    UnsupportedSize { n: usize, max: usize },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
}
