//! Acyclic quivers, relations and presentations of bound quiver algebras:
//! canonical algebras, incidence algebras, BGP reflections and the
//! combinatorial predicates used in the no-poset argument.

mod canonical;
mod incidence;
mod named;
mod presentation;
mod properties;
mod quiver;

use thiserror::Error;

pub use canonical::{arm_path, canonical_presentation, default_lambdas, normalize_type, star_quiver, NormalizedType};
pub use incidence::{hasse_quiver, incidence_presentation};
pub use named::{a_tilde, d_tilde, kronecker, linear_quiver, oriented_a};
pub use presentation::{IdealBlock, Presentation, QuiverFile, Relation, RelationSpec, TermSpec};
pub use properties::{bgp_reflect, is_gentle, quiver_as_poset, t2_poset, t2_quiver, unique_path_property};
pub use quiver::{Arrow, ArrowSpec, QPath, Quiver};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow id {0:?}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("quiver has an oriented cycle: {}", .0.join(" -> "))]
    OrientedCycle(Vec<String>),
    #[error("relation has no nonzero terms")]
    EmptyRelation,
    #[error("relations may not contain trivial paths")]
    TrivialPathInRelation,
    #[error("arrows {0} do not compose")]
    NotComposable(String),
    #[error("relation terms are not parallel")]
    NotParallel,
    #[error("bad coefficient: {0}")]
    BadCoefficient(String),
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("vertex {0:?} is neither a source nor a sink")]
    NotSourceOrSink(String),
    #[error("more than one path from {from:?} to {to:?}")]
    DuplicatedPath { from: String, to: String },
    #[error("arrow {0:?} is not a cover")]
    NonCoverArrow(String),
    #[error("incidence presentation has wrong dimension on block {from:?} -> {to:?}")]
    DimensionCheck { from: String, to: String },
    #[error("{0}")]
    Poset(String),
}
