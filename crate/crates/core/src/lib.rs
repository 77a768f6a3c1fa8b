//! Exact computations with canonical algebras and incidence algebras of
//! finite posets.
//!
//! The crate builds bound quiver algebras from presentations, computes
//! their homological data (minimal projective resolutions, Ext, global
//! dimension, Coxeter polynomials, Hochschild cohomology) and compares
//! derived-equivalence invariants between canonical algebras of weight
//! type `(p1, p2, p3)` and incidence algebras of explicit posets. The
//! mapping-cone functor that turns diagrams of complexes over such a poset
//! into complexes over the canonical algebra is implemented in [`derived`].
//!
//! Module map:
//!
//! - [`exactla`]: exact scalars, matrices, characteristic polynomials and
//!   Smith normal forms.
//! - [`posets`]: posets, Hasse diagrams, isomorphism, enumeration, the
//!   poset families compared with canonical algebras, order complexes.
//! - [`quivers`]: quivers, relations, canonical and incidence
//!   presentations, BGP reflections, gentleness.
//! - [`algebra`]: path-class bases, Cartan matrices, representations.
//! - [`homology`]: resolutions, Ext, invariant certificates, Hochschild
//!   and nerve cohomology.
//! - [`derived`]: complexes, cones, the functor, Ext tables, verification
//!   pipelines and the exhaustive poset search.
//! - [`cli`]: the command-line front end used by the `quiverlab` binary.

pub mod algebra;
pub mod cli;
pub mod derived;
pub mod exactla;
pub mod homology;
pub mod posets;
pub mod quivers;

pub use exactla::{Field, Fp, Rational};
