//! Inverse monoids of partial bijections, their division categories and
//! Möbius functions, computed exactly.
//!
//! The pipeline: [`pbij`] elements → [`monoid`] tables and idempotent order
//! → [`category`] construction of the (reduced) division category →
//! [`incidence`] convolution and Möbius inversion. [`seqcat`] builds the
//! sequence categories `C_n` used as a closed-form comparison, and
//! [`verify`] bundles the invariant suites used by the CLI.

pub mod category;
pub mod export;
pub mod incidence;
pub mod io3;
pub mod monoid;
pub mod pbij;
pub mod seqcat;
pub mod verify;

pub use category::{build_reduced, build_standard, CategoryError, DivisionCategory, FiniteCategory, Functor, Morphism};
pub use incidence::{IncidenceAlgebra, IncidenceError, IncidenceFunction, InverseMethod, Rational};
pub use monoid::{
    enumerate, enumerate_io, enumerate_symmetric, FiniteInverseMonoid, IdempotentPoset, MonoidError, MonoidKind,
    Transversal,
};
pub use pbij::{ParseError, PartialBijection, PbijError};
pub use seqcat::{build_cn, SeqCategory, SeqError, SeqMorphism};
