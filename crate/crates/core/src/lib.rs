//! Exact structure-constant engine for group-graded ("color") algebras.
//!
//! Objects are finite-dimensional graded spaces with operations given by
//! structure constants over the rationals or a prime field. The crate checks
//! identity classes and operator conditions exhaustively on basis tuples,
//! runs constructions between such objects, computes centers, Leibniz kernels
//! and centroids, searches for operators over small prime fields, and audits
//! the constructions on a seeded corpus.

pub mod analysis;
pub mod audit;
pub mod axioms;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graded;
pub mod grading;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use axioms::{check_identity, check_operator, CheckOptions, Identity, Predicate, Variant};
pub use error::{Error, Result};
pub use graded::{
    BimoduleObject, EvenLinearMap, GradedAlgebraObject, GradedBasis, GradedElement, LinearMap, MultilinearOp,
    RepresentationObject, Vector,
};
pub use grading::{Bicharacter, Builtin, GradingGroup, GroupElement};
pub use report::AxiomReport;
pub use scalar::{Field, Scalar};
