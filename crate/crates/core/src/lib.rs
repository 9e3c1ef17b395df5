//! Exact counts of linear codes graded by hull dimension.
//!
//! Closed-form mass formulas for the Hermitian and symplectic hulls, the ratio
//! factors between consecutive hull dimensions (including the Euclidean
//! four-case factors), exception-family classification, asymptotic limits,
//! and entanglement-assisted quantum code parameters. Every closed form is
//! checked against a brute-force enumeration of subspaces in [`oracle`].

pub mod algebra;
pub mod cli;
pub mod eaqecc;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod oracle;
pub mod ratios;
pub mod tables;

pub use algebra::{FieldElem, FiniteField, FormKind, MatrixGF};
pub use error::{Error, Result};
pub use exactnum::{ExactInt, ExactRat};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeExamples;
