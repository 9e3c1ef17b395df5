//! Finite fields `F_{p^m}` of small order and dense linear algebra over them,
//! including the Euclidean, Hermitian and symplectic Gram matrices.

mod field;
mod form;
mod matrix;

pub use field::{canonical_modulus, is_irreducible, FieldElem, FiniteField, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
pub use form::{gram, hull_dim, omega, pair, FormKind, GramScratch};
pub use matrix::{rank_in_place, rref_in_place, MatrixGF, Rref};

use crate::error::Result;

/// `F_{p^m}` with the canonical modulus and the default order bound.
pub fn make_field(p: u64, m: u32) -> Result<FiniteField> {
    FiniteField::new(p, m)
}

/// `x^q` in a field of order `q^2`.
pub fn frobenius(field: &FiniteField, x: FieldElem, q: u64) -> Result<FieldElem> {
    field.frobenius(x, q)
}
