//! Finite fields GF(p^k) and dense matrices over them.

pub mod action;
mod field;
pub mod format;
mod matrix;

pub use field::{Field, FieldElement, MAX_PRIME_FIELD};
pub use matrix::{matrix_group_closure, monomial_has_fixed_vector, Matrix};
