//! Laurent polynomials over `Z` and finite fields, and matrices of them.

mod dense;
mod field;
mod matrix;
mod poly;

pub use field::{extend_field, is_prime, FiniteField, MAX_FIELD_ORDER};
pub use matrix::{PolyMatrix, DEFAULT_MINOR_CAP};
pub use poly::{Degree, LaurentPoly, Ring};
