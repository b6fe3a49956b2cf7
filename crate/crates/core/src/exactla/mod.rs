//! Exact linear algebra over the rationals and small prime fields.

mod field;
mod matrix;
mod rowspace;

pub use field::{Field, FieldChoice, Fp101, PrimeField, Rationals};
pub use matrix::{Echelon, ExactMatrix, Rref};
pub use rowspace::{express, RowSpace};
