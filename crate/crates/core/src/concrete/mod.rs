//! Finite-dimensional algebras given by structure constants, Rota-Baxter
//! operators on them, and the structures those operators induce.

mod algebra;
mod rb;
pub mod samples;

pub use algebra::{LinOp, StructConstAlgebra, Vector, Verdict};
pub use rb::{derive, is_rota_baxter, sample_rb, search_rb, Construction, SEARCH_LIMIT};
