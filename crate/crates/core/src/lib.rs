//! Computing with multilinear polynomial identities of algebras with several
//! binary operations.
//!
//! The crate is organised bottom-up:
//!
//! - [`freealg`]: association types, multilinear monomials, polynomials, the
//!   symmetric group action, substitution and polarization.
//! - [`exactla`]: exact dense linear algebra over the rationals and over small
//!   prime fields (row canonical form, row spaces, coordinates).
//! - [`identmod`]: expansion maps, liftings, modules of identities, the
//!   block-matrix search for new identities and generator minimization.
//! - [`splitkit`]: the disuccessor transform splitting every operation into a
//!   `prec`/`succ` pair.
//! - [`varieties`]: the built-in catalog of identity systems and expansion rules.
//! - [`concrete`]: structure-constant algebras, Rota-Baxter operators and the
//!   derived structures they induce.
//! - [`repro`]: the fixed reproduction table driven by the command-line tool.

pub mod concrete;
pub mod error;
pub mod exactla;
pub mod freealg;
pub mod identmod;
pub mod repro;
pub mod splitkit;
pub mod varieties;

pub use error::{Error, Result};
pub use num_rational::BigRational;
