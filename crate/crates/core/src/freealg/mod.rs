//! Free multi-operation nonassociative algebra: association types,
//! multilinear monomials, polynomials and the symmetric group action.

mod alphabet;
pub mod expr;
mod monomial;
mod polarize;
mod poly;
pub mod text;
mod tree;

pub use alphabet::{OpAlphabet, OPERATION_NAMES};
pub use expr::Context;
pub use monomial::{
    all_perms, enumerate_assoc_types, enumerate_monomials, factorial, monomial_count, perm_rank,
    perm_unrank, type_count, type_index, type_tree, AssocType, Monomial,
};
pub use polarize::polarize;
pub use poly::Polynomial;
pub use tree::{fmt_coeff, Tree, TreePoly};

use crate::error::Result;

/// Permutes variable subscripts of `p`: `x_i -> x_{perm(i)}`.
pub fn act(perm: &[u8], p: &Polynomial) -> Result<Polynomial> {
    p.act(perm)
}

/// Substitutes `q` for the 0-based variable `var` of `p`.
pub fn substitute(p: &Polynomial, var: usize, q: &Polynomial) -> Result<Polynomial> {
    p.substitute(var, q)
}
