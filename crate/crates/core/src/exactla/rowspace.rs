use num_rational::BigRational;

use super::field::Field;
use super::matrix::{sparse_row, Echelon, ExactMatrix, Rref};
use crate::error::{Error, Result};

/// A subspace of `F^n` stored by its reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    ambient: usize,
    basis: Rref<F>,
}

impl<F: Field> RowSpace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        RowSpace {
            ambient,
            basis: ExactMatrix::new(field, ambient).rref(),
        }
    }

    pub fn span(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        let m = ExactMatrix::from_rows(field, ambient, vectors.to_vec())?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &ExactMatrix<F>) -> Self {
        RowSpace {
            ambient: m.ncols(),
            basis: m.rref(),
        }
    }

    pub fn from_echelon(e: Echelon<F>) -> Self {
        RowSpace {
            ambient: e.ncols(),
            basis: e.into_rref(),
        }
    }

    /// Span of sparse rational vectors.
    pub fn span_sparse(
        field: F,
        ambient: usize,
        vectors: &[Vec<(usize, BigRational)>],
    ) -> Result<Self> {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            let row = sparse_row(e.field(), ambient, v)?;
            e.insert(row);
        }
        Ok(Self::from_echelon(e))
    }

    pub fn field(&self) -> &F {
        self.basis.matrix.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }
    pub fn basis(&self) -> &ExactMatrix<F> {
        &self.basis.matrix
    }
    pub fn pivots(&self) -> &[usize] {
        &self.basis.pivots
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check(v.len())?;
        let f = self.field();
        let mut r = v.to_vec();
        for (row, &p) in self.basis.matrix.rows().iter().zip(&self.basis.pivots) {
            if !f.is_zero(&r[p]) {
                let c = r[p].clone();
                f.sub_mul_assign(&mut r[p..], &c, &row[p..]);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        let f = self.field();
        Ok(self.reduce(v)?.iter().all(|x| f.is_zero(x)))
    }

    pub fn contains_sparse(&self, v: &[(usize, BigRational)]) -> Result<bool> {
        let row = sparse_row(self.field(), self.ambient, v)?;
        self.contains(&row)
    }

    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check(other.ambient)?;
        Ok(self.basis.pivots == other.basis.pivots && self.basis.matrix == other.basis.matrix)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check(other.ambient)?;
        for row in self.basis.matrix.rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other.ambient)?;
        let mut e = Echelon::new(self.field().clone(), self.ambient);
        for row in self
            .basis
            .matrix
            .rows()
            .iter()
            .chain(other.basis.matrix.rows())
        {
            e.insert(row.clone());
        }
        Ok(Self::from_echelon(e))
    }
}

/// Coordinates of `v` in terms of `basis`, or `None` when `v` is not in
/// their span.
///
/// The vectors are written as columns next to `v`; after row reduction the
/// last column holds the coefficients of the pivot columns and the free
/// columns get coefficient zero.
pub fn express<F: Field>(
    field: &F,
    v: &[F::Elem],
    basis: &[Vec<F::Elem>],
) -> Result<Option<Vec<F::Elem>>> {
    let n = v.len();
    let k = basis.len();
    for b in basis {
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
    }
    let mut m = ExactMatrix::zeros(field.clone(), n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for (i, x) in b.iter().enumerate() {
            if !field.is_zero(x) {
                m.set(i, j, x.clone());
            }
        }
    }
    for (i, x) in v.iter().enumerate() {
        m.set(i, k, x.clone());
    }
    let r = m.rref();
    if r.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![field.zero(); k];
    for (row, &p) in r.matrix.rows().iter().zip(&r.pivots) {
        coeffs[p] = row[k].clone();
    }
    Ok(Some(coeffs))
}
