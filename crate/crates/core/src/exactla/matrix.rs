use std::fmt;

use num_rational::BigRational;

use super::field::Field;
use crate::error::{Error, Result};

/// A dense matrix over an exact field.
#[derive(Clone)]
pub struct ExactMatrix<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(field: F, cols: usize) -> Self {
        ExactMatrix {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let zero = field.zero();
        ExactMatrix {
            rows: vec![vec![zero; cols]; rows],
            field,
            cols,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.rows[i][i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(ExactMatrix { field, cols, rows })
    }

    /// Builds a matrix from small integer entries.
    pub fn from_i64(field: F, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.rows[i]
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.rows[i][j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.rows[i][j] = v;
    }

    pub fn push_row(&mut self, row: Vec<F::Elem>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Appends a row given as `(column, value)` pairs.
    pub fn push_sparse(&mut self, entries: &[(usize, BigRational)]) -> Result<()> {
        let row = sparse_row(&self.field, self.cols, entries)?;
        self.rows.push(row);
        Ok(())
    }

    pub fn into_rows(self) -> Vec<Vec<F::Elem>> {
        self.rows
    }

    /// Reduced row echelon form; zero rows are dropped.
    pub fn rref(&self) -> Rref<F> {
        let mut ech = Echelon::new(self.field.clone(), self.cols);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.into_rref()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field.clone(), self.cols);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.rank()
    }

    /// Row-major text, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let line: Vec<String> = r
                .iter()
                .map(|x| self.field.to_rational(x).to_string())
                .collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.cols == other.cols && self.rows == other.rows
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} over {}:\n{}",
            self.nrows(),
            self.cols,
            self.field.name(),
            self.to_text()
        )
    }
}

pub(crate) fn sparse_row<F: Field>(
    field: &F,
    cols: usize,
    entries: &[(usize, BigRational)],
) -> Result<Vec<F::Elem>> {
    let mut row = vec![field.zero(); cols];
    for (c, v) in entries {
        if *c >= cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: c + 1,
            });
        }
        let x = field.from_rational(v)?;
        row[*c] = field.add(&row[*c], &x);
    }
    Ok(row)
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Row echelon basis built by inserting rows one at a time.
///
/// Every stored row has a leading 1 at its pivot and zeros to the left of
/// it. Reducing a new row against the stored rows in pivot order leaves
/// a residue whose leading column is not yet a pivot; the resulting pivot
/// set is the same as the one of the reduced row echelon form of all rows
/// inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![None; cols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn field(&self) -> &F {
        &self.field
    }

    /// Reduces `row` in place; returns the leading column of the residue.
    pub fn reduce(&self, row: &mut [F::Elem]) -> Option<usize> {
        debug_assert_eq!(row.len(), self.cols);
        let mut start = 0;
        loop {
            let lead = start + row[start..].iter().position(|x| !self.field.is_zero(x))?;
            match self.row_of_pivot[lead] {
                Some(r) => {
                    let c = row[lead].clone();
                    self.field
                        .sub_mul_assign(&mut row[lead..], &c, &self.rows[r][lead..]);
                    start = lead + 1;
                }
                None => return Some(lead),
            }
        }
    }

    /// Inserts a row; returns its new pivot column if it was independent.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> Option<usize> {
        let lead = self.reduce(&mut row)?;
        let inv = self.field.inv(&row[lead]).expect("nonzero lead");
        self.field.scale_assign(&mut row[lead..], &inv);
        self.row_of_pivot[lead] = Some(self.rows.len());
        self.pivot_of_row.push(lead);
        self.rows.push(row);
        Some(lead)
    }

    /// Clears every pivot column of `row`, not only the leading ones.
    pub fn reduce_all(&self, row: &mut [F::Elem]) {
        debug_assert_eq!(row.len(), self.cols);
        let mut start = 0;
        while let Some(off) = row[start..].iter().position(|x| !self.field.is_zero(x)) {
            let lead = start + off;
            if let Some(r) = self.row_of_pivot[lead] {
                let c = row[lead].clone();
                self.field
                    .sub_mul_assign(&mut row[lead..], &c, &self.rows[r][lead..]);
            }
            start = lead + 1;
        }
    }

    /// Stored rows in insertion order (echelon, not reduced).
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn contains(&self, row: &[F::Elem]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r).is_none()
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivot_of_row
    }

    pub fn into_rref(self) -> Rref<F> {
        let Echelon {
            field,
            cols,
            rows,
            pivot_of_row,
            ..
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&i| pivot_of_row[i]);
        let mut slots: Vec<Option<Vec<F::Elem>>> = rows.into_iter().map(Some).collect();
        let mut sorted: Vec<Vec<F::Elem>> =
            order.iter().map(|&i| slots[i].take().unwrap()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| pivot_of_row[i]).collect();
        for i in (0..sorted.len()).rev() {
            let p = pivots[i];
            let (above, below) = sorted.split_at_mut(i);
            let src = &below[0];
            for dst in above.iter_mut() {
                if !field.is_zero(&dst[p]) {
                    let c = dst[p].clone();
                    field.sub_mul_assign(&mut dst[p..], &c, &src[p..]);
                }
            }
        }
        Rref {
            matrix: ExactMatrix {
                field,
                cols,
                rows: sorted,
            },
            pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{Fp101, Rationals};
    use proptest::prelude::*;

    #[test]
    fn rank_one_example() {
        let m = ExactMatrix::from_i64(Rationals, &[&[2, 4], &[1, 2]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(
            r.matrix,
            ExactMatrix::from_i64(Rationals, &[&[1, 2]]).unwrap()
        );
    }

    #[test]
    fn identity_is_fixed() {
        let id = ExactMatrix::identity(Fp101::new(), 5);
        let r = id.rref();
        assert_eq!(r.rank(), 5);
        assert_eq!(r.matrix, id);
    }

    #[test]
    fn back_substitution_clears_above_pivots() {
        let m = ExactMatrix::from_i64(Rationals, &[&[1, 2, 3], &[0, 1, 4], &[1, 3, 7]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank(), 2);
        assert_eq!(
            r.matrix,
            ExactMatrix::from_i64(Rationals, &[&[1, 0, -5], &[0, 1, 4]]).unwrap()
        );
    }

    #[test]
    fn gauss_jordan_oracle_agrees() {
        // textbook elimination with leftmost column / topmost row pivoting
        fn textbook(m: &ExactMatrix<Rationals>) -> Vec<Vec<BigRational>> {
            let f = Rationals;
            let mut a = m.rows().to_vec();
            let mut r = 0;
            for c in 0..m.ncols() {
                let Some(p) = (r..a.len()).find(|&i| !f.is_zero(&a[i][c])) else {
                    continue;
                };
                a.swap(r, p);
                let inv = f.inv(&a[r][c]).unwrap();
                f.scale_assign(&mut a[r], &inv);
                for i in 0..a.len() {
                    if i != r && !f.is_zero(&a[i][c]) {
                        let k = a[i][c].clone();
                        let src = a[r].clone();
                        f.sub_mul_assign(&mut a[i], &k, &src);
                    }
                }
                r += 1;
            }
            a.truncate(r);
            a
        }
        let m = ExactMatrix::from_i64(
            Rationals,
            &[
                &[0, 2, 4, 1],
                &[3, 1, 0, 2],
                &[3, 3, 4, 3],
                &[1, 0, 0, 5],
                &[6, 2, 0, 4],
            ],
        )
        .unwrap();
        assert_eq!(m.rref().matrix.rows(), textbook(&m).as_slice());
    }

    #[test]
    fn random_ranks_agree_between_fields() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let rows: Vec<Vec<i64>> = (0..50)
                .map(|_| (0..80).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let q = ExactMatrix::from_i64(Rationals, &refs).unwrap().rank();
            let p = ExactMatrix::from_i64(Fp101::new(), &refs).unwrap().rank();
            assert_eq!(q, p);
            assert_eq!(q, 50);
        }
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..7)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = ExactMatrix::from_i64(Rationals, &refs).unwrap();
            let r1 = m.rref();
            let r2 = r1.matrix.rref();
            prop_assert_eq!(&r1.matrix, &r2.matrix);
            prop_assert!(r1.rank() <= m.nrows().min(m.ncols()));
            for w in r1.pivots.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
        }

        #[test]
        fn rref_ignores_row_order(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let rev: Vec<&[i64]> = refs.iter().rev().copied().collect();
            let a = ExactMatrix::from_i64(Fp101::new(), &refs).unwrap().rref();
            let b = ExactMatrix::from_i64(Fp101::new(), &rev).unwrap().rref();
            prop_assert_eq!(a.matrix, b.matrix);
        }
    }
}
