//! Dense linear algebra over the coefficient field, used on degree-one forms.

use std::sync::Arc;

use super::polynomial::{Polynomial, VarContext};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl Matrix {
    pub fn from_rows(field: FieldSpec, ncols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { field, rows, ncols }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Matrix::from_rows(field, n, rows)
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(self.field.zero(), |acc, (a, row)| &acc + &(a * &row[j]))
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(self.field, other.ncols, rows)
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][col].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][col].inv().expect("nonzero pivot");
            self.rows[r] = self.rows[r].iter().map(|x| x * &inv).collect();
            for i in 0..self.rows.len() {
                if i != r && !self.rows[i][col].is_zero() {
                    let factor = self.rows[i][col].clone();
                    let pivot_row = self.rows[r].clone();
                    for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Pivot columns of the row echelon form, in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().echelon()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.ncols;
        if self.nrows() != n {
            return None;
        }
        if n == 0 {
            return Some(self.clone());
        }
        let id = Matrix::identity(self.field, n);
        let augmented = self
            .rows
            .iter()
            .zip(id.rows)
            .map(|(a, b)| a.iter().cloned().chain(b).collect())
            .collect();
        let mut m = Matrix::from_rows(self.field, 2 * n, augmented);
        let pivots = m.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let rows = m.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, rows))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.field, self.nrows())
    }
}

/// Rank of the linear parts of `vectors` and a completion to a basis of the
/// degree-one forms by coordinate variables, greedily in variable order.
pub fn linear_rank_extend(
    ctx: &Arc<VarContext>,
    vectors: &[Polynomial],
) -> (usize, Vec<Polynomial>) {
    let n = ctx.nvars();
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.linear_coefficients()).collect();
    let rank = Matrix::from_rows(ctx.field(), n, rows.clone()).rank();
    let mut current = rank;
    let mut completion = Vec::new();
    for j in 0..n {
        if current == n {
            break;
        }
        let x = Polynomial::var(ctx, j);
        rows.push(x.linear_coefficients());
        let r = Matrix::from_rows(ctx.field(), n, rows.clone()).rank();
        if r > current {
            current = r;
            completion.push(x);
        } else {
            rows.pop();
        }
    }
    (rank, completion)
}
