//! LU factorization with partial pivoting, plus forward/back substitution.
//!
//! This is the single dense-solve kernel behind the Leontief inverse and the
//! output/intensity solves. Every caller is expected to check its own residual
//! against the configured tolerance; the factorization itself only rejects
//! exactly singular systems.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub struct LuFactors {
    /// Combined L (unit lower, below diagonal) and U (upper) factors.
    lu: Matrix,
    /// Row permutation applied before factorization: row i of the permuted
    /// system is row `perm[i]` of the original.
    perm: Vec<usize>,
    n: usize,
}

impl LuFactors {
    pub fn factor(m: &Matrix) -> Result<Self> {
        assert!(m.is_square(), "LU factorization requires a square matrix");
        let n = m.rows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();

        for k in 0..n {
            // Partial pivot: largest magnitude in column k at or below the diagonal.
            let mut pivot_row = k;
            let mut pivot_mag = lu[(k, k)].abs();
            for i in k + 1..n {
                let mag = lu[(i, k)].abs();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = i;
                }
            }
            if pivot_mag == 0.0 {
                return Err(Error::Singular {
                    detail: format!("zero pivot column {k}"),
                });
            }
            if pivot_row != k {
                perm.swap(k, pivot_row);
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
            }

            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                if factor != 0.0 {
                    for j in k + 1..n {
                        let u_kj = lu[(k, j)];
                        lu[(i, j)] -= factor * u_kj;
                    }
                }
            }
        }

        Ok(LuFactors { lu, perm, n })
    }

    /// Solves `A x = b` for the factored `A`.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n, "rhs length mismatch");
        // Forward substitution on the permuted rhs (L has unit diagonal).
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..self.n {
            let mut acc = x[i];
            for (j, xj) in x.iter().enumerate().take(i) {
                acc -= self.lu[(i, j)] * xj;
            }
            x[i] = acc;
        }
        // Back substitution.
        for i in (0..self.n).rev() {
            let mut acc = x[i];
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                acc -= self.lu[(i, j)] * xj;
            }
            x[i] = acc / self.lu[(i, i)];
        }
        x
    }

    /// Solves `A X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Matrix {
        assert_eq!(b.rows(), self.n, "rhs row count mismatch");
        let mut out = Matrix::zeros(self.n, b.cols());
        let mut col = vec![0.0; self.n];
        for j in 0..b.cols() {
            for i in 0..self.n {
                col[i] = b[(i, j)];
            }
            let x = self.solve(&col);
            for i in 0..self.n {
                out[(i, j)] = x[i];
            }
        }
        out
    }
}
