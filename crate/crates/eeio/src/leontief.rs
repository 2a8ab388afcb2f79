//! Technical coefficients, productivity diagnostics, and the Leontief inverse.
//!
//! The production side of the model is the linear system (I − A) X = Y. For a
//! nonnegative coefficient matrix A the system has a nonnegative solution for
//! every nonnegative Y exactly when all leading principal minors of (I − A)
//! are strictly positive (the Hawkins–Simon condition); the inverse
//! L = (I − A)⁻¹ then exists, is elementwise nonnegative, and has unit-or-larger
//! diagonal.

use crate::error::{Error, Result};
use crate::lu::LuFactors;
use crate::matrix::Matrix;

/// Nonnegative direct-requirements matrix with its productivity diagnostics.
#[derive(Debug, Clone)]
pub struct CoefficientMatrix {
    values: Matrix,
    source_year: i32,
    column_sums: Vec<f64>,
    diagnostic: HawkinsSimonDiagnostic,
}

impl CoefficientMatrix {
    pub fn new(values: Matrix, source_year: i32) -> Result<Self> {
        if !values.is_square() {
            return Err(Error::DimensionMismatch {
                context: "coefficient matrix".into(),
                expected: values.rows(),
                found: values.cols(),
            });
        }
        for i in 0..values.rows() {
            for j in 0..values.cols() {
                let a = values[(i, j)];
                if !a.is_finite() || a < 0.0 {
                    return Err(Error::NegativeValue {
                        what: "technical coefficient".into(),
                        value: a,
                        row: i.to_string(),
                        column: j.to_string(),
                    });
                }
            }
        }
        let column_sums = values.col_sums();
        let diagnostic = hawkins_simon_check(&values);
        Ok(CoefficientMatrix {
            values,
            source_year,
            column_sums,
            diagnostic,
        })
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.rows()
    }

    pub fn source_year(&self) -> i32 {
        self.source_year
    }

    pub fn column_sums(&self) -> &[f64] {
        &self.column_sums
    }

    pub fn is_productive(&self) -> bool {
        self.diagnostic.productive
    }

    pub fn diagnostic(&self) -> &HawkinsSimonDiagnostic {
        &self.diagnostic
    }

    /// The system matrix I − A.
    pub fn system_matrix(&self) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = if i == j {
                    1.0 - self.values[(i, j)]
                } else {
                    -self.values[(i, j)]
                };
            }
        }
        m
    }
}

#[derive(Debug, Clone)]
pub struct HawkinsSimonDiagnostic {
    pub productive: bool,
    /// Leading principal minors of (I − A), up to and including the first
    /// nonpositive one (1-based positions).
    pub minors: Vec<f64>,
    /// 1-based position of the first nonpositive minor, if any.
    pub first_failure: Option<usize>,
}

impl HawkinsSimonDiagnostic {
    pub fn detail(&self) -> String {
        match self.first_failure {
            None => "all leading principal minors of (I - A) are positive".into(),
            Some(k) => format!(
                "leading principal minor {k} of (I - A) is {} (must be > 0)",
                self.minors[k - 1]
            ),
        }
    }
}

/// Hawkins–Simon condition: every leading principal minor of (I − A) must be
/// strictly positive. Computed by unpivoted elimination, where the k-th minor
/// is the product of the first k pivots; for a nonnegative A this pivot
/// sequence stays positive exactly on the productive cone, and elimination
/// stops at the first nonpositive pivot.
pub fn hawkins_simon_check(a: &Matrix) -> HawkinsSimonDiagnostic {
    assert!(
        a.is_square(),
        "Hawkins-Simon check requires a square matrix"
    );
    let n = a.rows();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = if i == j { 1.0 - a[(i, j)] } else { -a[(i, j)] };
        }
    }

    let mut minors = Vec::with_capacity(n);
    let mut product = 1.0;
    for k in 0..n {
        let pivot = m[(k, k)];
        product *= pivot;
        minors.push(product);
        if pivot.is_nan() || pivot <= 0.0 {
            return HawkinsSimonDiagnostic {
                productive: false,
                minors,
                first_failure: Some(k + 1),
            };
        }
        for i in k + 1..n {
            let factor = m[(i, k)] / pivot;
            if factor != 0.0 {
                for j in k + 1..n {
                    let m_kj = m[(k, j)];
                    m[(i, j)] -= factor * m_kj;
                }
            }
        }
    }
    HawkinsSimonDiagnostic {
        productive: true,
        minors,
        first_failure: None,
    }
}

/// The interdependence matrix L = (I − A)⁻¹ with its verified residual.
#[derive(Debug, Clone)]
pub struct LeontiefInverse {
    values: Matrix,
    residual_norm: f64,
}

impl LeontiefInverse {
    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.rows()
    }

    pub fn residual_norm(&self) -> f64 {
        self.residual_norm
    }
}

/// Computes L = (I − A)⁻¹ by a pivoted dense solve against the identity and
/// verifies ‖L(I−A) − I‖_max ≤ `solve_tol` before returning.
pub fn leontief_inverse(a: &CoefficientMatrix, solve_tol: f64) -> Result<LeontiefInverse> {
    if !a.is_productive() {
        return Err(Error::NonProductive {
            detail: a.diagnostic().detail(),
        });
    }
    let system = a.system_matrix();
    let factors = LuFactors::factor(&system)?;
    let values = factors.solve_matrix(&Matrix::identity(a.n()));

    let residual_norm = values.mul(&system).max_abs_diff(&Matrix::identity(a.n()));
    if residual_norm.is_nan() || residual_norm > solve_tol {
        return Err(Error::ResidualTooLarge {
            residual: residual_norm,
            tolerance: solve_tol,
        });
    }

    // Productive nonnegative A implies L >= 0 with unit-or-larger diagonal;
    // treat a computed violation beyond rounding slack as a failed solve.
    let slack = 1e-12 * (1.0 + values.max_norm());
    for i in 0..a.n() {
        if values[(i, i)] < 1.0 - slack {
            return Err(Error::ResidualTooLarge {
                residual: 1.0 - values[(i, i)],
                tolerance: slack,
            });
        }
        for j in 0..a.n() {
            if values[(i, j)] < -slack {
                return Err(Error::ResidualTooLarge {
                    residual: -values[(i, j)],
                    tolerance: slack,
                });
            }
        }
    }

    Ok(LeontiefInverse {
        values,
        residual_norm,
    })
}

/// Truncated power series Σ_{k=0}^{K} A^k.
///
/// Reference implementation kept deliberately independent of the factored
/// solve: it converges to the Leontief inverse for productive A and is used
/// to cross-check `leontief_inverse` in tests, not in production paths.
pub fn leontief_series_oracle(a: &CoefficientMatrix, terms: usize) -> Matrix {
    let n = a.n();
    let mut sum = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for _ in 1..=terms {
        power = power.mul(a.values());
        for i in 0..n {
            for j in 0..n {
                sum[(i, j)] += power[(i, j)];
            }
        }
    }
    sum
}

/// Solves (I − A) X = Y for the output vector X, verifying the residual
/// ‖(I−A)X − Y‖_max ≤ solve_tol · max(1, ‖Y‖_max).
pub fn solve_output(
    a: &CoefficientMatrix,
    final_demand: &[f64],
    solve_tol: f64,
) -> Result<Vec<f64>> {
    if final_demand.len() != a.n() {
        return Err(Error::DimensionMismatch {
            context: "final demand vector".into(),
            expected: a.n(),
            found: final_demand.len(),
        });
    }
    if !a.is_productive() {
        return Err(Error::NonProductive {
            detail: a.diagnostic().detail(),
        });
    }
    let system = a.system_matrix();
    let factors = LuFactors::factor(&system)?;
    let x = factors.solve(final_demand);
    check_residual(&system, &x, final_demand, solve_tol)?;
    Ok(x)
}

/// Solves the transposed system (I − A)ᵀ t = d, which evaluates the
/// row-vector product d · (I − A)⁻¹ without materializing the inverse.
pub fn solve_transposed(a: &CoefficientMatrix, d: &[f64], solve_tol: f64) -> Result<Vec<f64>> {
    if d.len() != a.n() {
        return Err(Error::DimensionMismatch {
            context: "intensity vector".into(),
            expected: a.n(),
            found: d.len(),
        });
    }
    if !a.is_productive() {
        return Err(Error::NonProductive {
            detail: a.diagnostic().detail(),
        });
    }
    let system = a.system_matrix().transpose();
    let factors = LuFactors::factor(&system)?;
    let t = factors.solve(d);
    check_residual(&system, &t, d, solve_tol)?;
    Ok(t)
}

fn check_residual(system: &Matrix, x: &[f64], rhs: &[f64], solve_tol: f64) -> Result<()> {
    let reached = system.mul_vec(x);
    let residual = reached
        .iter()
        .zip(rhs)
        .fold(0.0_f64, |acc, (r, y)| acc.max((r - y).abs()));
    let scale = rhs.iter().fold(1.0_f64, |acc, y| acc.max(y.abs()));
    if residual.is_nan() || residual > solve_tol * scale {
        return Err(Error::ResidualTooLarge {
            residual,
            tolerance: solve_tol * scale,
        });
    }
    Ok(())
}
