//! Monetary input-output accounts and their balance identities.
//!
//! An [`EconomyTable`] holds the intermediate-transaction matrix `Z` (row =
//! selling sector, column = buying sector), final demand `f`, imports `M`,
//! value added `V`, and total output `X` for one year. Two identities tie the
//! pieces together:
//!
//! row balance:    X_i = Σ_j Z_ij + f_i − M_i
//! column balance: X_j = Σ_i Z_ij + V_j

use crate::error::{Error, Result};
use crate::leontief::CoefficientMatrix;
use crate::matrix::Matrix;
use crate::sectors::SectorCatalog;

#[derive(Debug, Clone)]
pub struct EconomyTable {
    sectors: SectorCatalog,
    flows: Matrix,
    final_demand: Vec<f64>,
    imports: Vec<f64>,
    value_added: Vec<f64>,
    total_output: Vec<f64>,
    year: i32,
    currency_unit: String,
}

impl EconomyTable {
    /// Structural validation only: shapes, signs, strictly positive output.
    /// Balance residuals are checked separately by [`validate_balances`] so
    /// the caller picks the tolerance.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        sectors: SectorCatalog,
        flows: Matrix,
        final_demand: Vec<f64>,
        imports: Vec<f64>,
        value_added: Vec<f64>,
        total_output: Vec<f64>,
        year: i32,
        currency_unit: impl Into<String>,
    ) -> Result<Self> {
        let n = sectors.len();
        if flows.rows() != n || flows.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "intermediate flow matrix".into(),
                expected: n,
                found: if flows.rows() != n {
                    flows.rows()
                } else {
                    flows.cols()
                },
            });
        }
        for (what, v) in [
            ("final demand", &final_demand),
            ("imports", &imports),
            ("value added", &value_added),
            ("total output", &total_output),
        ] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    context: format!("{what} vector"),
                    expected: n,
                    found: v.len(),
                });
            }
        }

        for i in 0..n {
            for j in 0..n {
                let z = flows[(i, j)];
                if !z.is_finite() || z < 0.0 {
                    return Err(Error::NegativeValue {
                        what: "intermediate flow".into(),
                        value: z,
                        row: sectors.get(i).code.clone(),
                        column: sectors.get(j).code.clone(),
                    });
                }
            }
        }
        for (what, v) in [
            ("final demand", &final_demand),
            ("imports", &imports),
            ("value added", &value_added),
        ] {
            for (i, &x) in v.iter().enumerate() {
                if !x.is_finite() || x < 0.0 {
                    return Err(Error::NegativeValue {
                        what: (*what).into(),
                        value: x,
                        row: sectors.get(i).code.clone(),
                        column: String::new(),
                    });
                }
            }
        }
        for (j, &x) in total_output.iter().enumerate() {
            if !x.is_finite() || x <= 0.0 {
                return Err(Error::NonpositiveOutput {
                    code: sectors.get(j).code.clone(),
                    value: x,
                });
            }
        }

        Ok(EconomyTable {
            sectors,
            flows,
            final_demand,
            imports,
            value_added,
            total_output,
            year,
            currency_unit: currency_unit.into(),
        })
    }

    pub fn sectors(&self) -> &SectorCatalog {
        &self.sectors
    }

    pub fn flows(&self) -> &Matrix {
        &self.flows
    }

    pub fn final_demand(&self) -> &[f64] {
        &self.final_demand
    }

    pub fn imports(&self) -> &[f64] {
        &self.imports
    }

    pub fn value_added(&self) -> &[f64] {
        &self.value_added
    }

    pub fn total_output(&self) -> &[f64] {
        &self.total_output
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn currency_unit(&self) -> &str {
        &self.currency_unit
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    /// Same accounts with every monetary quantity multiplied by `factor`.
    /// Used by the rescaling-invariance checks.
    pub fn scale_monetary(&self, factor: f64) -> Result<EconomyTable> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "monetary scale factor must be positive, got {factor}"
            )));
        }
        EconomyTable::new(
            self.sectors.clone(),
            self.flows.scale(factor),
            self.final_demand.iter().map(|v| v * factor).collect(),
            self.imports.iter().map(|v| v * factor).collect(),
            self.value_added.iter().map(|v| v * factor).collect(),
            self.total_output.iter().map(|v| v * factor).collect(),
            self.year,
            self.currency_unit.clone(),
        )
    }
}

/// Residuals of the two accounting identities for one sector.
#[derive(Debug, Clone)]
pub struct BalanceEntry {
    pub code: String,
    pub output: f64,
    /// X_i − (Σ_j Z_ij + f_i − M_i)
    pub row_residual: f64,
    /// X_j − (Σ_i Z_ij + V_j)
    pub col_residual: f64,
    pub row_ok: bool,
    pub col_ok: bool,
}

#[derive(Debug, Clone)]
pub struct BalanceReport {
    pub year: i32,
    pub rel_tol: f64,
    pub entries: Vec<BalanceEntry>,
}

impl BalanceReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.row_ok && e.col_ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BalanceEntry> {
        self.entries.iter().filter(|e| !(e.row_ok && e.col_ok))
    }
}

/// Checks both balance identities sector by sector. A residual passes when
/// its magnitude is at most `rel_tol` times that sector's total output.
/// Always produces a report; nothing about the table is rejected here.
pub fn validate_balances(table: &EconomyTable, rel_tol: f64) -> BalanceReport {
    let n = table.len();
    let row_sums = table.flows.row_sums();
    let col_sums = table.flows.col_sums();
    let entries = (0..n)
        .map(|i| {
            let x = table.total_output[i];
            let row_residual = x - (row_sums[i] + table.final_demand[i] - table.imports[i]);
            let col_residual = x - (col_sums[i] + table.value_added[i]);
            let bound = rel_tol * x;
            BalanceEntry {
                code: table.sectors.get(i).code.clone(),
                output: x,
                row_residual,
                col_residual,
                row_ok: row_residual.abs() <= bound,
                col_ok: col_residual.abs() <= bound,
            }
        })
        .collect();
    BalanceReport {
        year: table.year,
        rel_tol,
        entries,
    }
}

/// Technical coefficients a_ij = Z_ij / X_j: the direct requirement of
/// sector i's output per unit of sector j's output.
pub fn technical_coefficients(table: &EconomyTable) -> Result<CoefficientMatrix> {
    let n = table.len();
    let mut values = Matrix::zeros(n, n);
    for j in 0..n {
        let x = table.total_output[j];
        // Guarded at construction; kept as a defensive check.
        if x <= 0.0 {
            return Err(Error::NonpositiveOutput {
                code: table.sectors.get(j).code.clone(),
                value: x,
            });
        }
        for i in 0..n {
            values[(i, j)] = table.flows[(i, j)] / x;
        }
    }
    CoefficientMatrix::new(values, table.year)
}
