//! Sectoral energy intensities: direct, total, and indirect.
//!
//! Direct intensity of sector j is the physical energy it buys per unit of
//! output; total intensity propagates that through the supply chain with the
//! Leontief inverse (a row-vector product, evaluated as a transposed solve);
//! indirect intensity is the difference.

use crate::economy::EconomyTable;
use crate::energy::EnergyFlowTable;
use crate::error::{Error, Result};
use crate::leontief::{solve_transposed, CoefficientMatrix, LeontiefInverse};
use crate::matrix::Matrix;
use crate::sectors::SectorCatalog;

/// Direct, total, and indirect intensity vectors for one year, ktoe per
/// currency unit. `indirect` is stored as `total − direct` elementwise, so
/// the closure total = direct + indirect holds bit-exactly.
#[derive(Debug, Clone)]
pub struct IntensitySet {
    sectors: SectorCatalog,
    direct: Vec<f64>,
    total: Vec<f64>,
    indirect: Vec<f64>,
    year: i32,
}

impl IntensitySet {
    pub fn sectors(&self) -> &SectorCatalog {
        &self.sectors
    }

    pub fn direct(&self) -> &[f64] {
        &self.direct
    }

    pub fn total(&self) -> &[f64] {
        &self.total
    }

    pub fn indirect(&self) -> &[f64] {
        &self.indirect
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    /// Full pipeline for one year: direct from the physical flow table,
    /// total via the transposed solve against (I − A), indirect by
    /// subtraction.
    pub fn compute(
        table: &EconomyTable,
        energy_flows: &EnergyFlowTable,
        coefficients: &CoefficientMatrix,
        solve_tol: f64,
    ) -> Result<IntensitySet> {
        let direct = direct_intensity(energy_flows, table)?;
        let total = solve_transposed(coefficients, &direct, solve_tol)?;
        let indirect = indirect_intensity(&total, &direct)?;
        Ok(IntensitySet {
            sectors: table.sectors().clone(),
            direct,
            total,
            indirect,
            year: table.year(),
        })
    }
}

/// Direct intensity: column sums of the physical flow table divided by each
/// buyer's total output.
pub fn direct_intensity(energy_flows: &EnergyFlowTable, table: &EconomyTable) -> Result<Vec<f64>> {
    let n = table.len();
    if energy_flows.buyer_count() != n {
        return Err(Error::DimensionMismatch {
            context: "energy flow table".into(),
            expected: n,
            found: energy_flows.buyer_count(),
        });
    }
    let energy_bought = energy_flows.flows().col_sums();
    Ok((0..n)
        .map(|j| energy_bought[j] / table.total_output()[j])
        .collect())
}

/// Total intensity as the row-vector product direct · L.
pub fn total_intensity(direct: &[f64], inverse: &LeontiefInverse) -> Result<Vec<f64>> {
    if direct.len() != inverse.n() {
        return Err(Error::DimensionMismatch {
            context: "direct intensity vector".into(),
            expected: inverse.n(),
            found: direct.len(),
        });
    }
    Ok(Matrix::row_vec_mul(direct, inverse.values()))
}

/// Indirect intensity: total − direct, elementwise.
pub fn indirect_intensity(total: &[f64], direct: &[f64]) -> Result<Vec<f64>> {
    if total.len() != direct.len() {
        return Err(Error::DimensionMismatch {
            context: "intensity vectors".into(),
            expected: total.len(),
            found: direct.len(),
        });
    }
    Ok(total.iter().zip(direct).map(|(t, d)| t - d).collect())
}

/// Percentage of each sector's total intensity that is direct. Sectors with
/// zero total intensity get `None` (the ratio is undefined, not 0 or 100).
pub fn direct_share(direct: &[f64], total: &[f64]) -> Result<Vec<Option<f64>>> {
    if total.len() != direct.len() {
        return Err(Error::DimensionMismatch {
            context: "intensity vectors".into(),
            expected: direct.len(),
            found: total.len(),
        });
    }
    Ok(direct
        .iter()
        .zip(total)
        .map(|(d, t)| if *t > 0.0 { Some(100.0 * d / t) } else { None })
        .collect())
}

/// Economy-wide intensity: total energy demand over a monetary aggregate
/// (GDP or total output, the caller's choice).
pub fn aggregate_intensity(total_energy_demand: f64, monetary_aggregate: f64) -> Result<f64> {
    if monetary_aggregate.is_nan() || monetary_aggregate <= 0.0 {
        return Err(Error::NonpositiveAggregate {
            value: monetary_aggregate,
        });
    }
    Ok(total_energy_demand / monetary_aggregate)
}

/// Total physical energy demand implied by the table at the uniform price:
/// P̄ · Σ_k (Σ_j Z_kj + f_k) over energy sectors k.
pub fn total_energy_demand(table: &EconomyTable, uniform_price: f64) -> f64 {
    let mut monetary = 0.0;
    for k in table.sectors().energy_indices() {
        let row_sum: f64 = table.flows().row(k).iter().sum();
        monetary += row_sum + table.final_demand()[k];
    }
    monetary * uniform_price
}
