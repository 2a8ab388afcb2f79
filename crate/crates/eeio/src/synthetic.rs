//! Randomized, exactly-balanced synthetic economies for tests and demos.
//!
//! Construction: draw a nonnegative coefficient matrix A with column sums
//! below a cap < 1 (always productive), draw positive final demand Y, solve
//! X = (I − A)⁻¹ Y, then set Z_ij = a_ij X_j, V_j = X_j − Σ_i Z_ij, M = 0,
//! f = Y. Both accounting identities then hold to solver precision.

use crate::economy::EconomyTable;
use crate::energy::EnergyAccount;
use crate::error::Result;
use crate::leontief::{solve_output, CoefficientMatrix};
use crate::matrix::Matrix;
use crate::sectors::{Sector, SectorCatalog};
use rand::Rng;

pub struct SyntheticConfig {
    pub sectors: usize,
    pub energy_sectors: usize,
    pub year: i32,
    /// Column sums of A are drawn from `col_sum_range` (cap must stay < 1).
    pub col_sum_range: (f64, f64),
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig {
            sectors: 10,
            energy_sectors: 2,
            year: 2011,
            col_sum_range: (0.3, 0.9),
        }
    }
}

pub fn synthetic_catalog(n: usize, energy_sectors: usize) -> SectorCatalog {
    let entries = (0..n)
        .map(|i| Sector {
            index: i,
            code: format!("S{i:02}"),
            name: format!("Synthetic sector {i}"),
            is_energy: i < energy_sectors,
        })
        .collect();
    SectorCatalog::new(entries).expect("synthetic catalog is well-formed")
}

/// Draws a nonnegative coefficient matrix whose column sums land in
/// `col_sum_range`; such a matrix always passes the productivity check.
pub fn random_coefficients<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    col_sum_range: (f64, f64),
    year: i32,
) -> CoefficientMatrix {
    let mut values = Matrix::zeros(n, n);
    for j in 0..n {
        let target = rng.random_range(col_sum_range.0..=col_sum_range.1);
        let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..1.0)).collect();
        let sum: f64 = raw.iter().sum();
        for i in 0..n {
            values[(i, j)] = raw[i] / sum * target;
        }
    }
    CoefficientMatrix::new(values, year).expect("random coefficients are nonnegative")
}

/// Exactly-balanced random economy per the construction above.
pub fn random_economy<R: Rng + ?Sized>(
    rng: &mut R,
    config: &SyntheticConfig,
) -> Result<EconomyTable> {
    let n = config.sectors;
    let catalog = synthetic_catalog(n, config.energy_sectors);
    let a = random_coefficients(rng, n, config.col_sum_range, config.year);
    let final_demand: Vec<f64> = (0..n).map(|_| rng.random_range(10.0..100.0)).collect();
    let total_output = solve_output(&a, &final_demand, 1e-10)?;

    let mut flows = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            flows[(i, j)] = a.values()[(i, j)] * total_output[j];
        }
    }
    let col_sums = flows.col_sums();
    let value_added: Vec<f64> = total_output
        .iter()
        .zip(&col_sums)
        .map(|(x, s)| x - s)
        .collect();

    EconomyTable::new(
        catalog,
        flows,
        final_demand,
        vec![0.0; n],
        value_added,
        total_output,
        config.year,
        "USDm",
    )
}

/// Energy account with positive use for every energy sector (so each sector
/// can be priced) and small incidental use elsewhere.
pub fn random_energy_account<R: Rng + ?Sized>(
    rng: &mut R,
    table: &EconomyTable,
) -> Result<EnergyAccount> {
    let values = table
        .sectors()
        .iter()
        .map(|s| {
            if s.is_energy {
                // Anchor to the sector's output so prices stay O(1).
                table.total_output()[s.index] * rng.random_range(0.2..0.8)
            } else {
                rng.random_range(0.0..10.0)
            }
        })
        .collect();
    EnergyAccount::new(values, table.year())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::economy::validate_balances;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_economies_balance_tightly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 5, 20, 50] {
            let config = SyntheticConfig {
                sectors: n,
                energy_sectors: 1.max(n / 5),
                ..SyntheticConfig::default()
            };
            let table = random_economy(&mut rng, &config).unwrap();
            let report = validate_balances(&table, 1e-9);
            assert!(
                report.pass(),
                "n={n}: worst row residual {:?}",
                report
                    .entries
                    .iter()
                    .map(|e| e.row_residual.abs().max(e.col_residual.abs()))
                    .fold(0.0_f64, f64::max)
            );
        }
    }

    #[test]
    fn generated_coefficients_are_productive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_coefficients(&mut rng, 8, (0.3, 0.9), 2011);
            assert!(a.is_productive());
            for &s in a.column_sums() {
                assert!(s <= 0.9 + 1e-12, "column sum {s}");
            }
        }
    }
}
