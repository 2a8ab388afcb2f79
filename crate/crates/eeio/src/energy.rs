//! Energy accounts, energy prices, and the monetary-to-physical conversion.
//!
//! Flows sold by energy sectors are converted from money to physical energy
//! with a single uniform price P̄ (ktoe per currency unit): each energy
//! sector k's own price is P_k = E_k / (X_k − M_k), the uniform price
//! averages those, and the physical flow table is E_kj = Z_kj · P̄.

use crate::economy::EconomyTable;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Physical energy use per sector, in ktoe.
#[derive(Debug, Clone)]
pub struct EnergyAccount {
    values: Vec<f64>,
    year: i32,
}

impl EnergyAccount {
    /// `values` must already be in ktoe (ingestion converts declared units).
    /// Entries for non-energy sectors are allowed; pricing ignores them.
    pub fn new(values: Vec<f64>, year: i32) -> Result<Self> {
        for (i, &e) in values.iter().enumerate() {
            if !e.is_finite() || e < 0.0 {
                return Err(Error::NegativeValue {
                    what: "energy use".into(),
                    value: e,
                    row: i.to_string(),
                    column: String::new(),
                });
            }
        }
        Ok(EnergyAccount { values, year })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AveragingMethod {
    ArithmeticMean,
    OutputWeighted,
}

impl AveragingMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            AveragingMethod::ArithmeticMean => "arithmetic_mean",
            AveragingMethod::OutputWeighted => "output_weighted",
        }
    }
}

impl std::str::FromStr for AveragingMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "arithmetic_mean" => Ok(AveragingMethod::ArithmeticMean),
            "output_weighted" => Ok(AveragingMethod::OutputWeighted),
            other => Err(Error::InvalidArgument(format!(
                "unknown averaging method {other:?} (expected arithmetic_mean or output_weighted)"
            ))),
        }
    }
}

/// Per-energy-sector prices plus the uniform price applied to all flows.
#[derive(Debug, Clone)]
pub struct EnergyPriceVector {
    /// (sector index, price in ktoe per currency unit) for each energy sector.
    pub per_sector: Vec<(usize, f64)>,
    pub uniform: f64,
    pub averaging_method: AveragingMethod,
}

/// Price of one energy sector: E_i / (X_i − M_i), in ktoe per currency unit.
pub fn sector_energy_price(code: &str, energy_use: f64, output: f64, imports: f64) -> Result<f64> {
    let denom = output - imports;
    if denom.is_nan() || denom <= 0.0 {
        return Err(Error::NonpositiveDenominator {
            code: code.into(),
            value: denom,
        });
    }
    if energy_use.is_nan() || energy_use <= 0.0 {
        return Err(Error::ZeroEnergyUse { code: code.into() });
    }
    Ok(energy_use / denom)
}

/// Averages per-sector prices into the uniform price. `weights` are used only
/// by `OutputWeighted` (one weight per price, typically X_i − M_i).
pub fn uniform_energy_price(
    prices: &[f64],
    weights: &[f64],
    method: AveragingMethod,
) -> Result<f64> {
    if prices.is_empty() {
        return Err(Error::EmptyPriceList);
    }
    for &p in prices {
        if p.is_nan() || p <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "energy prices must be positive, got {p}"
            )));
        }
    }
    match method {
        AveragingMethod::ArithmeticMean => Ok(prices.iter().sum::<f64>() / prices.len() as f64),
        AveragingMethod::OutputWeighted => {
            if weights.len() != prices.len() {
                return Err(Error::DimensionMismatch {
                    context: "price weights".into(),
                    expected: prices.len(),
                    found: weights.len(),
                });
            }
            let total: f64 = weights.iter().sum();
            if total.is_nan() || total <= 0.0 {
                return Err(Error::InvalidArgument(
                    "output weights must sum to a positive value".into(),
                ));
            }
            Ok(prices.iter().zip(weights).map(|(p, w)| p * w).sum::<f64>() / total)
        }
    }
}

/// Prices every sector flagged `is_energy` from the account and table, then
/// averages into the uniform price.
pub fn derive_energy_prices(
    table: &EconomyTable,
    account: &EnergyAccount,
    method: AveragingMethod,
) -> Result<EnergyPriceVector> {
    if account.len() != table.len() {
        return Err(Error::DimensionMismatch {
            context: "energy account".into(),
            expected: table.len(),
            found: account.len(),
        });
    }
    let mut per_sector = Vec::new();
    let mut weights = Vec::new();
    for k in table.sectors().energy_indices() {
        let sector = table.sectors().get(k);
        let price = sector_energy_price(
            &sector.code,
            account.values()[k],
            table.total_output()[k],
            table.imports()[k],
        )?;
        per_sector.push((k, price));
        weights.push(table.total_output()[k] - table.imports()[k]);
    }
    let prices: Vec<f64> = per_sector.iter().map(|&(_, p)| p).collect();
    let uniform = uniform_energy_price(&prices, &weights, method)?;
    Ok(EnergyPriceVector {
        per_sector,
        uniform,
        averaging_method: method,
    })
}

/// Physical energy deliveries from each energy sector to every buyer, ktoe.
#[derive(Debug, Clone)]
pub struct EnergyFlowTable {
    /// e×n matrix: row k = k-th energy sector (catalog order), column j = buyer.
    flows: Matrix,
    energy_sector_indices: Vec<usize>,
    year: i32,
}

impl EnergyFlowTable {
    pub fn flows(&self) -> &Matrix {
        &self.flows
    }

    pub fn energy_sector_indices(&self) -> &[usize] {
        &self.energy_sector_indices
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn buyer_count(&self) -> usize {
        self.flows.cols()
    }
}

/// Converts the monetary rows of the energy sectors into physical deliveries:
/// E_kj = Z_kj · P̄. Non-energy rows are not converted.
pub fn build_energy_flow_table(
    table: &EconomyTable,
    uniform_price: f64,
) -> Result<EnergyFlowTable> {
    if !(uniform_price.is_finite() && uniform_price > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "uniform price must be positive, got {uniform_price}"
        )));
    }
    let energy_sector_indices = table.sectors().energy_indices();
    let n = table.len();
    let mut flows = Matrix::zeros(energy_sector_indices.len(), n);
    for (row, &k) in energy_sector_indices.iter().enumerate() {
        for j in 0..n {
            flows[(row, j)] = table.flows()[(k, j)] * uniform_price;
        }
    }
    Ok(EnergyFlowTable {
        flows,
        energy_sector_indices,
        year: table.year(),
    })
}

/// Share of energy output going to intermediate (inter-industry) use:
/// Σ_k Σ_j Z_kj over Σ_k (Σ_j Z_kj + f_k), k ranging over energy sectors.
/// Computed in monetary terms; under a uniform price the physical share is
/// identical, so no energy account is needed.
pub fn intermediate_demand_share(table: &EconomyTable) -> Result<f64> {
    let mut intermediate = 0.0;
    let mut total = 0.0;
    for k in table.sectors().energy_indices() {
        let row_sum: f64 = table.flows().row(k).iter().sum();
        intermediate += row_sum;
        total += row_sum + table.final_demand()[k];
    }
    if total.is_nan() || total <= 0.0 {
        return Err(Error::ZeroEnergyDemand);
    }
    Ok(intermediate / total)
}
