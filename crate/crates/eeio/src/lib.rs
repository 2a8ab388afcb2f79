//! Energy-extended input-output analysis.
//!
//! From a monetary input-output table and a physical energy account this
//! crate derives technical coefficients, checks the productivity of the
//! economy, solves the Leontief system, converts energy-sector sales into
//! physical flows with a uniform energy price, and computes per-sector
//! direct, total, and indirect energy intensities.

pub mod economy;
pub mod energy;
pub mod error;
pub mod ingest;
pub mod intensity;
pub mod leontief;
pub mod lu;
pub mod matrix;
pub mod sectors;
pub mod synthetic;

pub use economy::{technical_coefficients, validate_balances, BalanceReport, EconomyTable};
pub use energy::{
    build_energy_flow_table, derive_energy_prices, intermediate_demand_share, sector_energy_price,
    uniform_energy_price, AveragingMethod, EnergyAccount, EnergyFlowTable, EnergyPriceVector,
};
pub use error::{Error, ErrorClass, Result};
pub use ingest::{load_economy_table, load_energy_account, load_sector_catalog};
pub use intensity::{
    aggregate_intensity, direct_intensity, direct_share, indirect_intensity, total_intensity,
    IntensitySet,
};
pub use leontief::{
    hawkins_simon_check, leontief_inverse, leontief_series_oracle, solve_output, CoefficientMatrix,
    LeontiefInverse,
};
pub use matrix::Matrix;
pub use sectors::{Sector, SectorCatalog};
