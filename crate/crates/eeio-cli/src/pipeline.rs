//! Per-year orchestration: load, validate, derive coefficients and prices,
//! convert to physical flows, compute intensities, and collect the trend.

use crate::config::{RunConfig, YearDataset};
use crate::trend::{trend_report, TrendSeries};
use crate::{AppError, Result};
use eeio::economy::{technical_coefficients, validate_balances, BalanceReport};
use eeio::energy::{build_energy_flow_table, derive_energy_prices, intermediate_demand_share};
use eeio::intensity::{aggregate_intensity, total_energy_demand, IntensitySet};
use eeio::{EconomyTable, EnergyPriceVector};

/// Denominator used for the aggregate intensity, echoed into reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregateBasis {
    Gdp,
    TotalOutput,
}

impl AggregateBasis {
    pub fn as_str(&self) -> &'static str {
        match self {
            AggregateBasis::Gdp => "gdp",
            AggregateBasis::TotalOutput => "total_output",
        }
    }
}

pub struct YearResult {
    pub year: i32,
    pub table: EconomyTable,
    pub balance: BalanceReport,
    pub prices: EnergyPriceVector,
    pub intensities: IntensitySet,
    pub intermediate_share: f64,
    pub energy_demand_ktoe: f64,
    pub aggregate_intensity: f64,
    pub aggregate_basis: AggregateBasis,
}

pub struct PipelineOutput {
    pub years: Vec<YearResult>,
    pub trend: Option<TrendSeries>,
    pub currency_unit: String,
    pub top_n: usize,
}

fn with_year<T>(year: i32, r: std::result::Result<T, eeio::Error>) -> Result<T> {
    r.map_err(|e| {
        let wrapped = AppError::from(e);
        match wrapped {
            AppError::Config(msg) => AppError::Config(format!("year {year}: {msg}")),
            AppError::Validation(msg) => AppError::Validation(format!("year {year}: {msg}")),
        }
    })
}

/// Loads one year's table and checks its balances against the tolerance.
/// The report is returned either way; an `Err` means at least one sector
/// failed.
pub fn load_and_validate(
    dataset: &YearDataset,
    config: &RunConfig,
) -> Result<(EconomyTable, BalanceReport)> {
    let table = with_year(
        dataset.year,
        eeio::load_economy_table(
            &dataset.sectors,
            &dataset.flows,
            &dataset.accounts,
            dataset.year,
            &config.currency_unit,
        ),
    )?;
    let report = validate_balances(&table, config.balance_rel_tol);
    Ok((table, report))
}

fn balance_failure_message(report: &BalanceReport) -> String {
    let failing: Vec<String> = report
        .failures()
        .map(|e| {
            format!(
                "{} (row residual {:.3e}, column residual {:.3e}, output {})",
                e.code, e.row_residual, e.col_residual, e.output
            )
        })
        .collect();
    format!(
        "year {}: balance check failed at rel_tol {} for {}",
        report.year,
        report.rel_tol,
        failing.join("; ")
    )
}

fn process_year(dataset: &YearDataset, config: &RunConfig) -> Result<YearResult> {
    let year = dataset.year;
    let (table, balance) = load_and_validate(dataset, config)?;
    if !balance.pass() {
        return Err(AppError::Validation(balance_failure_message(&balance)));
    }

    let coefficients = with_year(year, technical_coefficients(&table))?;
    if !coefficients.is_productive() {
        return Err(AppError::Validation(format!(
            "year {year}: {}",
            coefficients.diagnostic().detail()
        )));
    }

    let account = with_year(
        year,
        eeio::load_energy_account(&dataset.energy, table.sectors(), year, &config.energy_unit),
    )?;
    let prices = with_year(
        year,
        derive_energy_prices(&table, &account, config.averaging_method),
    )?;
    let energy_flows = with_year(year, build_energy_flow_table(&table, prices.uniform))?;
    let intensities = with_year(
        year,
        IntensitySet::compute(&table, &energy_flows, &coefficients, config.solve_tol),
    )?;
    let intermediate_share = with_year(year, intermediate_demand_share(&table))?;

    let energy_demand_ktoe = total_energy_demand(&table, prices.uniform);
    let (denominator, aggregate_basis) = match dataset.gdp {
        Some(gdp) => (gdp, AggregateBasis::Gdp),
        None => (
            table.total_output().iter().sum::<f64>(),
            AggregateBasis::TotalOutput,
        ),
    };
    let aggregate = with_year(year, aggregate_intensity(energy_demand_ktoe, denominator))?;

    Ok(YearResult {
        year,
        table,
        balance,
        prices,
        intensities,
        intermediate_share,
        energy_demand_ktoe,
        aggregate_intensity: aggregate,
        aggregate_basis,
    })
}

/// Runs every configured year in order. Fails on the first year whose data
/// does not validate, with the year named in the error.
pub fn run_pipeline(config: &RunConfig) -> Result<PipelineOutput> {
    let years: Vec<YearResult> = config
        .years
        .iter()
        .map(|dataset| process_year(dataset, config))
        .collect::<Result<_>>()?;

    let trend = if years.len() >= 2 {
        let points: Vec<(i32, f64)> = years
            .iter()
            .map(|y| (y.year, y.aggregate_intensity))
            .collect();
        Some(trend_report(&points)?)
    } else {
        None
    };

    Ok(PipelineOutput {
        years,
        trend,
        currency_unit: config.currency_unit.clone(),
        top_n: config.ranking_top_n,
    })
}
