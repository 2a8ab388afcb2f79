//! Run configuration: a TOML file naming the per-year dataset files and the
//! numeric knobs of the pipeline.
//!
//! ```toml
//! currency_unit = "USDm"
//! energy_unit = "ktoe"
//! balance_rel_tol = 0.01
//! solve_tol = 1e-9
//! averaging_method = "arithmetic_mean"
//! ranking_top_n = 20
//! format = "csv"
//!
//! [[years]]
//! year = 2005
//! sectors = "2005/sectors.csv"
//! flows = "2005/flows.csv"
//! accounts = "2005/accounts.csv"
//! energy = "2005/energy.csv"
//! # gdp = 4800.0          # optional aggregate-intensity denominator
//! ```
//!
//! Relative paths are resolved against the directory containing the config
//! file.

use crate::{AppError, Result};
use eeio::AveragingMethod;
use serde::Deserialize;
use std::path::{Path, PathBuf};

use crate::render::ReportFormat;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    currency_unit: Option<String>,
    energy_unit: Option<String>,
    balance_rel_tol: Option<f64>,
    solve_tol: Option<f64>,
    averaging_method: Option<String>,
    ranking_top_n: Option<usize>,
    format: Option<String>,
    years: Vec<RawYear>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawYear {
    year: i32,
    sectors: String,
    flows: String,
    accounts: String,
    energy: String,
    gdp: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct YearDataset {
    pub year: i32,
    pub sectors: PathBuf,
    pub flows: PathBuf,
    pub accounts: PathBuf,
    pub energy: PathBuf,
    pub gdp: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub years: Vec<YearDataset>,
    pub currency_unit: String,
    pub energy_unit: String,
    pub balance_rel_tol: f64,
    pub solve_tol: f64,
    pub averaging_method: AveragingMethod,
    pub ranking_top_n: usize,
    pub format: ReportFormat,
}

/// Published tables carry rounding discrepancies; 1% is the default gate.
pub const DEFAULT_BALANCE_REL_TOL: f64 = 0.01;
pub const DEFAULT_SOLVE_TOL: f64 = 1e-9;
pub const DEFAULT_TOP_N: usize = 20;

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
        let raw: RawConfig = toml::from_str(&text)
            .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));

        if raw.years.is_empty() {
            return Err(AppError::Config(format!(
                "{}: at least one [[years]] entry is required",
                path.display()
            )));
        }

        let balance_rel_tol = raw.balance_rel_tol.unwrap_or(DEFAULT_BALANCE_REL_TOL);
        let solve_tol = raw.solve_tol.unwrap_or(DEFAULT_SOLVE_TOL);
        if !balance_rel_tol.is_finite() || balance_rel_tol <= 0.0 {
            return Err(AppError::Config(format!(
                "balance_rel_tol must be positive, got {balance_rel_tol}"
            )));
        }
        if !solve_tol.is_finite() || solve_tol <= 0.0 {
            return Err(AppError::Config(format!(
                "solve_tol must be positive, got {solve_tol}"
            )));
        }
        let ranking_top_n = raw.ranking_top_n.unwrap_or(DEFAULT_TOP_N);
        if ranking_top_n == 0 {
            return Err(AppError::Config("ranking_top_n must be at least 1".into()));
        }
        let averaging_method = raw
            .averaging_method
            .as_deref()
            .unwrap_or("arithmetic_mean")
            .parse::<AveragingMethod>()
            .map_err(|e| AppError::Config(e.to_string()))?;
        let format = raw
            .format
            .as_deref()
            .unwrap_or("csv")
            .parse::<ReportFormat>()?;

        let mut years: Vec<YearDataset> = raw
            .years
            .into_iter()
            .map(|y| YearDataset {
                year: y.year,
                sectors: base.join(&y.sectors),
                flows: base.join(&y.flows),
                accounts: base.join(&y.accounts),
                energy: base.join(&y.energy),
                gdp: y.gdp,
            })
            .collect();
        years.sort_by_key(|y| y.year);
        for pair in years.windows(2) {
            if pair[0].year == pair[1].year {
                return Err(AppError::Config(format!(
                    "year {} listed more than once",
                    pair[0].year
                )));
            }
        }
        for y in &years {
            for (what, p) in [
                ("sectors", &y.sectors),
                ("flows", &y.flows),
                ("accounts", &y.accounts),
                ("energy", &y.energy),
            ] {
                if !p.is_file() {
                    return Err(AppError::Config(format!(
                        "year {}: {what} file {} does not exist",
                        y.year,
                        p.display()
                    )));
                }
            }
            if let Some(gdp) = y.gdp {
                if !gdp.is_finite() || gdp <= 0.0 {
                    return Err(AppError::Config(format!(
                        "year {}: gdp must be positive, got {gdp}",
                        y.year
                    )));
                }
            }
        }

        Ok(RunConfig {
            years,
            currency_unit: raw.currency_unit.unwrap_or_else(|| "USDm".into()),
            energy_unit: raw.energy_unit.unwrap_or_else(|| "ktoe".into()),
            balance_rel_tol,
            solve_tol,
            averaging_method,
            ranking_top_n,
            format,
        })
    }
}
