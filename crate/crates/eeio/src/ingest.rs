//! CSV ingestion for sector catalogs, monetary accounts, and energy accounts.
//!
//! Expected files (UTF-8, comma-separated, one header row):
//!
//! - `sectors.csv`:  `index,code,name,is_energy`
//! - `flows.csv`:    first column `code` (selling sector), one column per
//!   buying sector code; cells are intermediate transactions Z_ij
//! - `accounts.csv`: `code,final_demand,imports,value_added,total_output`
//! - `energy.csv`:   `code,energy_use`
//!
//! Sector codes must agree across files. Column and row order may differ from
//! the catalog; coverage must be exact (every code once, no strangers).

use crate::economy::EconomyTable;
use crate::energy::EnergyAccount;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::sectors::{Sector, SectorCatalog};
use std::path::Path;

fn open_reader(path: &Path) -> Result<csv::Reader<std::fs::File>> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => Error::Io {
                path: path.display().to_string(),
                source: match e.into_kind() {
                    csv::ErrorKind::Io(io) => io,
                    _ => unreachable!(),
                },
            },
            _ => Error::Csv {
                path: path.display().to_string(),
                source: e,
            },
        })
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    Error::Csv {
        path: path.display().to_string(),
        source: e,
    }
}

fn schema_error(path: &Path, detail: impl Into<String>) -> Error {
    Error::Schema {
        path: path.display().to_string(),
        detail: detail.into(),
    }
}

fn parse_number(path: &Path, line: u64, column: &str, raw: &str) -> Result<f64> {
    raw.parse::<f64>().map_err(|_| {
        schema_error(
            path,
            format!("line {line}, column {column:?}: cannot parse {raw:?} as a number"),
        )
    })
}

/// Conversion factor from a declared energy unit to the canonical ktoe.
pub fn energy_unit_factor(unit: &str) -> Result<f64> {
    match unit {
        "ktoe" => Ok(1.0),
        "toe" => Ok(1e-3),
        "Mtoe" => Ok(1e3),
        other => Err(Error::InvalidArgument(format!(
            "unknown energy unit {other:?} (expected toe, ktoe, or Mtoe)"
        ))),
    }
}

pub fn load_sector_catalog(path: &Path) -> Result<SectorCatalog> {
    let mut reader = open_reader(path)?;
    let headers = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    let expected = ["index", "code", "name", "is_energy"];
    let actual: Vec<&str> = headers.iter().collect();
    if actual != expected {
        return Err(schema_error(
            path,
            format!("expected header {expected:?}, found {actual:?}"),
        ));
    }

    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 4 {
            return Err(schema_error(
                path,
                format!("line {line}: expected 4 fields, found {}", record.len()),
            ));
        }
        let index: usize = record[0].parse().map_err(|_| {
            schema_error(
                path,
                format!("line {line}: cannot parse index {:?}", &record[0]),
            )
        })?;
        let is_energy = match &record[3] {
            "true" => true,
            "false" => false,
            other => {
                return Err(schema_error(
                    path,
                    format!("line {line}: is_energy must be true or false, found {other:?}"),
                ))
            }
        };
        entries.push(Sector {
            index,
            code: record[1].to_string(),
            name: record[2].to_string(),
            is_energy,
        });
    }
    entries.sort_by_key(|s| s.index);
    SectorCatalog::new(entries)
}

/// Reads a `code,<values...>` file into per-sector rows keyed by code,
/// enforcing exact coverage of the catalog.
fn read_keyed_rows(
    path: &Path,
    catalog: &SectorCatalog,
    value_columns: &[&str],
) -> Result<Vec<Vec<f64>>> {
    let mut reader = open_reader(path)?;
    let headers = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    let mut expected = vec!["code"];
    expected.extend_from_slice(value_columns);
    let actual: Vec<&str> = headers.iter().collect();
    if actual != expected {
        return Err(schema_error(
            path,
            format!("expected header {expected:?}, found {actual:?}"),
        ));
    }

    let mut rows: Vec<Option<Vec<f64>>> = vec![None; catalog.len()];
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != expected.len() {
            return Err(schema_error(
                path,
                format!(
                    "line {line}: expected {} fields, found {}",
                    expected.len(),
                    record.len()
                ),
            ));
        }
        let code = &record[0];
        let sector = catalog.by_code(code).ok_or_else(|| Error::UnknownSector {
            code: code.to_string(),
            context: path.display().to_string(),
        })?;
        if rows[sector.index].is_some() {
            return Err(schema_error(
                path,
                format!("line {line}: sector {code:?} listed more than once"),
            ));
        }
        let mut values = Vec::with_capacity(value_columns.len());
        for (k, column) in value_columns.iter().enumerate() {
            values.push(parse_number(path, line, column, &record[k + 1])?);
        }
        rows[sector.index] = Some(values);
    }

    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.ok_or_else(|| {
                schema_error(path, format!("sector {:?} missing", catalog.get(i).code))
            })
        })
        .collect()
}

fn load_flows(path: &Path, catalog: &SectorCatalog) -> Result<Matrix> {
    let n = catalog.len();
    let mut reader = open_reader(path)?;
    let headers = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    if headers.is_empty() || &headers[0] != "code" {
        return Err(schema_error(
            path,
            format!(
                "first header column must be \"code\", found {:?}",
                headers.get(0).unwrap_or("")
            ),
        ));
    }
    let buyer_codes: Vec<&str> = headers.iter().skip(1).collect();
    if buyer_codes.len() != n {
        return Err(Error::DimensionMismatch {
            context: format!("{}: buying-sector columns", path.display()),
            expected: n,
            found: buyer_codes.len(),
        });
    }
    let mut buyer_index = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for code in &buyer_codes {
        let sector = catalog.by_code(code).ok_or_else(|| Error::UnknownSector {
            code: (*code).to_string(),
            context: format!("{} header", path.display()),
        })?;
        if seen[sector.index] {
            return Err(schema_error(
                path,
                format!("buying-sector column {code:?} listed more than once"),
            ));
        }
        seen[sector.index] = true;
        buyer_index.push(sector.index);
    }

    let mut flows = Matrix::zeros(n, n);
    let mut row_seen = vec![false; n];
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                context: format!("{}: line {line}", path.display()),
                expected: n + 1,
                found: record.len(),
            });
        }
        let code = &record[0];
        let seller = catalog.by_code(code).ok_or_else(|| Error::UnknownSector {
            code: code.to_string(),
            context: path.display().to_string(),
        })?;
        if row_seen[seller.index] {
            return Err(schema_error(
                path,
                format!("line {line}: selling sector {code:?} listed more than once"),
            ));
        }
        row_seen[seller.index] = true;
        for (k, &j) in buyer_index.iter().enumerate() {
            flows[(seller.index, j)] = parse_number(path, line, buyer_codes[k], &record[k + 1])?;
        }
    }
    for (i, seen) in row_seen.iter().enumerate() {
        if !seen {
            return Err(schema_error(
                path,
                format!("selling sector {:?} missing", catalog.get(i).code),
            ));
        }
    }
    Ok(flows)
}

/// Loads and assembles a full [`EconomyTable`] from the three monetary files.
/// All structural invariants are enforced; balance residuals are left to
/// [`crate::economy::validate_balances`] so the caller chooses the tolerance.
pub fn load_economy_table(
    sectors_path: &Path,
    flows_path: &Path,
    accounts_path: &Path,
    year: i32,
    currency_unit: &str,
) -> Result<EconomyTable> {
    let catalog = load_sector_catalog(sectors_path)?;
    let flows = load_flows(flows_path, &catalog)?;
    let accounts = read_keyed_rows(
        accounts_path,
        &catalog,
        &["final_demand", "imports", "value_added", "total_output"],
    )?;

    let n = catalog.len();
    let mut final_demand = Vec::with_capacity(n);
    let mut imports = Vec::with_capacity(n);
    let mut value_added = Vec::with_capacity(n);
    let mut total_output = Vec::with_capacity(n);
    for row in accounts {
        final_demand.push(row[0]);
        imports.push(row[1]);
        value_added.push(row[2]);
        total_output.push(row[3]);
    }

    EconomyTable::new(
        catalog,
        flows,
        final_demand,
        imports,
        value_added,
        total_output,
        year,
        currency_unit,
    )
}

/// Loads per-sector energy use, converting the declared unit to ktoe.
pub fn load_energy_account(
    path: &Path,
    catalog: &SectorCatalog,
    year: i32,
    energy_unit: &str,
) -> Result<EnergyAccount> {
    let factor = energy_unit_factor(energy_unit)?;
    let rows = read_keyed_rows(path, catalog, &["energy_use"])?;
    let values = rows.into_iter().map(|row| row[0] * factor).collect();
    EnergyAccount::new(values, year)
}
