//! Report rendering: the two table-shaped reports (total-intensity ranking
//! and direct-intensity shares), the aggregate trend, and the intermediate
//! demand share, in CSV (full precision) or Markdown (table precision, one
//! decimal for intensities and shares).

use crate::pipeline::PipelineOutput;
use crate::ranking::{build_ranking_table, RankingTable};
use crate::{AppError, Result};
use eeio::intensity::direct_share;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl ReportFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Markdown => "md",
        }
    }
}

impl std::str::FromStr for ReportFormat {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(AppError::Config(format!(
                "unknown report format {other:?} (expected csv or markdown)"
            ))),
        }
    }
}

const NOMINAL_CAVEAT: &str =
    "Values are nominal per-year computations; prices are not deflated across years.";

/// Shortest round-trip decimal form, used for all CSV numbers.
fn full(v: f64) -> String {
    format!("{v}")
}

fn one_decimal(v: f64) -> String {
    format!("{v:.1}")
}

/// Assembles the multi-year ranking of non-energy sectors by total intensity.
pub fn ranking_table(output: &PipelineOutput) -> Result<RankingTable> {
    let catalog = output.years[0].table.sectors();
    for y in &output.years[1..] {
        if y.table.sectors() != catalog {
            return Err(AppError::Validation(format!(
                "year {} uses a different sector catalog than year {}",
                y.year, output.years[0].year
            )));
        }
    }
    let per_year: Vec<(i32, Vec<f64>)> = output
        .years
        .iter()
        .map(|y| (y.year, y.intensities.total().to_vec()))
        .collect();
    let table = build_ranking_table(&per_year, catalog, output.top_n);
    if table.rows.is_empty() {
        return Err(AppError::Validation(
            "nothing to rank: no non-energy sectors with intensities".into(),
        ));
    }
    Ok(table)
}

fn render_ranking(output: &PipelineOutput, table: &RankingTable, format: ReportFormat) -> String {
    let mut s = String::new();
    match format {
        ReportFormat::Csv => {
            let mut header = String::from("code,name");
            for year in &table.years {
                write!(header, ",total_{year},rank_{year}").unwrap();
            }
            s.push_str(&header);
            s.push('\n');
            for row in &table.rows {
                write!(s, "{},{}", row.code, escape_csv(&row.name)).unwrap();
                for (value, rank) in &row.cells {
                    write!(s, ",{},{rank}", full(*value)).unwrap();
                }
                s.push('\n');
            }
        }
        ReportFormat::Markdown => {
            writeln!(
                s,
                "# Total energy intensity of non-energy sectors (ktoe per {})",
                output.currency_unit
            )
            .unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{NOMINAL_CAVEAT}").unwrap();
            writeln!(s).unwrap();
            let mut head = String::from("| Sector | Code |");
            let mut rule = String::from("|---|---|");
            for year in &table.years {
                write!(head, " {year} | rank |").unwrap();
                rule.push_str("---:|---:|");
            }
            writeln!(s, "{head}").unwrap();
            writeln!(s, "{rule}").unwrap();
            for row in &table.rows {
                write!(s, "| {} | {} |", row.name, row.code).unwrap();
                for (value, rank) in &row.cells {
                    write!(s, " {} | {rank} |", one_decimal(*value)).unwrap();
                }
                s.push('\n');
            }
        }
    }
    s
}

fn render_direct_share(
    output: &PipelineOutput,
    table: &RankingTable,
    format: ReportFormat,
) -> Result<String> {
    // Same sector rows as the ranking table; columns carry the direct value
    // and the direct-to-total percentage per year.
    let shares: Vec<Vec<Option<f64>>> = output
        .years
        .iter()
        .map(|y| {
            direct_share(y.intensities.direct(), y.intensities.total())
                .map_err(|e| AppError::Validation(e.to_string()))
        })
        .collect::<Result<_>>()?;

    let mut s = String::new();
    match format {
        ReportFormat::Csv => {
            let mut header = String::from("code,name");
            for year in &table.years {
                write!(header, ",direct_{year},share_pct_{year}").unwrap();
            }
            s.push_str(&header);
            s.push('\n');
            for row in &table.rows {
                write!(s, "{},{}", row.code, escape_csv(&row.name)).unwrap();
                for (k, y) in output.years.iter().enumerate() {
                    let direct = y.intensities.direct()[row.index];
                    match shares[k][row.index] {
                        Some(pct) => write!(s, ",{},{}", full(direct), full(pct)).unwrap(),
                        None => write!(s, ",{},", full(direct)).unwrap(),
                    }
                }
                s.push('\n');
            }
        }
        ReportFormat::Markdown => {
            writeln!(
                s,
                "# Direct energy intensity (ktoe per {}) and direct share of total (%)",
                output.currency_unit
            )
            .unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{NOMINAL_CAVEAT}").unwrap();
            writeln!(s).unwrap();
            let mut head = String::from("| Sector | Code |");
            let mut rule = String::from("|---|---|");
            for year in &table.years {
                write!(head, " {year} | % |").unwrap();
                rule.push_str("---:|---:|");
            }
            writeln!(s, "{head}").unwrap();
            writeln!(s, "{rule}").unwrap();
            for row in &table.rows {
                write!(s, "| {} | {} |", row.name, row.code).unwrap();
                for (k, y) in output.years.iter().enumerate() {
                    let direct = y.intensities.direct()[row.index];
                    let pct = match shares[k][row.index] {
                        Some(pct) => one_decimal(pct),
                        None => "n/a".into(),
                    };
                    write!(s, " {} | {pct} |", one_decimal(direct)).unwrap();
                }
                s.push('\n');
            }
        }
    }
    Ok(s)
}

fn render_trend(output: &PipelineOutput, format: ReportFormat) -> String {
    let first = output.years.first().map(|y| y.aggregate_intensity);
    let change_vs_first = |v: f64| -> Option<f64> {
        let f = first?;
        if f == 0.0 {
            return None;
        }
        Some(100.0 * (v - f) / f)
    };

    let mut s = String::new();
    match format {
        ReportFormat::Csv => {
            s.push_str("year,aggregate_intensity,denominator,percent_change_vs_first\n");
            for (k, y) in output.years.iter().enumerate() {
                let change = if k == 0 {
                    String::new()
                } else {
                    change_vs_first(y.aggregate_intensity).map_or(String::new(), full)
                };
                writeln!(
                    s,
                    "{},{},{},{change}",
                    y.year,
                    full(y.aggregate_intensity),
                    y.aggregate_basis.as_str()
                )
                .unwrap();
            }
        }
        ReportFormat::Markdown => {
            writeln!(
                s,
                "# Aggregate energy intensity trend (ktoe per {})",
                output.currency_unit
            )
            .unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{NOMINAL_CAVEAT}").unwrap();
            writeln!(s).unwrap();
            writeln!(
                s,
                "| Year | Intensity | Denominator | Change vs first (%) |"
            )
            .unwrap();
            writeln!(s, "|---:|---:|---|---:|").unwrap();
            for (k, y) in output.years.iter().enumerate() {
                let change = if k == 0 {
                    String::new()
                } else {
                    change_vs_first(y.aggregate_intensity).map_or(String::new(), one_decimal)
                };
                writeln!(
                    s,
                    "| {} | {:.3} | {} | {change} |",
                    y.year,
                    y.aggregate_intensity,
                    y.aggregate_basis.as_str()
                )
                .unwrap();
            }
            if let Some(trend) = &output.trend {
                writeln!(s).unwrap();
                writeln!(
                    s,
                    "Overall change {} to {}: {} %",
                    trend.points.first().unwrap().0,
                    trend.points.last().unwrap().0,
                    one_decimal(trend.percent_change)
                )
                .unwrap();
            }
        }
    }
    s
}

fn render_intermediate_share(output: &PipelineOutput, format: ReportFormat) -> String {
    let mut s = String::new();
    match format {
        ReportFormat::Csv => {
            s.push_str("year,intermediate_share\n");
            for y in &output.years {
                writeln!(s, "{},{}", y.year, full(y.intermediate_share)).unwrap();
            }
        }
        ReportFormat::Markdown => {
            writeln!(s, "# Share of energy demand used as intermediate input").unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{NOMINAL_CAVEAT}").unwrap();
            writeln!(s).unwrap();
            writeln!(s, "| Year | Intermediate share (%) |").unwrap();
            writeln!(s, "|---:|---:|").unwrap();
            for y in &output.years {
                writeln!(
                    s,
                    "| {} | {} |",
                    y.year,
                    one_decimal(100.0 * y.intermediate_share)
                )
                .unwrap();
            }
        }
    }
    s
}

fn escape_csv(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Writes the four report files into `dir`, creating it if needed. Returns
/// the written paths in a fixed order.
pub fn render_reports(
    output: &PipelineOutput,
    format: ReportFormat,
    dir: &Path,
) -> Result<Vec<PathBuf>> {
    let table = ranking_table(output)?;

    std::fs::create_dir_all(dir)
        .map_err(|e| AppError::Config(format!("output directory {}: {e}", dir.display())))?;

    let ext = format.extension();
    let files = [
        (
            format!("total_intensity_ranking.{ext}"),
            render_ranking(output, &table, format),
        ),
        (
            format!("direct_share.{ext}"),
            render_direct_share(output, &table, format)?,
        ),
        (format!("trend.{ext}"), render_trend(output, format)),
        (
            format!("intermediate_share.{ext}"),
            render_intermediate_share(output, format),
        ),
    ];

    let mut written = Vec::with_capacity(files.len());
    for (name, content) in files {
        let path = dir.join(&name);
        std::fs::write(&path, content)
            .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}
