use clap::{Parser, Subcommand};
use eeio_cli::config::RunConfig;
use eeio_cli::pipeline::{load_and_validate, run_pipeline};
use eeio_cli::ranking::rank_all;
use eeio_cli::render::{render_reports, ReportFormat};
use eeio_cli::{AppError, Result};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "eeio",
    about = "Energy-extended input-output analysis: sectoral energy intensities from monetary IO tables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the accounting balances of every configured year
    Validate { config: PathBuf },
    /// Print per-sector direct, total, and indirect intensities
    Intensities { config: PathBuf },
    /// Print the total-intensity ranking of non-energy sectors
    Rank {
        config: PathBuf,
        /// Number of sectors to list (overrides ranking_top_n)
        #[arg(long)]
        top: Option<usize>,
    },
    /// Print the aggregate intensity trend across years
    Trend { config: PathBuf },
    /// Run the full pipeline and write report files
    Run {
        config: PathBuf,
        /// Report format (overrides the config): csv or markdown
        #[arg(long)]
        format: Option<String>,
        /// Output directory (default: reports)
        #[arg(long, default_value = "reports")]
        out: PathBuf,
    },
}

fn cmd_validate(config_path: &Path) -> Result<()> {
    let config = RunConfig::load(config_path)?;
    let mut all_ok = true;
    for dataset in &config.years {
        let (_, report) = load_and_validate(dataset, &config)?;
        if report.pass() {
            println!(
                "year {}: balances OK ({} sectors, rel_tol {})",
                dataset.year,
                report.entries.len(),
                report.rel_tol
            );
        } else {
            all_ok = false;
            println!(
                "year {}: balance FAILURES at rel_tol {}:",
                dataset.year, report.rel_tol
            );
            for e in report.failures() {
                println!(
                    "  {}: row residual {:.6e}, column residual {:.6e} (output {})",
                    e.code, e.row_residual, e.col_residual, e.output
                );
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(AppError::Validation("balance validation failed".into()))
    }
}

fn cmd_intensities(config_path: &Path) -> Result<()> {
    let config = RunConfig::load(config_path)?;
    let output = run_pipeline(&config)?;
    println!("year,code,name,direct,total,indirect");
    for y in &output.years {
        let set = &y.intensities;
        for sector in set.sectors().iter() {
            let j = sector.index;
            println!(
                "{},{},{},{},{},{}",
                y.year,
                sector.code,
                sector.name,
                set.direct()[j],
                set.total()[j],
                set.indirect()[j]
            );
        }
    }
    Ok(())
}

fn cmd_rank(config_path: &Path, top: Option<usize>) -> Result<()> {
    let mut config = RunConfig::load(config_path)?;
    if let Some(n) = top {
        if n == 0 {
            return Err(AppError::Config("--top must be at least 1".into()));
        }
        config.ranking_top_n = n;
    }
    let output = run_pipeline(&config)?;
    for y in &output.years {
        println!(
            "year {}: total energy intensity, non-energy sectors (ktoe per {})",
            y.year, output.currency_unit
        );
        let ranked = rank_all(y.intensities.total(), y.table.sectors(), true);
        for entry in ranked.iter().take(config.ranking_top_n) {
            println!(
                "  {:>3}. {} ({}): {:.1}",
                entry.rank, entry.name, entry.code, entry.value
            );
        }
    }
    Ok(())
}

fn cmd_trend(config_path: &Path) -> Result<()> {
    let config = RunConfig::load(config_path)?;
    let output = run_pipeline(&config)?;
    let trend = output.trend.as_ref().ok_or_else(|| {
        AppError::Validation(format!(
            "trend needs at least 2 years, got {}",
            output.years.len()
        ))
    })?;
    println!("year,aggregate_intensity,denominator");
    for (point, y) in trend.points.iter().zip(&output.years) {
        println!("{},{},{}", point.0, point.1, y.aggregate_basis.as_str());
    }
    println!(
        "percent change {} to {}: {:.1}%",
        trend.points.first().unwrap().0,
        trend.points.last().unwrap().0,
        trend.percent_change
    );
    Ok(())
}

fn cmd_run(config_path: &Path, format: Option<String>, out: PathBuf) -> Result<()> {
    let config = RunConfig::load(config_path)?;
    let format = match format {
        Some(f) => f.parse::<ReportFormat>()?,
        None => config.format,
    };
    let output = run_pipeline(&config)?;
    let files = render_reports(&output, format, &out)?;
    for y in &output.years {
        println!(
            "year {}: {} sectors, uniform price {} ktoe/{}, intermediate share {:.1}%",
            y.year,
            y.table.len(),
            y.prices.uniform,
            output.currency_unit,
            100.0 * y.intermediate_share
        );
    }
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { config } => cmd_validate(config),
        Command::Intensities { config } => cmd_intensities(config),
        Command::Rank { config, top } => cmd_rank(config, *top),
        Command::Trend { config } => cmd_trend(config),
        Command::Run {
            config,
            format,
            out,
        } => cmd_run(config, format.clone(), out.clone()),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
