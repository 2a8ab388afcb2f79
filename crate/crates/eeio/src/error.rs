//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by callers that need to distinguish
/// "the input could not be read" from "the input was read but is invalid"
/// (the CLI maps these to different exit codes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// IO failures, malformed files, schema/header mismatches.
    InputFormat,
    /// Parsed data that violates an accounting or numerical invariant.
    DataInvalid,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },

    /// Header or layout problems in an input file, with location.
    #[error("{path}: {detail}")]
    Schema { path: String, detail: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("duplicate sector code {code:?}")]
    DuplicateSector { code: String },

    #[error("unknown sector code {code:?} in {context}")]
    UnknownSector { code: String, context: String },

    #[error("sector catalog invalid: {0}")]
    InvalidCatalog(String),

    #[error("negative value {value} for {what} (sector {row:?}, column {column:?})")]
    NegativeValue {
        what: String,
        value: f64,
        row: String,
        column: String,
    },

    #[error("sector {code:?} has nonpositive total output {value}")]
    NonpositiveOutput { code: String, value: f64 },

    #[error("coefficient matrix is not productive: {detail}")]
    NonProductive { detail: String },

    #[error("matrix is singular: {detail}")]
    Singular { detail: String },

    #[error("solve residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("sector {code:?}: output minus imports is {value}, cannot derive an energy price")]
    NonpositiveDenominator { code: String, value: f64 },

    #[error("sector {code:?} is flagged as an energy sector but reports zero energy use")]
    ZeroEnergyUse { code: String },

    #[error("cannot average an empty price list")]
    EmptyPriceList,

    #[error("total energy demand is zero, share undefined")]
    ZeroEnergyDemand,

    #[error("nonpositive denominator {value} for aggregate intensity")]
    NonpositiveAggregate { value: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Io { .. } | Error::Csv { .. } | Error::Schema { .. } => ErrorClass::InputFormat,
            _ => ErrorClass::DataInvalid,
        }
    }
}
