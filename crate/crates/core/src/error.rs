//! Crate-wide error type.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("time {t} outside the coefficient interval [{lo}, {hi}]")]
    OutsideInterval { t: f64, lo: f64, hi: f64 },
    #[error("midpoint matrix singular at t = {t}; retry with a step below {suggested_h}")]
    SingularStep { t: f64, suggested_h: f64 },
    #[error("Picard iteration stalled after {iterations} sweeps, last correction {last_correction}; shorten the window and compose")]
    PicardDiverged {
        iterations: usize,
        last_correction: f64,
    },
    #[error("coefficient positivity violated: {which} = {value} at t = {t}, xi = {position}")]
    PositivityViolation {
        which: &'static str,
        t: f64,
        position: f64,
        value: f64,
    },
    #[error("moving object leaves the safety margin at t = {t} (center {center})")]
    SafetyMargin { t: f64, center: f64 },
    #[error("trajectory carries no midpoint samples; re-simulate with ledger sampling enabled")]
    MissingMidpoints,
    #[error("signal grid misaligned with the system grid: {0}")]
    GridMisaligned(&'static str),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;
