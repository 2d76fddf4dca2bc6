//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CombustionError>;

#[derive(Debug, Error)]
pub enum CombustionError {
    /// Mechanism file syntax error with 1-based line and column.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Structurally invalid mechanism (unknown species, element imbalance, ...).
    #[error("invalid mechanism: {0}")]
    InvalidMechanism(String),

    /// State or configuration violates a documented invariant.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numeric evaluation produced a non-finite result.
    #[error("non-finite result in {context}: {detail}")]
    NonFinite { context: String, detail: String },

    /// Stiff integrator could not proceed.
    #[error("integration failed at t = {time:.6e} s: {message}")]
    IntegrationFailure { time: f64, message: String },

    /// Flame run ended in a distinct failure mode.
    #[error("flame run failed: {0}")]
    Flame(FlameFailure),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Distinct 1D flame failure modes; each maps to its own CLI exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlameFailure {
    /// Ignition kernel died before a self-sustaining front formed.
    Extinction,
    /// Front swept downstream out of the domain.
    BlowOff,
    /// Front reached the inlet.
    Flashback,
}

impl std::fmt::Display for FlameFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FlameFailure::Extinction => write!(f, "extinction"),
            FlameFailure::BlowOff => write!(f, "blow-off"),
            FlameFailure::Flashback => write!(f, "flashback"),
        }
    }
}

impl CombustionError {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        CombustionError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
