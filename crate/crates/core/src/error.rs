use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter `{name}` out of range: {reason}")]
    Parameter { name: String, reason: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    /// A linear solve whose residual exceeded tolerance. Cannot happen for
    /// validated input, but is reported rather than silently returned.
    #[error("numerical failure: residual {residual:e} exceeds {tolerance:e}")]
    Numerical { residual: f64, tolerance: f64 },

    #[error("unsupported variant: {0}")]
    Unsupported(String),

    #[error(
        "no reversal witness for n = {n} at gamma = {gamma}; the welfare-loss region is empty \
         on the search grid, try a larger gamma"
    )]
    NoWitness { n: usize, gamma: f64 },

    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },

    #[error("simulation configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name: name.into(),
            reason: reason.into(),
        }
    }
}
