use bkm_core::BkmError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid config file {path}: {source}")]
    Config { path: String, source: toml::de::Error },
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("numerical failure: {0}")]
    Numerical(BkmError),
}

impl BenchError {
    /// Process exit status: 1 for usage and input errors, 2 for numerical
    /// failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Numerical(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;

pub(crate) fn usage(e: BkmError) -> BenchError {
    BenchError::Usage(e.to_string())
}

pub(crate) fn numerical(e: BkmError) -> BenchError {
    BenchError::Numerical(e)
}
