//! Library half of the `seqkernel` binary: request validation, evaluation,
//! output formats, b-file comparison and timing runs.

pub mod bench;
pub mod output;
pub mod request;

pub use output::{compare, parse_bfile, render, Format};
pub use request::{compute, OutputRecord, Sequence, SequenceRequest};

/// Exit status for success.
pub const EXIT_OK: u8 = 0;
/// Exit status for malformed or unsupported requests.
pub const EXIT_USAGE: u8 = 1;
/// Exit status when a cross-check or `--compare` finds a discrepancy.
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Builds the worker pool, honouring `SEQKERNEL_THREADS` when set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SEQKERNEL_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("SEQKERNEL_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}
