//! CLI-level errors and the exit-code partition.
//!
//! Exit codes: 0 success, 2 usage (bad flags/values at the invocation
//! level — clap's own parse errors also exit 2), 3 I/O (missing or
//! unreadable/unparseable files), 4 domain (the library rejected the
//! computation; its message is passed through verbatim).

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: flag/value problems detectable before any
    /// computation. Exit 2.
    Usage(String),
    /// File-system or file-format trouble. Exit 3.
    Io(String),
    /// The library refused the inputs or the computation failed a
    /// contract. Exit 4.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) | CliError::Domain(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<casimir_liv::Error> for CliError {
    fn from(err: casimir_liv::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
