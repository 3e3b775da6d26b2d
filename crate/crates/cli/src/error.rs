use std::fmt;

use zetacont_core::ZetaError;

/// Failure classes with stable exit codes.
#[derive(Debug)]
pub enum CliError {
    /// A verification check failed (exit 1).
    Verify(String),
    /// Bad arguments or a point outside the usable domain (exit 2).
    Usage(String),
    /// Reading or writing a file failed (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verify(m) | CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::Internal(_) => CliError::Verify(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub fn io_error(path: &std::path::Path, e: impl fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}
