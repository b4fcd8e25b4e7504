//! Error type shared by every subcommand.

use std::fmt;

/// Failure that aborts an invocation with a usage exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-range input.
    Input(String),
    /// File input or output failed.
    Io(std::io::Error),
    /// A computation could not run at the requested size.
    Engine(String),
}

impl CliError {
    /// Input error from any displayable message.
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }

    /// Engine error from any displayable message.
    pub fn engine(message: impl Into<String>) -> Self {
        CliError::Engine(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(e) => write!(f, "io: {e}"),
            CliError::Engine(m) => write!(f, "engine: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
