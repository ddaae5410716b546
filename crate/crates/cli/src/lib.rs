//! Command-line front end: argument types, output records and the commands.

pub mod args;
pub mod commands;
pub mod record;

use std::fmt;

pub use record::OutputRecord;

/// `sysexits`-style codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// The command ran but the verdict was negative under `--expect-fr`.
    pub const NEGATIVE: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(revival_core::Error),
    Io(String, std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            _ => exit::DATA,
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) => e.kind(),
            CliError::Io(..) => "io_error",
        }
    }

    /// `{"error": reason, "message": ...}` for stderr.
    pub fn to_json(&self) -> String {
        serde_json::json!({"error": self.reason(), "message": self.to_string()}).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl From<revival_core::Error> for CliError {
    fn from(e: revival_core::Error) -> Self {
        CliError::Core(e)
    }
}
