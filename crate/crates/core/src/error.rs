use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, FdiError>;

#[derive(Debug, Error)]
pub enum FdiError {
    /// Malformed input text. `line` is 1-based; 0 when the error is not tied to a line.
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    /// A value parsed fine but breaks an invariant.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("aircraft {aircraft_id}: {source}")]
    Aircraft {
        aircraft_id: String,
        #[source]
        source: Box<FdiError>,
    },
}

impl FdiError {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        FdiError::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn parse(source_name: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        FdiError::Parse {
            source_name: source_name.into(),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        FdiError::Io {
            path: path.into(),
            source,
        }
    }

    /// True when the root cause is an I/O failure rather than bad data.
    pub fn is_io(&self) -> bool {
        match self {
            FdiError::Io { .. } => true,
            FdiError::Aircraft { source, .. } => source.is_io(),
            _ => false,
        }
    }

    /// Process exit code used by the `fdi` binary: 2 for I/O errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_io() {
            2
        } else {
            1
        }
    }
}

pub(crate) fn ensure(cond: bool, field: &str, message: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(FdiError::validation(field, message()))
    }
}
