use std::path::PathBuf;

use forgetsize_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Problem { line: usize, message: String },

    #[error("{stage}: {source}")]
    Parse {
        stage: &'static str,
        #[source]
        source: CoreError,
    },

    #[error("{stage}: {source}")]
    Resource {
        stage: &'static str,
        #[source]
        source: CoreError,
    },

    #[error("{0} expectation(s) not met")]
    Mismatch(usize),

    #[error("{0} reduction check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    /// Sorts a library error raised during `stage` into input or resource
    /// trouble.
    pub fn from_core(stage: &'static str, source: CoreError) -> CliError {
        match source {
            CoreError::ResourceLimit { .. }
            | CoreError::SearchLimit { .. }
            | CoreError::EnumerationCap { .. }
            | CoreError::IterationCap(_) => CliError::Resource { stage, source },
            _ => CliError::Parse { stage, source },
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Problem { .. } | CliError::Parse { .. } => 2,
            CliError::Resource { .. } => 3,
            CliError::Mismatch(_) | CliError::ChecksFailed(_) => 4,
        }
    }
}
