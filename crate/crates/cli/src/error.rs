use thiserror::Error;

use implicax_core::ErrorKind;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{location}: {message}")]
    Problem { location: String, message: String },
    #[error(transparent)]
    Core(#[from] implicax_core::Error),
}

impl CliError {
    /// 2 for bad input, 3 for a violated hypothesis, 4 for a failed
    /// internal check.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Problem { .. } => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Hypothesis => 3,
                ErrorKind::Consistency => 4,
            },
        }
    }
}
