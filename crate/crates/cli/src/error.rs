use thiserror::Error;

/// Failures of a CLI invocation, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] shirshov_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use shirshov_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Parse(_) => 3,
            CliError::Core(e) => match e {
                E::BudgetExceeded(_) => 4,
                E::MalformedScalar(_)
                | E::ZeroDenominator(_)
                | E::NonInvertible(..)
                | E::NotPrime(_)
                | E::NotRegular(_)
                | E::InvalidWord(_) => 3,
                _ => 2,
            },
        }
    }
}
