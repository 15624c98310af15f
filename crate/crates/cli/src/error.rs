use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] mindist_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for bad input, 3 for an exhausted enumeration budget, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        use mindist_core::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Core(E::BudgetExceeded { .. }) => 3,
            CliError::Core(E::Internal(_) | E::Inconclusive { .. }) => 1,
            CliError::Core(_) => 2,
        }
    }
}
