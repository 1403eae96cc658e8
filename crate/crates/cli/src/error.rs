use dispersia_core::Error;

/// Exit code for invalid scenes or flags.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for numerical non-convergence.
pub const EXIT_NONCONVERGENCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn message(&self) -> String {
        self.to_string()
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_numerical() => EXIT_NONCONVERGENCE,
            _ => EXIT_INVALID,
        }
    }
}
