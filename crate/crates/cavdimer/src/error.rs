use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag values or an unusable configuration.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cavdimer_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage errors, 3 when the physics rules the request out (a model
    /// outside its regime, a singular coupling), 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_domain_error() => 3,
            CliError::Usage(_) | CliError::Core(_) | CliError::Json(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}
