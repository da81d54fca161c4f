use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lrtables::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("malformed request: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for inputs outside the stable range, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(lrtables::Error::OutsideStableRange { .. }) => 2,
            _ => 1,
        }
    }
}
