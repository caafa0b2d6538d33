use diracband_core::CoreError;
use diracband_oracle::OracleError;
use diracband_sector::SectorError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or input: exit code 2, like clap's own usage errors.
    #[error("{0}")]
    Config(String),
    /// A numerical routine failed: exit code 3.
    #[error("solver failure: {0}")]
    Solver(String),
    /// A branch touches a counting line without crossing it: exit code 4.
    #[error("{0}")]
    AmbiguousCrossing(String),
    /// One or more checks failed; the report has already been written.
    #[error("{0}")]
    CheckFailed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Config(_) | CliError::Csv(_) => 2,
            CliError::Solver(_) | CliError::Io(_) => 3,
            CliError::AmbiguousCrossing(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidGrid(_) | CoreError::InvalidParameter(_) | CoreError::GridTooCoarse { .. } => {
                CliError::Config(e.to_string())
            }
            CoreError::Sector(ref s) => CliError::from(s.clone()),
            CoreError::AmbiguousCrossing { .. } => CliError::AmbiguousCrossing(e.to_string()),
            _ => CliError::Solver(e.to_string()),
        }
    }
}

impl From<SectorError> for CliError {
    fn from(e: SectorError) -> Self {
        match e {
            SectorError::InvalidJ(_) | SectorError::InvalidM { .. } | SectorError::InvalidRadius(_) => {
                CliError::Config(e.to_string())
            }
            _ => CliError::Solver(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Solver(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Solver(e.to_string())
    }
}
