use diracband_sector::SectorError;
use diracband_specfun::SpecfunError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("{what} requires {requirement}, got E = {energy}, μ = {mu}")]
    Regime { what: &'static str, requirement: &'static str, energy: f64, mu: f64 },
    #[error("residual has no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("root solver stopped after {iterations} iterations with residual {residual:e} at {x}")]
    MaxIterations { iterations: usize, x: f64, residual: f64 },
    #[error("invalid μ grid: {0}")]
    InvalidGrid(String),
    #[error("branch {branch_id} touches {line} near μ = {mu} without crossing it")]
    AmbiguousCrossing { branch_id: usize, line: &'static str, mu: f64 },
    #[error("k = ({k0}, {k1}, {k2}) is an exceptional point of this eigenvector gauge at μ = {mu}", k0 = k[0], k1 = k[1], k2 = k[2])]
    ExceptionalPoint { k: [f64; 3], mu: f64 },
    #[error("K_μ(k) is degenerate at k = 0, μ = 0")]
    DegenerateOrigin,
    #[error("the mapping degree is undefined at μ = 0")]
    UndefinedDegree,
    #[error("grid step {step} is too coarse for μ = {mu}")]
    GridTooCoarse { step: f64, mu: f64 },
    #[error("quadrature error estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    NonConvergence { estimate: f64, tolerance: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Sector(#[from] SectorError),
}

pub type Result<T> = std::result::Result<T, CoreError>;
