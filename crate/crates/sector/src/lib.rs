//! The angular half of the Dirac problem on a ball.
//!
//! Total angular momentum (j, m) together with the sign of the P operator
//! fixes a two-dimensional sector; inside it every 4-spinor is a pair of
//! radial functions multiplying the spinor harmonics Φ^{j(±)}_m. This crate
//! owns those harmonics, the operator actions σ·L and σ_r on them, the
//! sector-reduced boundary operator B_μ, and the sphere quadrature used to
//! check all of it. Nothing here depends on Bessel functions, so the shooting
//! oracle can sit on top of it without sharing the dispersion code path.

pub mod angular;
pub mod boundary;
pub mod problem;
pub mod quadrature;

pub use angular::{
    apply_sigma_dot_l, apply_sigma_r, apply_total_j3, spherical_harmonic, spinor_harmonic,
    antipode, time_reversal_phase, HarmonicBranch, TwoSpinorSample,
};
pub use boundary::{
    aps_boundary_eigen, boundary_block, boundary_current, gamma_r_exchange_check, sector_spinor,
    BoundaryEigenData, ExchangeReport,
};
pub use problem::{AngularSector, BoundaryCondition, ProblemSpec, SpinorType};
pub use quadrature::{gauss_legendre, SphereQuadrature};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SectorError {
    #[error("2j = {0} is not a positive odd integer")]
    InvalidJ(i64),
    #[error("2m = {two_m} is invalid for 2j = {two_j} (need |m| ≤ j, m half-integer)")]
    InvalidM { two_j: i64, two_m: i64 },
    #[error("spherical harmonic index |n| = {n} exceeds ℓ = {l}")]
    HarmonicIndex { l: u32, n: i32 },
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("sample at θ = {0} is too close to a pole for angular derivatives")]
    NearPole(f64),
    #[error("quadrature order must be at least 1")]
    EmptyQuadrature,
}

pub type Result<T> = std::result::Result<T, SectorError>;
