//! Eigenvalue branches of the Dirac operator on a ball and the mapping
//! degrees of its semi-quantum counterpart.
//!
//! * [`radial`] builds the regular radial profiles in every regime.
//! * [`dispersion`] turns the boundary conditions into residuals of E.
//! * [`branches`] finds roots, continues them in μ and counts spectral flow.
//! * [`semiq`] works with the 4×4 momentum-space Hamiltonian and its S³ maps.
//! * [`symmetry`] checks the discrete symmetries and their consequences.
//!
//! Data-parallel work (root sets over a μ grid, grid sums) goes through
//! [`exec`], which uses rayon when the `parallel` feature is on and plain
//! iteration otherwise. Results are identical either way.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod branches;
pub mod dispersion;
pub mod exec;
pub mod radial;
pub mod semiq;
pub mod symmetry;

mod error;

pub use error::{CoreError, Result};
pub use exec::Exec;

pub use diracband_sector::{AngularSector, BoundaryCondition, ProblemSpec, SpinorType};
