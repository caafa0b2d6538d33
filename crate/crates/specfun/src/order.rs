use crate::{Result, SpecfunError};

/// A positive half-integer order ν, stored as the odd integer 2ν.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntOrder {
    two_nu: u32,
}

impl HalfIntOrder {
    pub fn new(two_nu: i64) -> Result<Self> {
        if two_nu <= 0 || two_nu % 2 == 0 || two_nu > u32::MAX as i64 {
            return Err(SpecfunError::InvalidOrder(two_nu));
        }
        Ok(Self { two_nu: two_nu as u32 })
    }

    /// The order ℓ + ½ for a non-negative integer ℓ.
    pub fn ell_plus_half(ell: u32) -> Self {
        Self { two_nu: 2 * ell + 1 }
    }

    pub fn two_nu(self) -> u32 {
        self.two_nu
    }

    pub fn nu(self) -> f64 {
        self.two_nu as f64 / 2.0
    }

    /// Spherical index n with ν = n + ½.
    pub fn spherical_index(self) -> usize {
        (self.two_nu as usize - 1) / 2
    }

    pub fn next(self) -> Self {
        Self { two_nu: self.two_nu + 2 }
    }
}
