//! Half-integer order Bessel kernel.
//!
//! Everything here works with orders ν = n + ½, which is all the radial
//! problems on the ball ever need. `J_ν` is seeded from the closed forms for
//! ν = ±½ and carried by three-term recurrence (Miller's backward scheme when
//! the argument is below the order); `I_ν` uses a continued fraction for the
//! ratio at the top order and a downward recurrence normalized against the
//! closed form for ν = ½. Ratios of modified functions are always formed
//! from exponentially scaled values so nothing overflows.

mod dd;
mod gamma;
mod modified;
mod order;
mod regular;
mod series;
mod zeros;

pub use gamma::gamma_half;
pub use modified::{bessel_i, bessel_i_ratio, bessel_i_scaled};
pub use order::HalfIntOrder;
pub use regular::{bessel_j, bessel_j_pair};
pub use series::{bessel_ip, bessel_jp, entire_h, entire_h_pair_scaled};
pub use zeros::bessel_zeros;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("argument {0} outside the domain x > 0")]
    Domain(f64),
    #[error("invalid half-integer order 2ν = {0} (must be odd and positive)")]
    InvalidOrder(i64),
    #[error("I_ν({0}) overflows the f64 exponent range; use the scaled form")]
    Overflow(f64),
}

pub type Result<T> = std::result::Result<T, SpecfunError>;
