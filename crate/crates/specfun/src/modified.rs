//! Modified Bessel functions of the first kind at half-integer order.

use std::f64::consts::PI;

use crate::{HalfIntOrder, Result, SpecfunError};

/// I_ν(x) for x > 0. Signals overflow instead of returning infinity.
pub fn bessel_i(nu: HalfIntOrder, x: f64) -> Result<f64> {
    let s = bessel_i_scaled(nu, x)?;
    let v = s * x.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(SpecfunError::Overflow(x))
    }
}

/// e^{-x} I_ν(x) for x > 0.
pub fn bessel_i_scaled(nu: HalfIntOrder, x: f64) -> Result<f64> {
    check_arg(x)?;
    let n = nu.spherical_index();
    let top_ratio = ratio_cf(nu.nu(), x);
    // Downward recurrence I_{μ-1} = (2μ/x) I_μ + I_{μ+1} from ν to ½.
    let mut upper = top_ratio; // I_{ν+1}, relative to I_ν = 1
    let mut cur = 1.0; // I_ν
    let mut top = 1.0; // tracked value of I_ν under rescaling
    for k in (1..=n).rev() {
        let mu = k as f64 + 0.5;
        let lower = 2.0 * mu / x * cur + upper;
        upper = cur;
        cur = lower;
        if cur > 1e250 {
            cur *= 1e-250;
            upper *= 1e-250;
            top *= 1e-250;
        }
    }
    // cur is now proportional to I_{1/2}.
    let i_half_scaled = (2.0 / (PI * x)).sqrt() * (-(-2.0 * x).exp_m1()) / 2.0;
    Ok(i_half_scaled * top / cur)
}

/// I_{ν+1}(x) / I_ν(x), from the continued fraction; never overflows.
pub fn bessel_i_ratio(nu: HalfIntOrder, x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(ratio_cf(nu.nu(), x))
}

fn check_arg(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(SpecfunError::Domain(x))
    }
}

/// I_{ν+1}/I_ν = 1/(b₁ + 1/(b₂ + …)), b_k = 2(ν+k)/x, by modified Lentz.
fn ratio_cf(nu: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..100_000 {
        let b = 2.0 * (nu + k as f64) / x;
        d += b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + 1.0 / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    f
}
