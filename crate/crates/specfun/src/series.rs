//! The regularized series I^P_ν, J^P_ν and the entire function behind both.
//!
//! H_ν(w) = Σ_n (w/4)^n / (n! Γ(ν+n+1)) is entire in w, with
//! I^P_ν(z) = H_ν(z²) = I_ν(z)/(z/2)^ν and J^P_ν(z) = H_ν(−z²) = J_ν(z)/(z/2)^ν.
//! Working in w keeps the regular radial solutions continuous across the
//! point where the argument switches between real and imaginary.

use crate::dd::Dd;
use crate::{bessel_i_scaled, bessel_j_pair, gamma_half, HalfIntOrder, Result};

const DIRECT_POS_MAX: f64 = 900.0;
const DIRECT_NEG_MAX: f64 = 400.0;

/// H_ν(w) for real w.
pub fn entire_h(nu: HalfIntOrder, w: f64) -> Result<f64> {
    if w >= 0.0 {
        if w <= DIRECT_POS_MAX {
            return Ok(series_positive(nu, w));
        }
        let z = w.sqrt();
        let s = bessel_i_scaled(nu, z)?;
        // e^z s / (z/2)^ν, assembled in logs to delay overflow
        let log = z + s.ln() - nu.nu() * (z / 2.0).ln();
        let v = log.exp();
        if v.is_finite() {
            Ok(v)
        } else {
            Err(crate::SpecfunError::Overflow(z))
        }
    } else if -w <= DIRECT_NEG_MAX {
        Ok(series_alternating(nu, w))
    } else {
        let z = (-w).sqrt();
        let (j, _) = bessel_j_pair(nu, z)?;
        Ok(j / (z / 2.0).powf(nu.nu()))
    }
}

/// I^P_ν(z) = I_ν(z)/(z/2)^ν, continuous at z = 0.
pub fn bessel_ip(nu: HalfIntOrder, z: f64) -> Result<f64> {
    entire_h(nu, z * z)
}

/// J^P_ν(z) = J_ν(z)/(z/2)^ν, continuous at z = 0.
pub fn bessel_jp(nu: HalfIntOrder, z: f64) -> Result<f64> {
    entire_h(nu, -z * z)
}

/// (c·H_ν(w), c·H_{ν+1}(w)) for some c > 0 that keeps both finite.
///
/// Only the direction of the pair is meaningful; boundary residuals are built
/// from it.
pub fn entire_h_pair_scaled(nu: HalfIntOrder, w: f64) -> Result<(f64, f64)> {
    if w.abs() <= DIRECT_NEG_MAX {
        let a = entire_h(nu, w)?;
        let b = entire_h(nu.next(), w)?;
        return Ok((a, b));
    }
    let z = w.abs().sqrt();
    if w > 0.0 {
        // c = e^{-z} (z/2)^ν
        let a = bessel_i_scaled(nu, z)?;
        let b = bessel_i_scaled(nu.next(), z)?;
        Ok((a, b * 2.0 / z))
    } else {
        let (a, b) = bessel_j_pair(nu, z)?;
        Ok((a, b * 2.0 / z))
    }
}

fn series_positive(nu: HalfIntOrder, w: f64) -> f64 {
    let q = w / 4.0;
    let mut term = 1.0 / gamma_half(nu.two_nu() + 2);
    let mut sum = term;
    let a = nu.nu();
    for n in 1..1000 {
        let nf = n as f64;
        term *= q / (nf * (a + nf));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Alternating case, summed in double-double to survive the cancellation
/// (terms reach ~e^z while the sum is O(z^{-ν-½})).
fn series_alternating(nu: HalfIntOrder, w: f64) -> f64 {
    let q = w / 4.0;
    let a = nu.nu();
    let mut term = Dd::from(1.0 / gamma_half(nu.two_nu() + 2));
    let mut sum = term;
    let mut peak = term.abs_f64();
    for n in 1..1000 {
        let nf = n as f64;
        // n(a+n) is an exact half-integer multiple, so the division is clean.
        term = term.mul_f64(q).div_f64(nf * (a + nf));
        sum = sum.add(term);
        peak = peak.max(term.abs_f64());
        if nf > -q && term.abs_f64() < 1e-33 * peak {
            break;
        }
    }
    sum.to_f64()
}
