//! Bessel functions of the first kind at half-integer order.

use std::f64::consts::PI;

use crate::{HalfIntOrder, Result, SpecfunError};

/// J_ν(x) for x > 0.
pub fn bessel_j(nu: HalfIntOrder, x: f64) -> Result<f64> {
    check_arg(x)?;
    let seq = spherical_sequence(nu.spherical_index(), x);
    Ok(seq[nu.spherical_index()])
}

/// (J_ν(x), J_{ν+1}(x)) from one recurrence pass.
pub fn bessel_j_pair(nu: HalfIntOrder, x: f64) -> Result<(f64, f64)> {
    check_arg(x)?;
    let n = nu.spherical_index();
    let seq = spherical_sequence(n + 1, x);
    Ok((seq[n], seq[n + 1]))
}

/// J_{-1/2}(x) = √(2/(πx)) cos x; only needed for derivatives at ν = ½.
pub(crate) fn bessel_j_minus_half(x: f64) -> f64 {
    (2.0 / (PI * x)).sqrt() * x.cos()
}

fn check_arg(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(SpecfunError::Domain(x))
    }
}

/// J_{k+½}(x) for k = 0..=n_top.
pub(crate) fn spherical_sequence(n_top: usize, x: f64) -> Vec<f64> {
    let pref = (2.0 / (PI * x)).sqrt();
    let (s, c) = x.sin_cos();
    let j0 = pref * s;
    let j1 = pref * (s / x - c);
    if n_top == 0 {
        return vec![j0];
    }
    if x >= n_top as f64 + 0.5 {
        let mut out = Vec::with_capacity(n_top + 1);
        out.push(j0);
        out.push(j1);
        for k in 1..n_top {
            let next = (2 * k + 1) as f64 / x * out[k] - out[k - 1];
            out.push(next);
        }
        return out;
    }
    miller(n_top, x, j0, j1)
}

/// Backward recurrence from well above both the order and the argument,
/// normalized with Σ (2k+1) j_k(x)² = 1 (j_k the spherical Bessel function).
fn miller(n_top: usize, x: f64, j0: f64, j1: f64) -> Vec<f64> {
    let hi = (n_top as f64).max(x);
    let start = (hi + 20.0 + (40.0 * hi).sqrt()).ceil() as usize;
    let mut t = vec![0.0; start + 2];
    t[start] = 1e-20;
    for k in (1..=start).rev() {
        t[k - 1] = (2 * k + 1) as f64 / x * t[k] - t[k + 1];
        if t[k - 1].abs() > 1e100 {
            for v in t.iter_mut().skip(k - 1) {
                *v *= 1e-100;
            }
        }
    }
    let sum: f64 = t
        .iter()
        .enumerate()
        .map(|(k, v)| (2 * k + 1) as f64 * v * v)
        .sum();
    let mut scale = 1.0 / (PI / (2.0 * x) * sum).sqrt();
    // Fix the overall sign against whichever closed form is better conditioned.
    let sign_ref = if j0.abs() >= j1.abs() { j0 * t[0] } else { j1 * t[1] };
    if sign_ref < 0.0 {
        scale = -scale;
    }
    t.truncate(n_top + 1);
    for v in t.iter_mut() {
        *v *= scale;
    }
    t
}
