//! Positive zeros of J_ν.

use crate::regular::{bessel_j_minus_half, spherical_sequence};
use crate::HalfIntOrder;

const SCAN_STEP: f64 = 0.25;

/// The first `count` positive zeros j_{ν,1} < j_{ν,2} < … of J_ν.
pub fn bessel_zeros(nu: HalfIntOrder, count: usize) -> Vec<f64> {
    let j = |x: f64| spherical_sequence(nu.spherical_index(), x)[nu.spherical_index()];
    let mut out = Vec::with_capacity(count);
    // j_{ν,1} > ν, so the scan can start there.
    let mut a = nu.nu().max(0.25);
    let mut fa = j(a);
    while out.len() < count {
        let b = a + SCAN_STEP;
        let fb = j(b);
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            out.push(refine(nu, a, b, fa));
        }
        a = b;
        fa = fb;
    }
    out
}

fn refine(nu: HalfIntOrder, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    let n = nu.spherical_index();
    let j = |x: f64| spherical_sequence(n, x)[n];
    while b - a > 1e-6 {
        let m = 0.5 * (a + b);
        let fm = j(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    let (lo, hi) = (a, b);
    let mut x = 0.5 * (a + b);
    for _ in 0..20 {
        let (jn, jm) = if n == 0 {
            (j(x), bessel_j_minus_half(x))
        } else {
            let seq = spherical_sequence(n, x);
            (seq[n], seq[n - 1])
        };
        let deriv = jm - nu.nu() / x * jn;
        let step = jn / deriv;
        let next = x - step;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    x
}
