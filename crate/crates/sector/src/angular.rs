//! Spherical and spinor spherical harmonics and the operators acting on them.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{AngularSector, Result, SectorError};

const FD_STEP: f64 = 1e-5;
const POLE_SIN: f64 = 1e-8;

/// Which of the two spinor harmonics with the same (j, m).
///
/// `Plus` is built from Y_ℓ, `Minus` from Y_{ℓ+1}, with ℓ = j − ½.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HarmonicBranch {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinorSample {
    pub theta: f64,
    pub phi: f64,
    pub upper: Complex64,
    pub lower: Complex64,
}

impl TwoSpinorSample {
    pub fn norm_sqr(&self) -> f64 {
        self.upper.norm_sqr() + self.lower.norm_sqr()
    }

    /// ⟨self, other⟩ pointwise.
    pub fn inner(&self, other: &TwoSpinorSample) -> Complex64 {
        self.upper.conj() * other.upper + self.lower.conj() * other.lower
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { upper: self.upper * c, lower: self.lower * c, ..*self }
    }

    pub fn max_diff(&self, other: &TwoSpinorSample) -> f64 {
        (self.upper - other.upper).norm().max((self.lower - other.lower).norm())
    }
}

/// Fully normalized associated Legendre value p̄_ℓ^m(cos θ), m ≥ 0, without
/// the Condon–Shortley sign, via the standard upward recurrence in degree.
fn legendre_normalized(l: u32, m: u32, theta: f64) -> f64 {
    let (s, x) = theta.sin_cos();
    let mut pmm = 1.0 / (4.0 * PI).sqrt();
    for k in 1..=m {
        let k = k as f64;
        pmm *= ((2.0 * k + 1.0) / (2.0 * k)).sqrt() * s;
    }
    if l == m {
        return pmm;
    }
    let mf = m as f64;
    let mut prev = pmm;
    let mut cur = (2.0 * mf + 3.0).sqrt() * x * pmm;
    for deg in (m + 2)..=l {
        let d = deg as f64;
        let a = ((4.0 * d * d - 1.0) / (d * d - mf * mf)).sqrt();
        let b = (((d - 1.0).powi(2) - mf * mf) / (4.0 * (d - 1.0).powi(2) - 1.0)).sqrt();
        let next = a * (x * cur - b * prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Y^n_ℓ(θ, φ) with the Condon–Shortley phase.
pub fn spherical_harmonic(l: u32, n: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if n.unsigned_abs() > l {
        return Err(SectorError::HarmonicIndex { l, n });
    }
    Ok(harmonic_unchecked(l, n, theta, phi))
}

fn harmonic_unchecked(l: u32, n: i32, theta: f64, phi: f64) -> Complex64 {
    if n.unsigned_abs() > l {
        return Complex64::new(0.0, 0.0);
    }
    let m = n.unsigned_abs();
    let p = legendre_normalized(l, m, theta);
    let ph = Complex64::from_polar(1.0, m as f64 * phi);
    let ym = if m.is_multiple_of(2) { ph * p } else { -ph * p };
    if n >= 0 {
        ym
    } else if m.is_multiple_of(2) {
        ym.conj()
    } else {
        -ym.conj()
    }
}

/// Φ^{j(±)}_m(θ, φ). Only j and m of the sector are read.
pub fn spinor_harmonic(
    sector: &AngularSector,
    branch: HarmonicBranch,
    theta: f64,
    phi: f64,
) -> TwoSpinorSample {
    spinor_at(sector.two_j(), sector.two_m(), branch, theta, phi)
}

fn spinor_at(two_j: u32, two_m: i32, branch: HarmonicBranch, theta: f64, phi: f64) -> TwoSpinorSample {
    let j = two_j as f64 / 2.0;
    let m = two_m as f64 / 2.0;
    let l = (two_j - 1) / 2;
    // orbital indices m ∓ ½
    let n_lo = (two_m - 1) / 2;
    let n_hi = (two_m + 1) / 2;
    let (upper, lower) = match branch {
        HarmonicBranch::Plus => {
            let a = ((j + m) / (2.0 * j)).sqrt();
            let b = ((j - m) / (2.0 * j)).sqrt();
            (
                harmonic_unchecked(l, n_lo, theta, phi) * a,
                harmonic_unchecked(l, n_hi, theta, phi) * b,
            )
        }
        HarmonicBranch::Minus => {
            let a = ((j - m + 1.0) / (2.0 * j + 2.0)).sqrt();
            let b = ((j + m + 1.0) / (2.0 * j + 2.0)).sqrt();
            (
                harmonic_unchecked(l + 1, n_lo, theta, phi) * a,
                -harmonic_unchecked(l + 1, n_hi, theta, phi) * b,
            )
        }
    };
    TwoSpinorSample { theta, phi, upper, lower }
}

/// σ_r at (θ, φ) acting on a two-spinor.
pub fn apply_sigma_r(sample: &TwoSpinorSample) -> TwoSpinorSample {
    let (s, c) = sample.theta.sin_cos();
    let e = Complex64::from_polar(1.0, sample.phi);
    TwoSpinorSample {
        upper: sample.upper * c + sample.lower * e.conj() * s,
        lower: sample.upper * e * s - sample.lower * c,
        ..*sample
    }
}

struct Partials {
    value: TwoSpinorSample,
    d_theta: (Complex64, Complex64),
    d_phi: (Complex64, Complex64),
}

fn partials(sector: &AngularSector, branch: HarmonicBranch, theta: f64, phi: f64) -> Partials {
    let f = |t: f64, p: f64| spinor_harmonic(sector, branch, t, p);
    // fourth-order central stencil
    let h = FD_STEP;
    let stencil = |a: TwoSpinorSample, b: TwoSpinorSample, c: TwoSpinorSample, d: TwoSpinorSample| {
        let comb = |w: Complex64, x: Complex64, y: Complex64, z: Complex64| {
            (-w + x * 8.0 - y * 8.0 + z) / (12.0 * h)
        };
        (comb(a.upper, b.upper, c.upper, d.upper), comb(a.lower, b.lower, c.lower, d.lower))
    };
    Partials {
        value: f(theta, phi),
        d_theta: stencil(
            f(theta + 2.0 * h, phi),
            f(theta + h, phi),
            f(theta - h, phi),
            f(theta - 2.0 * h, phi),
        ),
        d_phi: stencil(
            f(theta, phi + 2.0 * h),
            f(theta, phi + h),
            f(theta, phi - h),
            f(theta, phi - 2.0 * h),
        ),
    }
}

/// σ·L applied by central differences of L₃, L₊, L₋ at each grid point.
pub fn apply_sigma_dot_l(
    sector: &AngularSector,
    branch: HarmonicBranch,
    grid: &[(f64, f64)],
) -> Result<Vec<TwoSpinorSample>> {
    let i = Complex64::i();
    grid.iter()
        .map(|&(theta, phi)| {
            let s = theta.sin();
            if s.abs() < POLE_SIN {
                return Err(SectorError::NearPole(theta));
            }
            let cot = theta.cos() / s;
            let d = partials(sector, branch, theta, phi);
            let e = Complex64::from_polar(1.0, phi);
            // L₃ = −i∂φ, L± = e^{±iφ}(±∂θ + i cot θ ∂φ)
            let l3 = |dp: Complex64| -i * dp;
            let lp = |dt: Complex64, dp: Complex64| e * (dt + i * cot * dp);
            let lm = |dt: Complex64, dp: Complex64| e.conj() * (-dt + i * cot * dp);
            let (ut, vt) = d.d_theta;
            let (up, vp) = d.d_phi;
            Ok(TwoSpinorSample {
                upper: l3(up) + lm(vt, vp),
                lower: lp(ut, up) - l3(vp),
                ..d.value
            })
        })
        .collect()
}

/// J₃ = L₃ + σ₃/2 applied at one point.
pub fn apply_total_j3(
    sector: &AngularSector,
    branch: HarmonicBranch,
    theta: f64,
    phi: f64,
) -> TwoSpinorSample {
    let d = partials(sector, branch, theta, phi);
    let i = Complex64::i();
    TwoSpinorSample {
        upper: -i * d.d_phi.0 + d.value.upper * 0.5,
        lower: -i * d.d_phi.1 - d.value.lower * 0.5,
        ..d.value
    }
}

/// The constant c with iσ₂ Φ^{j(±)}_m* = c Φ^{j(±)}_{−m}.
///
/// Found numerically at a generic angle; |c| = 1.
pub fn time_reversal_phase(sector: &AngularSector, branch: HarmonicBranch) -> Complex64 {
    let (theta, phi) = (0.913, 0.377);
    let a = spinor_at(sector.two_j(), sector.two_m(), branch, theta, phi);
    let b = spinor_at(sector.two_j(), -sector.two_m(), branch, theta, phi);
    // iσ₂ (u, v) = (v, −u)
    let t_upper = a.lower.conj();
    let t_lower = -a.upper.conj();
    if b.upper.norm() >= b.lower.norm() {
        t_upper / b.upper
    } else {
        t_lower / b.lower
    }
}

/// The antipodal point of (θ, φ).
pub fn antipode(theta: f64, phi: f64) -> (f64, f64) {
    (PI - theta, phi + PI)
}
