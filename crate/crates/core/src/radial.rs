//! Regular radial solutions (f, g) of the sector-reduced Dirac system.
//!
//! For the Φ layout the radial pair obeys
//!   f' − ℓf/r = (E+μ)g,   g' + (ℓ+2)g/r = (μ−E)f,
//! and for the Ψ layout
//!   f' + (ℓ+2)f/r = (E+μ)g,   g' − ℓg/r = (μ−E)f.
//!
//! Three families of profiles are provided:
//!
//! * the Bessel-form profiles with the explicit √(μ±E) prefactors, split by
//!   the signs of μ (edge) or E (bulk);
//! * the polynomial profiles on the lines |E| = |μ|;
//! * the reduced profiles, written with the entire function
//!   H_ν(w) = Σ (w/4)^n / (n! Γ(ν+n+1)) in w = (μ²−E²)r². They are finite
//!   and nonzero everywhere, including E → ±μ and μ → 0, and coincide with
//!   the other two families up to a constant factor.
//!
//! Bessel-form values are evaluated through I_ν(x)/√x = x^{ν−½}H_ν(x²)/2^ν
//! and J_ν(x)/√x = x^{ν−½}H_ν(−x²)/2^ν, which are regular at r = 0.

use diracband_sector::{gauss_legendre, AngularSector, SpinorType};
use diracband_specfun::{entire_h, HalfIntOrder};
use serde::Serialize;

use crate::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    Edge,
    Bulk,
    Critical,
}

/// Which of the two lines |E| = |μ| a critical profile sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CriticalCase {
    EEqMinusMu,
    EEqPlusMu,
}

/// How the overall constant of a profile was fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Normalization {
    /// Bessel form with the √(μ±E) or √(E±μ) prefactors and 1/√(κr).
    Prefactor,
    /// Entire-function form, regular component starting as r^ℓ/Γ(ℓ+3/2).
    Reduced,
    /// Polynomial critical profile with integer leading coefficients.
    Polynomial,
    /// Unit L² norm on the ball, ∫₀^R (f² + g²) r² dr = 1.
    UnitL2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Shape {
    /// component_i(r) = coef_i · x^{ν_i−½} H_{ν_i}(±x²) / 2^{ν_i}, x = κr.
    Bessel { kappa: f64, modified: bool, coef: [f64; 2], orders: [HalfIntOrder; 2] },
    /// regular = r^ℓ H_a(w r²), partner = c r^{ℓ+1} H_b(w r²).
    Entire { w: f64, partner: f64 },
    /// component_i(r) = coef_i r^{power_i}.
    Polynomial { coef: [f64; 2], power: [i32; 2] },
}

/// A regular radial pair (f, g) for one sector at fixed (E, μ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProfile {
    pub regime: Regime,
    pub sector: AngularSector,
    pub energy: f64,
    pub mu: f64,
    pub normalization: Normalization,
    shape: Shape,
    scale: f64,
}

/// Tolerance on ||E| − |μ|| below which the Bessel forms are replaced by the
/// reduced form.
const DEGENERATE: f64 = 1e-8;

fn near_line(energy: f64, mu: f64) -> bool {
    (energy.abs() - mu.abs()).abs() < DEGENERATE * mu.abs().max(1.0)
}

fn orders(sector: &AngularSector) -> (HalfIntOrder, HalfIntOrder) {
    let a = HalfIntOrder::ell_plus_half(sector.ell());
    (a, a.next())
}

/// Classifies (E, μ) with a relative tolerance for the critical lines.
pub fn classify(energy: f64, mu: f64, tol: f64) -> Regime {
    let d = energy.abs() - mu.abs();
    if d.abs() <= tol * mu.abs().max(1.0) {
        Regime::Critical
    } else if d < 0.0 {
        Regime::Edge
    } else {
        Regime::Bulk
    }
}

impl RadialProfile {
    /// (f(r), g(r)).
    pub fn eval(&self, r: f64) -> Result<(f64, f64)> {
        let ell = self.sector.ell() as i32;
        let (f, g) = match self.shape {
            Shape::Bessel { kappa, modified, coef, orders } => {
                let x = kappa * r;
                let w = if modified { x * x } else { -x * x };
                let mut out = [0.0; 2];
                for i in 0..2 {
                    let nu = orders[i];
                    let h = entire_h(nu, w)?;
                    out[i] = coef[i] * x.powi(nu.spherical_index() as i32) * h / 2f64.powf(nu.nu());
                }
                (out[0], out[1])
            }
            Shape::Entire { w, partner } => {
                let (a, b) = orders(&self.sector);
                let s = w * r * r;
                let regular = r.powi(ell) * entire_h(a, s)?;
                let other = partner * r.powi(ell + 1) * entire_h(b, s)?;
                match self.sector.spinor() {
                    SpinorType::Phi => (regular, other),
                    SpinorType::Psi => (other, regular),
                }
            }
            Shape::Polynomial { coef, power } => {
                let p = |c: f64, k: i32| if c == 0.0 { 0.0 } else { c * r.powi(k) };
                (p(coef[0], power[0]), p(coef[1], power[1]))
            }
        };
        Ok((self.scale * f, self.scale * g))
    }

    pub fn eval_grid(&self, grid: &[f64]) -> Result<Vec<(f64, f64)>> {
        grid.iter().map(|&r| self.eval(r)).collect()
    }

    /// ∫₀^R (f² + g²) r² dr by 64-point Gauss–Legendre.
    pub fn l2_norm_sqr(&self, radius: f64) -> Result<f64> {
        let (x, w) = gauss_legendre(64)?;
        let mut acc = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            let r = 0.5 * radius * (xi + 1.0);
            let (f, g) = self.eval(r)?;
            acc += wi * (f * f + g * g) * r * r;
        }
        Ok(0.5 * radius * acc)
    }

    /// The same profile scaled to unit L² norm on the ball of radius R.
    pub fn normalized(&self, radius: f64) -> Result<Self> {
        let n = self.l2_norm_sqr(radius)?.sqrt();
        if !(n > 0.0 && n.is_finite()) {
            return Err(CoreError::InvalidParameter(format!("profile norm {n} cannot be normalized")));
        }
        Ok(Self { scale: self.scale / n, normalization: Normalization::UnitL2, ..*self })
    }

    /// Largest relative residual of the first-order system at the given radii,
    /// with derivatives from a five-point stencil of step 10⁻³r. Each residual
    /// is divided by the sum of the magnitudes of the terms involved.
    pub fn ode_residual(&self, grid: &[f64]) -> Result<f64> {
        let l = self.sector.ell() as f64;
        let (e, m) = (self.energy, self.mu);
        let mut worst: f64 = 0.0;
        for &r in grid {
            let h = 1e-3 * r;
            let p2 = self.eval(r + 2.0 * h)?;
            let p1 = self.eval(r + h)?;
            let m1 = self.eval(r - h)?;
            let m2 = self.eval(r - 2.0 * h)?;
            let d = |a: f64, b: f64, c: f64, dd: f64| (-a + 8.0 * b - 8.0 * c + dd) / (12.0 * h);
            let df = d(p2.0, p1.0, m1.0, m2.0);
            let dg = d(p2.1, p1.1, m1.1, m2.1);
            let (f, g) = self.eval(r)?;
            let (kf, kg) = match self.sector.spinor() {
                SpinorType::Phi => (-l, l + 2.0),
                SpinorType::Psi => (l + 2.0, -l),
            };
            let t1 = [df, kf * f / r, (e + m) * g];
            let t2 = [dg, kg * g / r, (m - e) * f];
            let r1 = (t1[0] + t1[1] - t1[2]).abs();
            let r2 = (t2[0] + t2[1] - t2[2]).abs();
            let s1: f64 = t1.iter().map(|v| v.abs()).sum();
            let s2: f64 = t2.iter().map(|v| v.abs()).sum();
            // (|f| + |g|)/r keeps the scale meaningful when every term of
            // the system vanishes, e.g. the constant ℓ = 0 zero mode.
            let scale = (s1 + s2 + (f.abs() + g.abs()) / r).max(f64::MIN_POSITIVE);
            worst = worst.max((r1 + r2) / scale);
        }
        Ok(worst)
    }
}

/// 200 logarithmically spaced radii on [R/100, R].
pub fn check_grid(radius: f64) -> Vec<f64> {
    let n = 200;
    let (a, b) = ((radius / 100.0).ln(), radius.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// The regular solution at any (E, μ) in reduced form.
///
/// Φ: (r^ℓ H_a, (μ−E)/2 · r^{ℓ+1} H_b); Ψ: ((μ+E)/2 · r^{ℓ+1} H_b, r^ℓ H_a),
/// with a = ℓ+½, b = ℓ+3/2 and argument (μ²−E²)r².
pub fn regular_solution(sector: &AngularSector, energy: f64, mu: f64) -> RadialProfile {
    let partner = match sector.spinor() {
        SpinorType::Phi => 0.5 * (mu - energy),
        SpinorType::Psi => 0.5 * (mu + energy),
    };
    RadialProfile {
        regime: classify(energy, mu, DEGENERATE),
        sector: *sector,
        energy,
        mu,
        normalization: Normalization::Reduced,
        shape: Shape::Entire { w: (mu - energy) * (mu + energy), partner },
        scale: 1.0,
    }
}

fn regime_error(what: &'static str, requirement: &'static str, energy: f64, mu: f64) -> CoreError {
    CoreError::Regime { what, requirement, energy, mu }
}

fn bessel(sector: &AngularSector, energy: f64, mu: f64, regime: Regime, modified: bool, kappa: f64, coef: [f64; 2]) -> RadialProfile {
    let (a, b) = orders(sector);
    let orders = match sector.spinor() {
        SpinorType::Phi => [a, b],
        SpinorType::Psi => [b, a],
    };
    RadialProfile {
        regime,
        sector: *sector,
        energy,
        mu,
        normalization: Normalization::Prefactor,
        shape: Shape::Bessel { kappa, modified, coef, orders },
        scale: 1.0,
    }
}

/// Edge profile (|E| < |μ|) from I_{ℓ+½}, I_{ℓ+3/2} with the √(μ±E) prefactors.
///
/// Φ: (±√|μ+E| I_{ℓ+½}, √|μ−E| I_{ℓ+3/2})/√(εr), Ψ: (±√|μ+E| I_{ℓ+3/2},
/// √|μ−E| I_{ℓ+½})/√(εr), the upper sign for μ > 0. Within 10⁻⁸ of the
/// lines |E| = |μ| the reduced form is returned instead.
pub fn edge_profile(sector: &AngularSector, energy: f64, mu: f64) -> Result<RadialProfile> {
    if !(energy.abs() < mu.abs()) {
        return Err(regime_error("edge profile", "|E| < |μ|", energy, mu));
    }
    if near_line(energy, mu) {
        let mut p = regular_solution(sector, energy, mu);
        p.regime = Regime::Edge;
        return Ok(p);
    }
    let sp = (mu + energy).abs().sqrt();
    let sm = (mu - energy).abs().sqrt();
    let top = if mu > 0.0 { sp } else { -sp };
    Ok(bessel(sector, energy, mu, Regime::Edge, true, sp * sm, [top, sm]))
}

/// Bulk profile (|E| > |μ|) from J_{ℓ+½}, J_{ℓ+3/2}.
///
/// Φ: E > 0 gives (−√(E+μ) J_{ℓ+½}, √(E−μ) J_{ℓ+3/2})/√(βr), E < 0 gives
/// (√|E+μ| J_{ℓ+½}, √|E−μ| J_{ℓ+3/2})/√(βr). Ψ: E > 0 gives
/// (√(E+μ) J_{ℓ+3/2}, √(E−μ) J_{ℓ+½})/√(βr), E < 0 gives
/// (−√|E+μ| J_{ℓ+3/2}, √|E−μ| J_{ℓ+½})/√(βr).
pub fn bulk_profile(sector: &AngularSector, energy: f64, mu: f64) -> Result<RadialProfile> {
    if !(energy.abs() > mu.abs()) {
        return Err(regime_error("bulk profile", "|E| > |μ|", energy, mu));
    }
    if near_line(energy, mu) {
        let mut p = regular_solution(sector, energy, mu);
        p.regime = Regime::Bulk;
        return Ok(p);
    }
    let sp = (energy + mu).abs().sqrt();
    let sm = (energy - mu).abs().sqrt();
    let flip = match sector.spinor() {
        SpinorType::Phi => energy > 0.0,
        SpinorType::Psi => energy < 0.0,
    };
    let top = if flip { -sp } else { sp };
    Ok(bessel(sector, energy, mu, Regime::Bulk, false, sp * sm, [top, sm]))
}

/// Polynomial profile on |E| = |μ|.
///
/// Φ, E = −μ: ((2ℓ+3)r^ℓ, 2μr^{ℓ+1});  Φ, E = +μ: (r^ℓ, 0);
/// Ψ, E = +μ: (2μr^{ℓ+1}, (2ℓ+3)r^ℓ);  Ψ, E = −μ: (0, r^ℓ).
pub fn critical_profile(sector: &AngularSector, case: CriticalCase, mu: f64) -> RadialProfile {
    let l = sector.ell() as i32;
    let k = 2.0 * l as f64 + 3.0;
    let (coef, power, energy) = match (sector.spinor(), case) {
        (SpinorType::Phi, CriticalCase::EEqMinusMu) => ([k, 2.0 * mu], [l, l + 1], -mu),
        (SpinorType::Phi, CriticalCase::EEqPlusMu) => ([1.0, 0.0], [l, 0], mu),
        (SpinorType::Psi, CriticalCase::EEqPlusMu) => ([2.0 * mu, k], [l + 1, l], mu),
        (SpinorType::Psi, CriticalCase::EEqMinusMu) => ([0.0, 1.0], [0, l], -mu),
    };
    RadialProfile {
        regime: Regime::Critical,
        sector: *sector,
        energy,
        mu,
        normalization: Normalization::Polynomial,
        shape: Shape::Polynomial { coef, power },
        scale: 1.0,
    }
}

/// Reduced edge state: the Bessel-form edge profile with its vanishing
/// scalar factors removed. Finite as E → ±μ and as (μ, E) → (0, 0), where
/// it tends to (r^ℓ/Γ(ℓ+3/2), 0) for Φ and (0, r^ℓ/Γ(ℓ+3/2)) for Ψ.
pub fn reduced_edge_state(sector: &AngularSector, energy: f64, mu: f64) -> Result<RadialProfile> {
    if !(energy.abs() <= mu.abs()) {
        return Err(regime_error("reduced edge state", "|E| ≤ |μ|", energy, mu));
    }
    let mut p = regular_solution(sector, energy, mu);
    p.regime = Regime::Edge;
    Ok(p)
}

/// Reduced bulk state, the J-form analogue of [`reduced_edge_state`].
pub fn reduced_bulk_state(sector: &AngularSector, energy: f64, mu: f64) -> Result<RadialProfile> {
    if !(energy.abs() >= mu.abs()) {
        return Err(regime_error("reduced bulk state", "|E| ≥ |μ|", energy, mu));
    }
    let mut p = regular_solution(sector, energy, mu);
    p.regime = Regime::Bulk;
    Ok(p)
}

/// Sup-norm distance between `profile` and `reference` on the grid after
/// rescaling `profile` by the least-squares optimal constant.
pub fn matched_sup_distance(profile: &[(f64, f64)], reference: &[(f64, f64)]) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for (p, q) in profile.iter().zip(reference) {
        num += p.0 * q.0 + p.1 * q.1;
        den += p.0 * p.0 + p.1 * p.1;
    }
    let s = if den > 0.0 { num / den } else { 0.0 };
    profile
        .iter()
        .zip(reference)
        .map(|(p, q)| (s * p.0 - q.0).abs().max((s * p.1 - q.1).abs()))
        .fold(0.0, f64::max)
}
