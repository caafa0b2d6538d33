//! The boundary operator B_μ reduced to a (j, m, layout) sector.
//!
//! In the sector basis (Φ^{j(+)}, Φ^{j(−)}) for the Φ layout, or
//! (Φ^{j(−)}, Φ^{j(+)}) for the Ψ layout, B_μ is a real symmetric 2×2 matrix
//! and γ_r acts as σ₂.

use num_complex::Complex64;

use crate::angular::{apply_sigma_r, spinor_harmonic, HarmonicBranch, TwoSpinorSample};
use crate::{AngularSector, Result, SectorError, SpinorType, SphereQuadrature};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryEigenData {
    pub sector: AngularSector,
    pub mu: f64,
    pub radius: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    /// Unit coefficient vectors in the sector basis.
    pub coeff_plus: [f64; 2],
    pub coeff_minus: [f64; 2],
}

/// −(1/R) times the sector matrix of σ·L and μσ·r.
pub fn boundary_block(sector: &AngularSector, mu: f64, radius: f64) -> [[f64; 2]; 2] {
    let l = sector.ell() as f64;
    let mr = mu * radius;
    let m = match sector.spinor() {
        SpinorType::Phi => [[l, mr], [mr, -(l + 2.0)]],
        SpinorType::Psi => [[-(l + 2.0), mr], [mr, l]],
    };
    let s = -1.0 / radius;
    [[s * m[0][0], s * m[0][1]], [s * m[1][0], s * m[1][1]]]
}

fn unit(v: [f64; 2]) -> [f64; 2] {
    let n = v[0].hypot(v[1]);
    [v[0] / n, v[1] / n]
}

/// Eigenvalues (1 ± √((ℓ+1)² + (μR)²))/R and eigenvectors of the sector block.
///
/// The eigenvectors are written in a form that stays regular at μ = 0, where
/// they reduce to the pure spin-up / spin-down states.
pub fn aps_boundary_eigen(sector: &AngularSector, mu: f64, radius: f64) -> Result<BoundaryEigenData> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(SectorError::InvalidRadius(radius));
    }
    let l = sector.ell() as f64;
    let mr = mu * radius;
    let s = ((l + 1.0).powi(2) + mr * mr).sqrt();
    let big = l + 1.0 + s;
    let (plus, minus) = match sector.spinor() {
        SpinorType::Phi => ([-mr, big], [big, mr]),
        SpinorType::Psi => ([big, -mr], [mr, big]),
    };
    Ok(BoundaryEigenData {
        sector: *sector,
        mu,
        radius,
        lambda_plus: (1.0 + s) / radius,
        lambda_minus: (1.0 - s) / radius,
        coeff_plus: unit(plus),
        coeff_minus: unit(minus),
    })
}

/// The two spinor harmonics that the sector basis multiplies, top then bottom.
fn layout(sector: &AngularSector) -> (HarmonicBranch, HarmonicBranch) {
    match sector.spinor() {
        SpinorType::Phi => (HarmonicBranch::Plus, HarmonicBranch::Minus),
        SpinorType::Psi => (HarmonicBranch::Minus, HarmonicBranch::Plus),
    }
}

/// A sector 4-spinor (a·top, b·bottom) at one angle.
pub fn sector_spinor(
    sector: &AngularSector,
    a: Complex64,
    b: Complex64,
    theta: f64,
    phi: f64,
) -> (TwoSpinorSample, TwoSpinorSample) {
    let (top, bottom) = layout(sector);
    (
        spinor_harmonic(sector, top, theta, phi).scale(a),
        spinor_harmonic(sector, bottom, theta, phi).scale(b),
    )
}

/// γ_r = [[0, −iσ_r], [iσ_r, 0]] on a 4-spinor.
fn gamma_r(u: &TwoSpinorSample, v: &TwoSpinorSample) -> (TwoSpinorSample, TwoSpinorSample) {
    let i = Complex64::i();
    (apply_sigma_r(v).scale(-i), apply_sigma_r(u).scale(i))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExchangeReport {
    /// c with γ_r Φ^{(+)} = c Φ^{(−)}.
    pub constant: Complex64,
    /// Largest deviation of any pointwise ratio from `constant`.
    pub ratio_spread: f64,
    /// ‖B γ_r + γ_r B − (2/R) γ_r‖ in the sector basis.
    pub anticommutator_residual: f64,
    pub passed: bool,
}

/// Checks that γ_r maps the (+) eigenstate of B_μ onto the (−) one, pointwise
/// on the sphere, and the anticommutator defect identity at matrix level.
pub fn gamma_r_exchange_check(
    sector: &AngularSector,
    mu: f64,
    radius: f64,
    angles: &[(f64, f64)],
) -> Result<ExchangeReport> {
    let eig = aps_boundary_eigen(sector, mu, radius)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut constant: Option<Complex64> = None;
    let mut spread: f64 = 0.0;
    for &(theta, phi) in angles {
        let (u, v) = sector_spinor(sector, c(eig.coeff_plus[0]), c(eig.coeff_plus[1]), theta, phi);
        let (gu, gv) = gamma_r(&u, &v);
        let (tu, tv) = sector_spinor(sector, c(eig.coeff_minus[0]), c(eig.coeff_minus[1]), theta, phi);
        let pairs = [(gu.upper, tu.upper), (gu.lower, tu.lower), (gv.upper, tv.upper), (gv.lower, tv.lower)];
        let scale = pairs.iter().map(|p| p.1.norm()).fold(0.0, f64::max);
        for (num, den) in pairs {
            if den.norm() < 1e-3 * scale {
                // compare the tiny component through the cross product instead
                if let Some(k) = constant {
                    spread = spread.max((num - k * den).norm() / scale);
                }
                continue;
            }
            let r = num / den;
            match constant {
                None => constant = Some(r),
                Some(k) => spread = spread.max((r - k).norm()),
            }
        }
    }
    let constant = constant.unwrap_or(Complex64::new(0.0, 0.0));

    let b = boundary_block(sector, mu, radius);
    let i = Complex64::i();
    let g = [[c(0.0), -i], [i, c(0.0)]];
    let mut resid: f64 = 0.0;
    for r in 0..2 {
        for col in 0..2 {
            let mut acc = -g[r][col] * (2.0 / radius);
            for k in 0..2 {
                acc += b[r][k] * g[k][col] + g[r][k] * b[k][col];
            }
            resid = resid.max(acc.norm());
        }
    }
    let passed = constant.norm() > 0.0 && spread <= 1e-10 && resid <= 1e-13 * (1.0 + 1.0 / radius);
    Ok(ExchangeReport { constant, ratio_spread: spread, anticommutator_residual: resid, passed })
}

/// Flux of ψ†γ_rψ through the sphere of radius R for the sector state with
/// radial values (f(R), g(R)).
pub fn boundary_current(
    sector: &AngularSector,
    f_at_r: Complex64,
    g_at_r: Complex64,
    radius: f64,
    quad: &SphereQuadrature,
) -> f64 {
    let density = quad.integrate_real(|theta, phi| {
        let (u, v) = sector_spinor(sector, f_at_r, g_at_r, theta, phi);
        let (gu, gv) = gamma_r(&u, &v);
        (u.inner(&gu) + v.inner(&gv)).re
    });
    density * radius * radius
}
