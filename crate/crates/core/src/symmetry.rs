//! Discrete symmetries: matrix identities of the momentum-space Hamiltonian,
//! their realization on the 2×2 sector blocks of the boundary operator, and
//! their consequences for computed root sets.

use std::collections::BTreeMap;

use diracband_sector::angular::{time_reversal_phase, HarmonicBranch};
use diracband_sector::{aps_boundary_eigen, boundary_block, AngularSector, SpinorType};
use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::branches::{BranchPoint, StateClass};
use crate::semiq::{identity2, k_matrix, kron, pauli};
use crate::Result;

/// Pass threshold for matrix identities.
pub const MATRIX_TOL: f64 = 1e-12;
/// Pass threshold for root-set comparisons.
pub const SPECTRUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SymmetryName {
    #[serde(rename = "TRS")]
    Trs,
    #[serde(rename = "PHS")]
    Phs,
    Chiral,
    Inversion,
    ParityConjugation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SymmetryTarget {
    SemiQuantumK,
    BoundaryB,
    #[serde(rename = "SpectrumAPS")]
    SpectrumAps,
    SpectrumChiral,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryCheck {
    pub name: SymmetryName,
    pub target: SymmetryTarget,
    /// Which identity, e.g. "(σ₁⊗1)K(σ₁⊗1) = −K".
    pub label: String,
    pub residual: f64,
    pub passed: bool,
}

impl SymmetryCheck {
    fn matrix(name: SymmetryName, target: SymmetryTarget, label: &str, residual: f64) -> Self {
        Self { name, target, label: label.to_string(), residual, passed: residual <= MATRIX_TOL }
    }
}

fn max_abs4(m: &Matrix4<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn max_abs2(m: &Matrix2<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Residual of U·conj(X)·U⁻¹ = s·Y, relative to max(1, ‖Y‖).
fn antiunitary_residual(u: &Matrix4<C64>, x: &Matrix4<C64>, y: &Matrix4<C64>, s: f64) -> f64 {
    let lhs = u * x.conjugate() * u.adjoint();
    max_abs4(&(lhs - y * C64::new(s, 0.0))) / max_abs4(y).max(1.0)
}

fn unitary_residual(u: &Matrix4<C64>, x: &Matrix4<C64>, y: &Matrix4<C64>, s: f64) -> f64 {
    let lhs = u * x * u.adjoint();
    max_abs4(&(lhs - y * C64::new(s, 0.0))) / max_abs4(y).max(1.0)
}

/// (U·conj)² = U·conj(U); returns the residual against ±1 for the sign
/// closest to the computed square, together with that sign.
pub fn antiunitary_square(u: &Matrix4<C64>) -> (f64, f64) {
    let sq = u * u.conjugate();
    let id = Matrix4::<C64>::identity();
    let rp = max_abs4(&(sq - id));
    let rm = max_abs4(&(sq + id));
    if rp <= rm {
        (1.0, rp)
    } else {
        (-1.0, rm)
    }
}

/// All matrix identities of K_μ(k):
///
/// * semi-quantum TRS, PHS and chiral identities;
/// * inversion (σ₃⊗1)K(k)(σ₃⊗1) = K(−k), which is also the parity relation;
/// * the quantum-side TRS and PHS identities, where complex conjugation of
///   the momentum operator sends k to −k, so conj(H(p)) is realized as
///   conj(K(−k));
/// * the squares of the four antiunitary operators involved.
pub fn check_k_symmetries(k: [f64; 3], mu: f64) -> Vec<SymmetryCheck> {
    use SymmetryName::*;
    use SymmetryTarget::SemiQuantumK as T;
    let [s1, s2, s3] = pauli();
    let one = identity2();
    let is2 = s2 * C64::new(0.0, 1.0);
    let km = k_matrix(k, mu);
    let kneg = k_matrix([-k[0], -k[1], -k[2]], mu);

    let trs = kron(&one, &is2);
    let phs = kron(&s1, &is2);
    let chiral = kron(&s1, &one);
    let gamma0 = kron(&s3, &one);
    let trs_q = kron(&s3, &is2);
    let phs_q = kron(&s2, &s2);

    let mut out = vec![
        SymmetryCheck::matrix(Trs, T, "(1⊗iσ₂)conj(K)(1⊗−iσ₂) = K", antiunitary_residual(&trs, &km, &km, 1.0)),
        SymmetryCheck::matrix(Phs, T, "(σ₁⊗iσ₂)conj(K)(σ₁⊗−iσ₂) = −K", antiunitary_residual(&phs, &km, &km, -1.0)),
        SymmetryCheck::matrix(Chiral, T, "(σ₁⊗1)K(σ₁⊗1) = −K", unitary_residual(&chiral, &km, &km, -1.0)),
        SymmetryCheck::matrix(Inversion, T, "(σ₃⊗1)K(k)(σ₃⊗1) = K(−k)", unitary_residual(&gamma0, &km, &kneg, 1.0)),
        SymmetryCheck::matrix(
            Trs,
            T,
            "(σ₃⊗iσ₂)conj(H)(σ₃⊗−iσ₂) = H",
            antiunitary_residual(&trs_q, &kneg, &km, 1.0),
        ),
        SymmetryCheck::matrix(Phs, T, "(σ₂⊗σ₂)conj(H)(σ₂⊗σ₂) = −H", antiunitary_residual(&phs_q, &kneg, &km, -1.0)),
        SymmetryCheck::matrix(Chiral, T, "(σ₁⊗1)H(σ₁⊗1) = −H", unitary_residual(&chiral, &kneg, &kneg, -1.0)),
        SymmetryCheck::matrix(
            ParityConjugation,
            T,
            "(σ₃⊗1)H(p)(σ₃⊗1) = H(−p)",
            unitary_residual(&gamma0, &kneg, &km, 1.0),
        ),
    ];
    for (label, u, expected) in [
        ("((1⊗iσ₂)conj)² = −1", trs, -1.0),
        ("((σ₁⊗iσ₂)conj)² = −1", phs, -1.0),
        ("((σ₃⊗iσ₂)conj)² = −1", trs_q, -1.0),
        ("((σ₂⊗σ₂)conj)² = +1", phs_q, 1.0),
    ] {
        let sq = u * u.conjugate();
        let residual = max_abs4(&(sq - Matrix4::<C64>::identity() * C64::new(expected, 0.0)));
        let name = if label.contains("σ₂⊗σ₂") || label.contains("σ₁⊗iσ₂") { Phs } else { Trs };
        out.push(SymmetryCheck::matrix(name, T, label, residual));
    }
    out
}

fn block_c(sector: &AngularSector, mu: f64, radius: f64) -> Matrix2<C64> {
    let b = boundary_block(sector, mu, radius);
    Matrix2::new(
        C64::new(b[0][0], 0.0),
        C64::new(b[0][1], 0.0),
        C64::new(b[1][0], 0.0),
        C64::new(b[1][1], 0.0),
    )
}

fn swap2() -> Matrix2<C64> {
    Matrix2::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0))
}

/// The B_μ identities on the sector blocks of (j, m).
///
/// In the sector basis a Φ-layout spinor (aΦ^{(+)}, bΦ^{(−)}) is sent by
/// * σ₁⊗1 to the Ψ-layout spinor with coefficients (b, a);
/// * (σ₃⊗iσ₂)·conj to the Φ-layout (m → −m) spinor with coefficients
///   (c₊ā, −c₋b̄);
/// * (σ₂⊗σ₂)·conj to the Ψ-layout (m → −m) spinor with coefficients
///   (−c₋b̄, c₊ā),
///
/// where iσ₂ conj(Φ^{(±)}_m) = c± Φ^{(±)}_{−m}. The phases c± are measured
/// from the spinor harmonics, so the check also covers c₋ = −c₊.
pub fn check_boundary_symmetries(sector: &AngularSector, mu: f64, radius: f64) -> Result<Vec<SymmetryCheck>> {
    use SymmetryName::*;
    use SymmetryTarget::BoundaryB as T;
    let phi_sector = sector.with_spinor(SpinorType::Phi);
    let psi_sector = sector.with_spinor(SpinorType::Psi);
    let b_phi = block_c(&phi_sector, mu, radius);
    let b_psi = block_c(&psi_sector, mu, radius);
    let scale = max_abs2(&b_phi).max(1.0);
    let s = swap2();

    let mut out = Vec::new();
    let chiral = max_abs2(&(s * b_phi * s - b_psi)) / scale;
    out.push(SymmetryCheck::matrix(Chiral, T, "(σ₁⊗1)B(σ₁⊗1) = B on (Φ, Ψ) blocks", chiral));

    let cp = time_reversal_phase(&phi_sector, HarmonicBranch::Plus);
    let cm = time_reversal_phase(&phi_sector, HarmonicBranch::Minus);
    let zero = C64::new(0.0, 0.0);
    // T(v) = D·conj(v), T B T⁻¹ = D·conj(B)·D⁻¹.
    let d_t = Matrix2::new(cp, zero, zero, -cm);
    let trs = max_abs2(&(d_t * b_phi.conjugate() * d_t.adjoint() - b_phi)) / scale;
    out.push(SymmetryCheck::matrix(Trs, T, "(σ₃⊗iσ₂)conj(B)(σ₃⊗−iσ₂) = B on the Φ block", trs));
    let d_p = Matrix2::new(zero, -cm, cp, zero);
    let phs = max_abs2(&(d_p * b_phi.conjugate() * d_p.adjoint() - b_psi)) / scale;
    out.push(SymmetryCheck::matrix(Phs, T, "(σ₂⊗σ₂)conj(B)(σ₂⊗σ₂) = B on (Φ, Ψ) blocks", phs));
    let phase = (cm + cp).norm();
    out.push(SymmetryCheck::matrix(Trs, T, "harmonic phases c₋ = −c₊", phase));

    // Eigen-data: equal eigenvalues, eigenvectors swapped by σ₁.
    let e_phi = aps_boundary_eigen(&phi_sector, mu, radius)?;
    let e_psi = aps_boundary_eigen(&psi_sector, mu, radius)?;
    let ev = (e_phi.lambda_plus - e_psi.lambda_plus).abs().max((e_phi.lambda_minus - e_psi.lambda_minus).abs())
        / e_phi.lambda_plus.abs().max(1.0);
    out.push(SymmetryCheck::matrix(Chiral, T, "B eigenvalues of Φ and Ψ blocks coincide", ev));
    let cross = |u: [f64; 2], v: [f64; 2]| (u[1] * v[1] - u[0] * v[0]).abs();
    let vecs = cross(e_phi.coeff_plus, e_psi.coeff_plus).max(cross(e_phi.coeff_minus, e_psi.coeff_minus));
    out.push(SymmetryCheck::matrix(Chiral, T, "σ₁ maps Φ eigenvectors onto Ψ eigenvectors", vecs));

    // σ₁⊗1 turns the chiral-bag relation at λ into the one at −λ.
    for lambda in [0.1f64, -0.7, 1.3] {
        let (p, q) = ((-lambda).exp(), 1.0);
        let (pr, qr) = ((lambda).exp(), 1.0);
        // swapped boundary pair (q, p) must be parallel to (pr, qr)
        let r = (q * qr - p * pr).abs() / (p.hypot(q) * pr.hypot(qr));
        out.push(SymmetryCheck::matrix(
            Chiral,
            T,
            &format!("σ₁⊗1 maps the chiral bag at λ = {lambda} to −λ"),
            r,
        ));
    }
    Ok(out)
}

/// Distance between two root sets grouped by μ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSetDistance {
    /// Largest |E_a − E_b| over matched pairs.
    pub distance: f64,
    /// (μ, E) of roots without a partner, from either side.
    pub unpaired: Vec<(f64, f64)>,
    pub compared: usize,
}

impl RootSetDistance {
    pub fn matches(&self, tol: f64) -> bool {
        self.unpaired.is_empty() && self.distance <= tol && self.compared > 0
    }
}

fn group(points: &[(f64, f64)]) -> BTreeMap<u64, (f64, Vec<f64>)> {
    let mut out: BTreeMap<u64, (f64, Vec<f64>)> = BTreeMap::new();
    for &(mu, e) in points {
        out.entry((mu + 0.0).to_bits()).or_insert_with(|| (mu, Vec::new())).1.push(e);
    }
    for (_, v) in out.values_mut() {
        v.sort_by(f64::total_cmp);
    }
    out
}

/// Compares two (μ, E) sets at each common μ. For sorted reals, matching
/// in order is the optimal bipartite matching under absolute distance; when
/// the counts differ, the surplus roots on the longer side are the ones that
/// minimize the matched distance and are reported as unpaired.
pub fn root_set_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> RootSetDistance {
    let ga = group(a);
    let gb = group(b);
    let mut distance: f64 = 0.0;
    let mut unpaired = Vec::new();
    let mut compared = 0;
    for (key, (mu, ea)) in &ga {
        let Some((_, eb)) = gb.get(key) else {
            unpaired.extend(ea.iter().map(|&e| (*mu, e)));
            continue;
        };
        let (short, long) = if ea.len() <= eb.len() { (ea, eb) } else { (eb, ea) };
        let (d, skipped) = best_offset_match(short, long);
        distance = distance.max(d);
        compared += short.len();
        unpaired.extend(skipped.into_iter().map(|e| (*mu, e)));
    }
    for (key, (mu, eb)) in &gb {
        if !ga.contains_key(key) {
            unpaired.extend(eb.iter().map(|&e| (*mu, e)));
        }
    }
    RootSetDistance { distance, unpaired, compared }
}

/// Order-preserving matching of `short` into `long` minimizing the largest
/// distance (dynamic programming over skips).
fn best_offset_match(short: &[f64], long: &[f64]) -> (f64, Vec<f64>) {
    let (n, m) = (short.len(), long.len());
    if n == 0 {
        return (0.0, long.to_vec());
    }
    // cost[i][j]: best max-distance matching short[..i] into long[..j]
    let inf = f64::INFINITY;
    let mut cost = vec![vec![inf; m + 1]; n + 1];
    for c in cost[0].iter_mut() {
        *c = 0.0;
    }
    for i in 1..=n {
        for j in i..=m {
            let take = cost[i - 1][j - 1].max((short[i - 1] - long[j - 1]).abs());
            let skip = if j > i { cost[i][j - 1] } else { inf };
            cost[i][j] = take.min(skip);
        }
    }
    let mut skipped = Vec::new();
    let (mut i, mut j) = (n, m);
    while j > 0 {
        if i > 0 && j >= i && cost[i][j] == cost[i - 1][j - 1].max((short[i - 1] - long[j - 1]).abs()) {
            i -= 1;
        } else {
            skipped.push(long[j - 1]);
        }
        j -= 1;
    }
    skipped.reverse();
    (cost[n][m], skipped)
}

fn mirror_pairs(points: &[BranchPoint]) -> Vec<(f64, f64)> {
    points.iter().filter(|p| p.state_class != StateClass::Critical).map(|p| (p.mu, -p.energy)).collect()
}

fn plain_pairs(points: &[BranchPoint]) -> Vec<(f64, f64)> {
    points.iter().filter(|p| p.state_class != StateClass::Critical).map(|p| (p.mu, p.energy)).collect()
}

fn spectrum_check(name: SymmetryName, target: SymmetryTarget, label: &str, d: &RootSetDistance) -> SymmetryCheck {
    let residual = if d.unpaired.is_empty() && d.compared > 0 { d.distance } else { f64::INFINITY };
    SymmetryCheck { name, target, label: label.to_string(), residual, passed: d.matches(SPECTRUM_TOL) }
}

/// APS: the Φ-layout root set at each μ is the negated Ψ-layout root set.
/// Crossing points inserted by refinement sit off the common grid and are
/// left out.
pub fn check_aps_mirror(phi: &[BranchPoint], psi: &[BranchPoint]) -> (SymmetryCheck, RootSetDistance) {
    let d = root_set_distance(&plain_pairs(phi), &mirror_pairs(psi));
    (spectrum_check(SymmetryName::Chiral, SymmetryTarget::SpectrumAps, "(E, P) ↔ (−E, −P)", &d), d)
}

/// Chiral bag: the root set at λ is the negated root set at −λ, with the
/// layouts exchanged.
pub fn check_chiral_reflection(at_lambda: &[BranchPoint], at_minus_lambda: &[BranchPoint]) -> (SymmetryCheck, RootSetDistance) {
    let d = root_set_distance(&plain_pairs(at_lambda), &mirror_pairs(at_minus_lambda));
    (spectrum_check(SymmetryName::Chiral, SymmetryTarget::SpectrumChiral, "spectrum(λ) = −spectrum(−λ)", &d), d)
}

/// Distance between a root set and its own negation; for the chiral bag at
/// λ ≠ 0 this is expected to be far from zero.
pub fn energy_reflection_distance(points: &[BranchPoint]) -> RootSetDistance {
    root_set_distance(&plain_pairs(points), &mirror_pairs(points))
}
