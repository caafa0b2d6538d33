//! The semi-quantum Hamiltonian K_μ(k) = [[μ, −ik·σ], [ik·σ, −μ]] and the
//! maps ℝ³ → S³ ≅ SU(2) built from its spectral projectors.
//!
//! The mapping degree is computed three ways:
//!
//! * analytically, ±½ sgn μ;
//! * by quadrature of the pulled-back S³ area form, evaluated pointwise as
//!   −det[x, ∂₁x, ∂₂x, ∂₃x] from the analytic Jacobian of q±;
//! * from the SU(2) trace three-form tr((h†dh)³) of the off-diagonal block
//!   of the flattened projector, with dh taken by finite differences on a
//!   Cartesian grid.
//!
//! The last two routes never use the closed-form integrand μ/(k²+μ²)²
//! inside the integration region; the trace-form route uses it only for the
//! analytic tail beyond the grid ball.

use std::f64::consts::PI;

use diracband_sector::gauss_legendre;
use nalgebra::{Matrix2, Matrix3, Matrix4, Matrix4x2};
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::{CoreError, Exec, Result};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// The Pauli matrices σ₁, σ₂, σ₃.
pub fn pauli() -> [Matrix2<C64>; 3] {
    [
        Matrix2::new(ZERO, ONE, ONE, ZERO),
        Matrix2::new(ZERO, -I, I, ZERO),
        Matrix2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

pub fn identity2() -> Matrix2<C64> {
    Matrix2::identity()
}

/// Kronecker product a ⊗ b; the first factor acts on the block index.
pub fn kron(a: &Matrix2<C64>, b: &Matrix2<C64>) -> Matrix4<C64> {
    Matrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// k·σ.
pub fn k_dot_sigma(k: [f64; 3]) -> Matrix2<C64> {
    Matrix2::new(C64::new(k[2], 0.0), C64::new(k[0], -k[1]), C64::new(k[0], k[1]), C64::new(-k[2], 0.0))
}

fn norm3(k: [f64; 3]) -> f64 {
    (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt()
}

/// K_μ(k) as a 4×4 matrix.
pub fn k_matrix(k: [f64; 3], mu: f64) -> Matrix4<C64> {
    let s = k_dot_sigma(k);
    let m = C64::new(mu, 0.0);
    let mut out = Matrix4::zeros();
    for r in 0..2 {
        out[(r, r)] = m;
        out[(r + 2, r + 2)] = -m;
        for c in 0..2 {
            out[(r, c + 2)] = -I * s[(r, c)];
            out[(r + 2, c)] = I * s[(r, c)];
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Gauge {
    Up,
    Down,
}

/// K_μ(k) with its two doubly degenerate eigenvalues and projectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiQuantumState {
    pub k: [f64; 3],
    pub mu: f64,
    pub matrix: Matrix4<C64>,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub projector_plus: Matrix4<C64>,
    pub projector_minus: Matrix4<C64>,
}

/// Builds the state at (k, μ); P± = (λ±I + K)/(2λ±).
///
/// At k = 0, μ = 0 all four eigenvalues vanish and the projectors do not
/// exist.
pub fn k_hamiltonian(k: [f64; 3], mu: f64) -> Result<SemiQuantumState> {
    let lambda = (mu * mu + k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
    if lambda == 0.0 {
        return Err(CoreError::DegenerateOrigin);
    }
    let matrix = k_matrix(k, mu);
    let id = Matrix4::<C64>::identity();
    let proj = |l: f64| (id * C64::new(l, 0.0) + matrix) / C64::new(2.0 * l, 0.0);
    Ok(SemiQuantumState {
        k,
        mu,
        matrix,
        lambda_plus: lambda,
        lambda_minus: -lambda,
        projector_plus: proj(lambda),
        projector_minus: proj(-lambda),
    })
}

impl SemiQuantumState {
    pub fn lambda(&self, sign: Sign) -> f64 {
        match sign {
            Sign::Plus => self.lambda_plus,
            Sign::Minus => self.lambda_minus,
        }
    }

    pub fn projector(&self, sign: Sign) -> &Matrix4<C64> {
        match sign {
            Sign::Plus => &self.projector_plus,
            Sign::Minus => &self.projector_minus,
        }
    }

    /// Eigenvalues from a numerical Hermitian eigensolve, ascending.
    pub fn numerical_eigenvalues(&self) -> [f64; 4] {
        let eig = nalgebra::SymmetricEigen::new(self.matrix);
        let mut v = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2], eig.eigenvalues[3]];
        v.sort_by(f64::total_cmp);
        v
    }

    /// Multiplicities of the numerical eigenvalues grouped within `tol`.
    pub fn multiplicities(&self, tol: f64) -> Vec<usize> {
        let v = self.numerical_eigenvalues();
        let mut out = vec![1];
        for w in v.windows(2) {
            if (w[1] - w[0]).abs() <= tol {
                *out.last_mut().expect("non-empty") += 1;
            } else {
                out.push(1);
            }
        }
        out
    }
}

/// Orthonormal frame of the λ± eigenspace in the "up" or "down" gauge.
///
/// up:   (k₃, k₁+ik₂, i(λ−μ), 0)/N, (k₁−ik₂, −k₃, 0, i(λ−μ))/N, N = √(2λ(λ−μ));
/// down: (−i(λ+μ), 0, k₃, k₁+ik₂)/N, (0, −i(λ+μ), k₁−ik₂, −k₃)/N, N = √(2λ(λ+μ)).
pub fn eigenvectors(state: &SemiQuantumState, sign: Sign, gauge: Gauge) -> Result<Matrix4x2<C64>> {
    let l = state.lambda(sign);
    let (k, mu) = (state.k, state.mu);
    // (l − μ)(l + μ) = k², so the smaller factor is taken from the larger
    // one rather than from a cancelling difference.
    let k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    let (lm, lp) = if (l - mu).abs() >= (l + mu).abs() {
        (l - mu, if l - mu == 0.0 { 0.0 } else { k2 / (l - mu) })
    } else {
        (k2 / (l + mu), l + mu)
    };
    let n2 = match gauge {
        Gauge::Up => 2.0 * l * lm,
        Gauge::Down => 2.0 * l * lp,
    };
    if !(n2 > 1e-28 * l * l) {
        return Err(CoreError::ExceptionalPoint { k, mu });
    }
    let n = C64::new(n2.sqrt(), 0.0);
    let kp = C64::new(k[0], k[1]);
    let km = C64::new(k[0], -k[1]);
    let k3 = C64::new(k[2], 0.0);
    let cols = match gauge {
        Gauge::Up => {
            let d = I * lm;
            [[k3, kp, d, ZERO], [km, -k3, ZERO, d]]
        }
        Gauge::Down => {
            let d = -I * lp;
            [[d, ZERO, k3, kp], [ZERO, d, km, -k3]]
        }
    };
    Ok(Matrix4x2::from_fn(|r, c| cols[c][r] / n))
}

/// U with u_down = u_up·U, from U_ab = ⟨u_up,a | u_down,b⟩.
pub fn transition_matrix(state: &SemiQuantumState, sign: Sign) -> Result<Matrix2<C64>> {
    let up = eigenvectors(state, sign, Gauge::Up)?;
    let down = eigenvectors(state, sign, Gauge::Down)?;
    Ok(up.adjoint() * down)
}

/// Q± = K/λ± = 2P± − I.
pub fn q_matrices(state: &SemiQuantumState) -> (Matrix4<C64>, Matrix4<C64>) {
    let q = |l: f64| state.matrix / C64::new(l, 0.0);
    (q(state.lambda_plus), q(state.lambda_minus))
}

/// g = h ⊗ 1 with h = (σ₁ + σ₃)/√2; g = g⁻¹.
pub fn off_diagonalizer() -> Matrix4<C64> {
    let [s1, _, s3] = pauli();
    kron(&((s1 + s3) / C64::new(2f64.sqrt(), 0.0)), &identity2())
}

/// g Q g⁻¹.
pub fn conjugate_off_diagonal(q: &Matrix4<C64>) -> Matrix4<C64> {
    let g = off_diagonalizer();
    g * q * g
}

/// The nonzero block (μ ± ik·σ)/λ± of g Q± g⁻¹: upper-right for Q₊,
/// lower-left for Q₋.
pub fn q_block(state: &SemiQuantumState, sign: Sign) -> Matrix2<C64> {
    let (qp, qm) = q_matrices(state);
    match sign {
        Sign::Plus => conjugate_off_diagonal(&qp).fixed_view::<2, 2>(0, 2).into_owned(),
        Sign::Minus => conjugate_off_diagonal(&qm).fixed_view::<2, 2>(2, 0).into_owned(),
    }
}

/// A point of S³ ⊂ ℂ².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct S3Point {
    pub z1: C64,
    pub z2: C64,
}

impl S3Point {
    /// (x₁+ix₂, x₃+ix₄) ↦ (x₁, x₂, x₃, x₄).
    pub fn to_r4(self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn norm_sqr(self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }
}

fn check_origin(k: [f64; 3], mu: f64) -> Result<f64> {
    let l = (norm3(k).powi(2) + mu * mu).sqrt();
    if l == 0.0 {
        Err(CoreError::DegenerateOrigin)
    } else {
        Ok(l)
    }
}

/// q±(k) = (k₁+ik₂, k₃ ± iμ)/√(k²+μ²).
pub fn map_q(sign: Sign, k: [f64; 3], mu: f64) -> Result<S3Point> {
    let l = check_origin(k, mu)?;
    Ok(S3Point { z1: C64::new(k[0], k[1]) / l, z2: C64::new(k[2], sign.value() * mu) / l })
}

/// The SU(2)-valued block map h±(k) = (μ ± ik·σ)/√(k²+μ²), det h± = 1.
pub fn map_h(sign: Sign, k: [f64; 3], mu: f64) -> Result<Matrix2<C64>> {
    let l = check_origin(k, mu)?;
    Ok((identity2() * C64::new(mu, 0.0) + k_dot_sigma(k) * (I * sign.value())) / C64::new(l, 0.0))
}

/// (k·σ ± iμ)/√(k²+μ²), the block map written with the factor ±i taken
/// out. Unitary with determinant −1; it equals ±i·h∓.
pub fn map_h_rotated(sign: Sign, k: [f64; 3], mu: f64) -> Result<Matrix2<C64>> {
    let l = check_origin(k, mu)?;
    Ok((k_dot_sigma(k) + identity2() * (I * sign.value() * mu)) / C64::new(l, 0.0))
}

/// The rotation G ∈ SO(3) induced by g ∈ SU(2): g(k·σ)g† = (Gk)·σ.
pub fn rotation_from_su2(g: &Matrix2<C64>) -> Matrix3<f64> {
    let s = pauli();
    Matrix3::from_fn(|a, b| 0.5 * (s[a] * g * s[b] * g.adjoint()).trace().re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DegreeMethod {
    Analytic,
    Quadrature,
    TraceForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeReport {
    pub method: DegreeMethod,
    pub map: Sign,
    pub mu: f64,
    pub value: f64,
    pub error_estimate: f64,
    /// ∫ q*ω before division by vol(S³) = 2π² (quadrature only).
    pub raw_integral: Option<f64>,
}

fn require_nonzero(mu: f64) -> Result<()> {
    if mu == 0.0 || !mu.is_finite() {
        Err(CoreError::UndefinedDegree)
    } else {
        Ok(())
    }
}

/// ν[q±] = ±½ sgn μ.
pub fn degree_analytic(sign: Sign, mu: f64) -> Result<DegreeReport> {
    require_nonzero(mu)?;
    Ok(DegreeReport {
        method: DegreeMethod::Analytic,
        map: sign,
        mu,
        value: 0.5 * sign.value() * mu.signum(),
        error_estimate: 0.0,
        raw_integral: None,
    })
}

/// Pullback density of the S³ area form
/// ω = −x₁dx₂dx₃dx₄ + x₂dx₃dx₄dx₁ − x₃dx₄dx₁dx₂ + x₄dx₁dx₂dx₃ = −ι_x(dx₁…dx₄)
/// under q±, as the coefficient of dk₁∧dk₂∧dk₃.
pub fn pullback_density(sign: Sign, k: [f64; 3], mu: f64) -> Result<f64> {
    let l = check_origin(k, mu)?;
    let x = map_q(sign, k, mu)?.to_r4();
    // ∂_a x = (e_a − x k_a/λ)/λ
    let mut m = Matrix4::<f64>::zeros();
    for r in 0..4 {
        m[(r, 0)] = x[r];
    }
    for a in 0..3 {
        for r in 0..4 {
            let e = if r == a { 1.0 } else { 0.0 };
            m[(r, a + 1)] = (e - x[r] * k[a] / l) / l;
        }
    }
    Ok(-m.determinant())
}

/// Primitive of k²/(k²+μ²)²: F(k) = −k/(2(k²+μ²)) + arctan(k/μ)/(2μ).
pub fn radial_primitive(k: f64, mu: f64) -> f64 {
    -k / (2.0 * (k * k + mu * mu)) + (k / mu).atan() / (2.0 * mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RadialLayout {
    /// k = |μ| tan t, t ∈ [0, π/2): the whole half-line, no tail.
    TanSubstitution,
    /// [0, k_max] plus the analytic tail 4πμ(F(∞) − F(k_max)).
    TruncatedWithTail,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureParams {
    pub layout: RadialLayout,
    /// Cutoff for the truncated layout; defaults to 200|μ|.
    pub k_max: Option<f64>,
    pub n_radial: usize,
    /// Gauss–Legendre nodes in cos θ; φ uses twice as many uniform nodes.
    pub n_angular: usize,
    pub tolerance: f64,
}

impl Default for QuadratureParams {
    fn default() -> Self {
        Self { layout: RadialLayout::TanSubstitution, k_max: None, n_radial: 48, n_angular: 12, tolerance: 1e-4 }
    }
}

fn integrate_pullback(sign: Sign, mu: f64, p: &QuadratureParams, n_radial: usize) -> Result<f64> {
    let (rx, rw) = gauss_legendre(n_radial)?;
    let (cx, cw) = gauss_legendre(p.n_angular)?;
    let n_phi = 2 * p.n_angular;
    let am = mu.abs();
    let k_max = p.k_max.unwrap_or(200.0 * am);
    let mut total = 0.0;
    for (xi, wi) in rx.iter().zip(&rw) {
        let (k, jac) = match p.layout {
            RadialLayout::TanSubstitution => {
                let t = 0.25 * PI * (xi + 1.0);
                let c = t.cos();
                (am * t.tan(), 0.25 * PI * am / (c * c))
            }
            RadialLayout::TruncatedWithTail => (0.5 * k_max * (xi + 1.0), 0.5 * k_max),
        };
        let mut shell = 0.0;
        for (ct, wt) in cx.iter().zip(&cw) {
            let st = (1.0 - ct * ct).sqrt();
            for j in 0..n_phi {
                let phi = 2.0 * PI * (j as f64 + 0.5) / n_phi as f64;
                let kv = [k * st * phi.cos(), k * st * phi.sin(), k * ct];
                shell += wt * pullback_density(sign, kv, mu)?;
            }
        }
        total += wi * jac * k * k * shell * 2.0 * PI / n_phi as f64;
    }
    if p.layout == RadialLayout::TruncatedWithTail {
        // ∫_{k>k_max} of the pullback, from its primitive; q₋ flips μ.
        let m = sign.value() * mu;
        let f_inf = PI / (4.0 * m.abs());
        total += 4.0 * PI * m * (f_inf - radial_primitive(k_max, m));
    }
    Ok(total)
}

/// ν[q±] = (1/2π²)∫ q±*ω by product quadrature; the error estimate is the
/// change when the radial node count is halved.
pub fn degree_quadrature(sign: Sign, mu: f64, params: &QuadratureParams) -> Result<DegreeReport> {
    require_nonzero(mu)?;
    if params.layout == RadialLayout::TruncatedWithTail {
        if let Some(k_max) = params.k_max {
            if k_max < 10.0 * mu.abs() {
                return Err(CoreError::InvalidParameter(format!("k_max = {k_max} must be at least 10|μ|")));
            }
        }
    }
    if params.n_radial < 2 || params.n_angular < 1 {
        return Err(CoreError::InvalidParameter("quadrature needs n_radial ≥ 2 and n_angular ≥ 1".into()));
    }
    let raw = integrate_pullback(sign, mu, params, params.n_radial)?;
    let coarse = integrate_pullback(sign, mu, params, params.n_radial / 2)?;
    let vol = 2.0 * PI * PI;
    let error_estimate = (raw - coarse).abs() / vol;
    if error_estimate > params.tolerance {
        return Err(CoreError::NonConvergence { estimate: error_estimate, tolerance: params.tolerance });
    }
    Ok(DegreeReport {
        method: DegreeMethod::Quadrature,
        map: sign,
        mu,
        value: raw / vol,
        error_estimate,
        raw_integral: Some(raw),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceFormParams {
    /// Grid step; defaults to min(0.05, |μ|/20).
    pub step: Option<f64>,
    /// Radius of the grid ball in units of |μ|.
    pub ball: f64,
    pub exec: Exec,
}

impl Default for TraceFormParams {
    fn default() -> Self {
        Self { step: None, ball: 8.0, exec: Exec::default() }
    }
}

/// Coefficient of dk₁∧dk₂∧dk₃ in tr((h†dh)³) for h = h₊, with ∂_a h from
/// central differences of step `h`:
/// Σ_π sgn π tr(A_{π1}A_{π2}A_{π3}) = 3(tr A₁A₂A₃ − tr A₁A₃A₂), A_a = h†∂_a h.
pub fn trace_form_density(k: [f64; 3], mu: f64, h: f64) -> Result<f64> {
    let center = map_h(Sign::Plus, k, mu)?.adjoint();
    let mut a = [Matrix2::<C64>::zeros(); 3];
    for (d, ad) in a.iter_mut().enumerate() {
        let mut kp = k;
        let mut km = k;
        kp[d] += h;
        km[d] -= h;
        let dh = (map_h(Sign::Plus, kp, mu)? - map_h(Sign::Plus, km, mu)?) / C64::new(2.0 * h, 0.0);
        *ad = center * dh;
    }
    let t123 = (a[0] * a[1] * a[2]).trace();
    let t132 = (a[0] * a[2] * a[1]).trace();
    Ok(3.0 * (t123 - t132).re)
}

fn trace_form_sum(mu: f64, step: f64, ball: f64, exec: Exec) -> f64 {
    let n = (ball / step).ceil() as usize;
    let coord = |i: usize| (i as f64 + 0.5 - n as f64) * step;
    let b2 = ball * ball;
    let cell = step * step * step;
    exec.sum(2 * n, 1, |i| {
        let x = coord(i);
        let mut acc = 0.0;
        for j in 0..2 * n {
            let y = coord(j);
            let r2 = x * x + y * y;
            if r2 >= b2 {
                continue;
            }
            for l in 0..2 * n {
                let z = coord(l);
                if r2 + z * z < b2 {
                    acc += trace_form_density([x, y, z], mu, step).unwrap_or(0.0);
                }
            }
        }
        acc * cell
    })
}

/// ν[h₊] = (1/24π²)∫ tr((h₊†dh₊)³) on a Cartesian grid over the ball
/// |k| < 8|μ| plus the analytic tail outside it. The error estimate is the
/// change when the grid step is doubled.
pub fn degree_trace_form(mu: f64, params: &TraceFormParams) -> Result<DegreeReport> {
    require_nonzero(mu)?;
    let am = mu.abs();
    let step = params.step.unwrap_or((0.05f64).min(am / 20.0));
    if !(step > 0.0) || step > am / 4.0 {
        return Err(CoreError::GridTooCoarse { step, mu });
    }
    let ball = params.ball * am;
    let fine = trace_form_sum(mu, step, ball, params.exec);
    let coarse = trace_form_sum(mu, 2.0 * step, ball, params.exec);
    let tail = 48.0 * PI * mu * (PI / (4.0 * am) - radial_primitive(ball, mu));
    let norm = 24.0 * PI * PI;
    Ok(DegreeReport {
        method: DegreeMethod::TraceForm,
        map: Sign::Plus,
        mu,
        value: (fine + tail) / norm,
        error_estimate: (fine - coarse).abs() / norm,
        raw_integral: None,
    })
}

/// Jumps of the degrees across μ = 0, ν(μ>0) − ν(μ<0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeJumps {
    pub q_plus: f64,
    pub q_minus: f64,
    pub net: f64,
}

/// Jumps from any degree routine evaluated at ±|μ|.
pub fn degree_jumps<F>(mu: f64, degree: F) -> Result<DegreeJumps>
where
    F: Fn(Sign, f64) -> Result<DegreeReport>,
{
    let am = mu.abs();
    let jump = |s: Sign| -> Result<f64> { Ok(degree(s, am)?.value - degree(s, -am)?.value) };
    let q_plus = jump(Sign::Plus)?;
    let q_minus = jump(Sign::Minus)?;
    Ok(DegreeJumps { q_plus, q_minus, net: q_plus + q_minus })
}

/// Projector limits at k = 0 on either side of μ = 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingReport {
    /// (μ, ‖P₊(0, μ) − expected‖_max) with expected diag(1,1,0,0) for μ > 0
    /// and diag(0,0,1,1) for μ < 0.
    pub projector_deviation: Vec<(f64, f64)>,
    /// Smallest λ₊ − λ₋ over the sampled k ≠ 0, divided by 2|k|.
    pub min_relative_gap: f64,
    pub passed: bool,
}

/// Checks that the λ₊ eigenspace at k = 0 is span{e₁,e₂} for μ > 0 and
/// span{e₃,e₄} for μ < 0 (and the reverse for λ₋), and that no level
/// crossing happens at k ≠ 0.
pub fn eigenspace_crossing_check(mu_sequence: &[f64]) -> Result<CrossingReport> {
    let mut dev = Vec::new();
    let mut ok = true;
    for &mu in mu_sequence {
        if mu == 0.0 {
            continue;
        }
        let s = k_hamiltonian([0.0; 3], mu)?;
        let upper = mu > 0.0;
        let mut worst: f64 = 0.0;
        for r in 0..4 {
            for c in 0..4 {
                let want_p = if r == c && ((r < 2) == upper) { 1.0 } else { 0.0 };
                let want_m = if r == c && ((r < 2) != upper) { 1.0 } else { 0.0 };
                worst = worst.max((s.projector_plus[(r, c)] - C64::new(want_p, 0.0)).norm());
                worst = worst.max((s.projector_minus[(r, c)] - C64::new(want_m, 0.0)).norm());
            }
        }
        ok &= worst <= 1e-6;
        dev.push((mu, worst));
    }
    let mut min_gap = f64::INFINITY;
    for &mu in mu_sequence {
        for k in [[1.0, 0.0, 0.0], [0.0, 0.3, 0.4], [1e-3, 0.0, 0.0], [2.0, -1.0, 0.5]] {
            let s = k_hamiltonian(k, mu)?;
            let eig = s.numerical_eigenvalues();
            min_gap = min_gap.min((eig[2] - eig[1]) / (2.0 * norm3(k)));
        }
    }
    ok &= min_gap >= 1.0 - 1e-9;
    Ok(CrossingReport { projector_deviation: dev, min_relative_gap: min_gap, passed: ok })
}
