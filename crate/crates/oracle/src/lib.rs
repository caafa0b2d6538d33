//! Independent eigenvalue oracle: integrate the radial Dirac system outward
//! from a Frobenius seed with an 8th-order Dormand–Prince scheme and read the
//! boundary condition off as a terminal residual.
//!
//! The crate deliberately knows nothing about Bessel functions; it only sees
//! the first-order radial system and the boundary direction supplied by the
//! sector crate.

use diracband_sector::{ProblemSpec, SpinorType};
use ode_solvers::{Dop853, OutputType, System, Vector3};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("start radius {r_start} must lie in (0, R·1e-4] for R = {radius}")]
    StartRadius { r_start: f64, radius: f64 },
    #[error("Frobenius order {0} is below the minimum of 4")]
    SeriesOrder(usize),
    #[error("integration failed at E = {energy}: {reason}")]
    Integration { energy: f64, reason: String },
    #[error("found {} of {wanted} requested roots in the window", found.len())]
    InsufficientRoots { found: Vec<f64>, wanted: usize },
}

pub type Result<T> = std::result::Result<T, OracleError>;

const RTOL: f64 = 1e-12;
const ATOL: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingProblem {
    pub spec: ProblemSpec,
    pub mu: f64,
    pub r_start: f64,
    pub series_order: usize,
}

impl ShootingProblem {
    /// Defaults: seed at R·1e-5 with a 6-term Frobenius series.
    pub fn new(spec: ProblemSpec, mu: f64) -> Self {
        Self { spec, mu, r_start: spec.radius * 1e-5, series_order: 6 }
    }

    fn validate(&self) -> Result<()> {
        let radius = self.spec.radius;
        if !(self.r_start > 0.0 && self.r_start <= radius * 1e-4) {
            return Err(OracleError::StartRadius { r_start: self.r_start, radius });
        }
        if self.series_order < 4 {
            return Err(OracleError::SeriesOrder(self.series_order));
        }
        Ok(())
    }
}

/// The radial system with the regular power r^ℓ factored out of both
/// components: (f, g) = r^ℓ (F, G). The boundary residual is invariant under
/// that common factor.
struct Radial {
    ell: f64,
    energy: f64,
    mu: f64,
    spinor: SpinorType,
}

/// The independent variable is t = ln r, which turns the 1/r coupling into a
/// constant damping term and removes the singular stiffness near the origin.
/// t itself rides along as the third state component: the DOP853 tableau in
/// ode_solvers 0.6 evaluates its last stage at the wrong abscissa, so only
/// autonomous systems integrate at full order.
impl System<f64, Vector3<f64>> for Radial {
    fn system(&self, _t: f64, y: &Vector3<f64>, dy: &mut Vector3<f64>) {
        let r = y[2].exp();
        dy[2] = 1.0;
        let k = 2.0 * self.ell + 2.0;
        let (e, m) = (self.energy, self.mu);
        match self.spinor {
            // f' − ℓf/r = (E+μ)g,  g' + (ℓ+2)g/r = (μ−E)f
            SpinorType::Phi => {
                dy[0] = r * (e + m) * y[1];
                dy[1] = r * (m - e) * y[0] - k * y[1];
            }
            // f' + (ℓ+2)f/r = (E+μ)g,  g' − ℓg/r = (μ−E)f
            SpinorType::Psi => {
                dy[0] = r * (e + m) * y[1] - k * y[0];
                dy[1] = r * (m - e) * y[0];
            }
        }
    }
}

/// Frobenius seed (F, G) at r for the reduced system.
fn seed(sys: &Radial, r: f64, order: usize) -> Vector3<f64> {
    // regular component: Σ a_k r^{2k}; partner: Σ b_k r^{2k+1}
    let (c_reg, c_par) = match sys.spinor {
        SpinorType::Phi => (sys.energy + sys.mu, sys.mu - sys.energy),
        SpinorType::Psi => (sys.mu - sys.energy, sys.energy + sys.mu),
    };
    let mut a = 1.0;
    let mut b = c_par * a / (2.0 * sys.ell + 3.0);
    let mut reg = a;
    let mut par = b * r;
    let r2 = r * r;
    let mut pow = 1.0;
    for k in 1..order {
        let kf = k as f64;
        a = c_reg * b / (2.0 * kf);
        b = c_par * a / (2.0 * kf + 2.0 * sys.ell + 3.0);
        pow *= r2;
        reg += a * pow;
        par += b * pow * r;
    }
    match sys.spinor {
        SpinorType::Phi => Vector3::new(reg, par, r.ln()),
        SpinorType::Psi => Vector3::new(par, reg, r.ln()),
    }
}

/// Integrates to r = R and returns (F(R), G(R)) for the reduced system.
pub fn boundary_values(problem: &ShootingProblem, energy: f64) -> Result<(f64, f64)> {
    problem.validate()?;
    let sys = Radial {
        ell: problem.spec.sector.ell() as f64,
        energy,
        mu: problem.mu,
        spinor: problem.spec.sector.spinor(),
    };
    let y0 = seed(&sys, problem.r_start, problem.series_order);
    let radius = problem.spec.radius;
    let (t0, t1) = (problem.r_start.ln(), radius.ln());
    let mut solver = Dop853::from_param(
        sys,
        t0,
        t1,
        t1 - t0,
        y0,
        RTOL,
        ATOL,
        0.9,
        0.0,
        0.333,
        6.0,
        t1 - t0,
        0.0,
        1_000_000,
        u32::MAX,
        OutputType::Sparse,
    );
    solver
        .integrate()
        .map_err(|e| OracleError::Integration { energy, reason: e.to_string() })?;
    let t = *solver.x_out().last().expect("solver records the initial point");
    if (t - t1).abs() > 1e-12 * (1.0 + t1.abs()) {
        return Err(OracleError::Integration { energy, reason: format!("stopped at r = {}", t.exp()) });
    }
    let y = solver.y_out().last().expect("non-empty output");
    Ok((y[0], y[1]))
}

/// Normalized cross product of (f(R), g(R)) with the allowed boundary
/// direction; zero exactly at eigenvalues.
pub fn shoot(problem: &ShootingProblem, energy: f64) -> Result<f64> {
    let (f, g) = boundary_values(problem, energy)?;
    let (p, q) = problem.spec.boundary_direction(problem.mu);
    Ok((f * q - g * p) / ((f * f + g * g) * (p * p + q * q)).sqrt())
}

/// Roots of the shooting residual met when scanning from `window.0` towards
/// `window.1`, in that order; stops after `count`.
pub fn oracle_eigenvalues(
    problem: &ShootingProblem,
    count: usize,
    window: (f64, f64),
    scan_points: usize,
) -> Result<Vec<f64>> {
    let (start, end) = window;
    let mut roots = Vec::new();
    if count == 0 || start == end {
        return Ok(roots);
    }
    let n = scan_points.max(2);
    let mut x0 = start;
    let mut f0 = shoot(problem, x0)?;
    for i in 1..=n {
        let x1 = start + (end - start) * i as f64 / n as f64;
        let f1 = shoot(problem, x1)?;
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            roots.push(bisect(problem, x0, x1, f0)?);
        }
        if roots.len() >= count {
            roots.truncate(count);
            return Ok(roots);
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 && roots.len() < count {
        roots.push(x0);
    }
    if roots.len() < count {
        return Err(OracleError::InsufficientRoots { found: roots, wanted: count });
    }
    Ok(roots)
}

fn bisect(problem: &ShootingProblem, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64> {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m == a || m == b || (b - a).abs() <= 1e-14 * m.abs().max(1e-3) {
            return Ok(m);
        }
        let fm = shoot(problem, m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}
