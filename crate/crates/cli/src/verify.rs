//! `diracband verify`: built-in consistency suites.
//!
//! Every check reports the quantity it measured, the tolerance it was held
//! to, and whether it passed. The command exits 0 only if all checks pass.

use diracband_core::branches::{mu_grid, spectrum_at, sweep_branches, BranchPoint, SweepOptions};
use diracband_core::dispersion::{critical_eigenvalues_chiral, unified_residual};
use diracband_core::radial::{check_grid, critical_profile, matched_sup_distance, reduced_edge_state, regular_solution, CriticalCase};
use diracband_core::semiq::{eigenspace_crossing_check, k_hamiltonian, Sign};
use diracband_core::symmetry::{
    check_aps_mirror, check_boundary_symmetries, check_chiral_reflection, check_k_symmetries, SymmetryCheck,
    MATRIX_TOL, SPECTRUM_TOL,
};
use diracband_core::{AngularSector, BoundaryCondition, Exec, ProblemSpec, SpinorType};
use diracband_sector::{
    apply_sigma_dot_l, apply_sigma_r, apply_total_j3, boundary_current, gamma_r_exchange_check, spinor_harmonic,
    HarmonicBranch, SphereQuadrature,
};
use nalgebra::Matrix4;
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::CliError;
use crate::output::write_json;
use crate::{Suite, VerifyArgs};

#[derive(Debug, Serialize)]
struct Check {
    label: String,
    value: f64,
    tolerance: f64,
    passed: bool,
}

impl Check {
    fn at_most(label: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self { label: label.into(), value, tolerance, passed: value <= tolerance }
    }

    fn from_symmetry(c: &SymmetryCheck, tolerance: f64) -> Self {
        Self { label: format!("{:?} {:?}: {}", c.target, c.name, c.label), value: c.residual, tolerance, passed: c.passed }
    }
}

#[derive(Debug, Serialize)]
struct SuiteReport {
    suite: &'static str,
    passed: bool,
    checks: Vec<Check>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    bc: &'static str,
    j: f64,
    #[serde(rename = "R")]
    radius: f64,
    mu: f64,
    passed: bool,
    suites: Vec<SuiteReport>,
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Symmetry => "symmetry",
        Suite::Current => "current",
        Suite::Angular => "angular",
        Suite::Projector => "projector",
        Suite::Limits => "limits",
    }
}

/// Interior sample angles, away from the poles.
fn angles() -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for a in 0..7 {
        for b in 0..5 {
            out.push((0.2 + 2.7 * a as f64 / 6.0, 0.37 + 1.2 * b as f64));
        }
    }
    out
}

struct Ctx {
    bc: BoundaryCondition,
    two_j: i64,
    radius: f64,
    mu: f64,
}

impl Ctx {
    fn spec(&self, bc: BoundaryCondition, spinor: SpinorType) -> Result<ProblemSpec, CliError> {
        Ok(ProblemSpec::new(bc, AngularSector::top(self.two_j, spinor)?, self.radius)?)
    }

    fn sweep_points(&self, spec: &ProblemSpec) -> Result<Vec<BranchPoint>, CliError> {
        let grid = mu_grid(-2.0, 2.0, 9)?;
        let options = SweepOptions { n_bulk: 3, exec: Exec::Parallel, ..Default::default() };
        Ok(sweep_branches(spec, &grid, &options)?.points())
    }
}

fn symmetry(ctx: &Ctx) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for k in [[0.3, -1.1, 0.7], [1.0, 0.0, 0.0], [-2.0, 0.5, 1.5]] {
        checks.extend(check_k_symmetries(k, ctx.mu).iter().map(|c| Check::from_symmetry(c, MATRIX_TOL)));
    }
    for two_m in [ctx.two_j, -ctx.two_j] {
        let sector = AngularSector::new(ctx.two_j, two_m, SpinorType::Phi)?;
        for c in check_boundary_symmetries(&sector, ctx.mu, ctx.radius)? {
            checks.push(Check::from_symmetry(&c, MATRIX_TOL));
        }
    }
    let (check, _) = match ctx.bc {
        BoundaryCondition::ChiralBag { lambda } => {
            let at = ctx.sweep_points(&ctx.spec(ctx.bc, SpinorType::Phi)?)?;
            let back = ctx.sweep_points(&ctx.spec(BoundaryCondition::ChiralBag { lambda: -lambda }, SpinorType::Psi)?)?;
            check_chiral_reflection(&at, &back)
        }
        _ => {
            let phi = ctx.sweep_points(&ctx.spec(ctx.bc, SpinorType::Phi)?)?;
            let psi = ctx.sweep_points(&ctx.spec(ctx.bc, SpinorType::Psi)?)?;
            check_aps_mirror(&phi, &psi)
        }
    };
    checks.push(Check::from_symmetry(&check, SPECTRUM_TOL));
    Ok(checks)
}

fn current(ctx: &Ctx) -> Result<Vec<Check>, CliError> {
    let quad = SphereQuadrature::standard();
    let mut checks = Vec::new();
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let spec = ctx.spec(ctx.bc, spinor)?;
        for mu in [ctx.mu, -ctx.mu] {
            let points = spectrum_at(&spec, mu, &SweepOptions { n_bulk: 3, exec: Exec::Sequential, ..Default::default() })?;
            let mut worst: f64 = 0.0;
            for p in &points {
                let (f, g) = regular_solution(&spec.sector, p.energy, mu).eval(spec.radius)?;
                let n = f.hypot(g);
                let j = boundary_current(&spec.sector, C64::new(f / n, 0.0), C64::new(g / n, 0.0), spec.radius, &quad);
                worst = worst.max(j.abs());
            }
            checks.push(Check::at_most(
                format!("{spinor:?} μ = {mu}: max boundary current over {} eigenstates", points.len()),
                worst,
                1e-12,
            ));
            if points.is_empty() && mu == ctx.mu {
                checks.push(Check { label: format!("{spinor:?} μ = {mu}: eigenstates found"), value: 0.0, tolerance: 1.0, passed: false });
            }
        }
    }
    Ok(checks)
}

fn angular(ctx: &Ctx) -> Result<Vec<Check>, CliError> {
    let grid = angles();
    let mut checks = Vec::new();
    let (mut sigma_l, mut j3, mut sigma_r): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for two_m in (-ctx.two_j..=ctx.two_j).step_by(2) {
        let s = AngularSector::new(ctx.two_j, two_m, SpinorType::Phi)?;
        let j = s.j();
        for (branch, ev) in [(HarmonicBranch::Plus, j - 0.5), (HarmonicBranch::Minus, -(j + 1.5))] {
            for out in apply_sigma_dot_l(&s, branch, &grid)? {
                let want = spinor_harmonic(&s, branch, out.theta, out.phi).scale(C64::new(ev, 0.0));
                sigma_l = sigma_l.max(out.max_diff(&want));
            }
            for &(t, p) in &grid {
                let y = spinor_harmonic(&s, branch, t, p);
                j3 = j3.max(apply_total_j3(&s, branch, t, p).max_diff(&y.scale(C64::new(s.m(), 0.0))));
            }
        }
        for &(t, p) in &grid {
            let plus = spinor_harmonic(&s, HarmonicBranch::Plus, t, p);
            let minus = spinor_harmonic(&s, HarmonicBranch::Minus, t, p);
            sigma_r = sigma_r.max(apply_sigma_r(&plus).max_diff(&minus)).max(apply_sigma_r(&minus).max_diff(&plus));
        }
    }
    checks.push(Check::at_most("σ·L Φ(±) = (j − ½)Φ(+), −(j + 3/2)Φ(−) for every m", sigma_l, 1e-8));
    checks.push(Check::at_most("J₃ Φ(±)_m = m Φ(±)_m for every m", j3, 1e-9));
    checks.push(Check::at_most("σ_r exchanges Φ(+) and Φ(−)", sigma_r, 1e-12));
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = AngularSector::top(ctx.two_j, spinor)?;
        let rep = gamma_r_exchange_check(&s, ctx.mu, ctx.radius, &grid)?;
        checks.push(Check {
            label: format!("{spinor:?}: γ_r maps the B_μ (+) eigenstate to the (−) one (ratio spread)"),
            value: rep.ratio_spread,
            tolerance: 1e-10,
            passed: rep.passed,
        });
        checks.push(Check::at_most(
            format!("{spinor:?}: Bγ_r + γ_rB = (2/R)γ_r"),
            rep.anticommutator_residual,
            1e-13 * (1.0 + 1.0 / ctx.radius),
        ));
    }
    Ok(checks)
}

fn max_abs(m: &Matrix4<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn projector(ctx: &Ctx) -> Result<Vec<Check>, CliError> {
    let id = Matrix4::<C64>::identity();
    let (mut idem, mut complete, mut trace, mut eigen): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for k in [[0.3, -1.1, 0.7], [1.0, 0.0, 0.0], [-2.0, 0.5, 1.5], [0.0, 0.0, 1e-3]] {
        let s = k_hamiltonian(k, ctx.mu)?;
        for sign in [Sign::Plus, Sign::Minus] {
            let p = s.projector(sign);
            let l = s.lambda(sign);
            idem = idem.max(max_abs(&(p * p - p)));
            trace = trace.max((p.trace() - C64::new(2.0, 0.0)).norm());
            eigen = eigen.max(max_abs(&(s.matrix * p - p * C64::new(l, 0.0))) / l.abs().max(1.0));
        }
        complete = complete.max(max_abs(&(s.projector_plus + s.projector_minus - id)));
    }
    let mut checks = vec![
        Check::at_most("P±² = P±", idem, 1e-13),
        Check::at_most("P₊ + P₋ = 1", complete, 1e-13),
        Check::at_most("tr P± = 2", trace, 1e-13),
        Check::at_most("K P± = λ± P±", eigen, 1e-12),
    ];
    let am = ctx.mu.abs().max(0.1);
    let crossing = eigenspace_crossing_check(&[-am, -1e-3, 1e-3, am])?;
    let worst = crossing.projector_deviation.iter().map(|d| d.1).fold(0.0, f64::max);
    checks.push(Check {
        label: "P₊(k = 0) switches between the upper and lower blocks at μ = 0".into(),
        value: worst,
        tolerance: 1e-6,
        passed: crossing.passed && worst <= 1e-6,
    });
    checks.push(Check {
        label: "no level crossing at k ≠ 0: min (λ₊ − λ₋)/2|k| ≥ 1".into(),
        value: crossing.min_relative_gap,
        tolerance: 1.0,
        passed: crossing.min_relative_gap >= 1.0 - 1e-9,
    });
    Ok(checks)
}

fn relative_distance(profile: &[(f64, f64)], reference: &[(f64, f64)]) -> f64 {
    let scale = reference.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max);
    matched_sup_distance(profile, reference) / scale
}

fn limits(ctx: &Ctx) -> Result<Vec<Check>, CliError> {
    let grid = check_grid(ctx.radius);
    let mut checks = Vec::new();
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = AngularSector::top(ctx.two_j, spinor)?;
        let l = s.ell() as i32;
        // the zero mode is a pure r^ℓ in the upper (Φ) or lower (Ψ) slot
        let zero: Vec<(f64, f64)> = grid
            .iter()
            .map(|&r| match spinor {
                SpinorType::Phi => (r.powi(l), 0.0),
                SpinorType::Psi => (0.0, r.powi(l)),
            })
            .collect();
        let at_origin = reduced_edge_state(&s, 0.0, 0.0)?.eval_grid(&grid)?;
        checks.push(Check::at_most(format!("{spinor:?}: reduced edge state at (μ, E) = (0, 0) is the r^ℓ zero mode"), relative_distance(&at_origin, &zero), 1e-12));

        let mu = if ctx.mu == 0.0 { 0.7 } else { ctx.mu };
        for (case, e) in [(CriticalCase::EEqPlusMu, mu), (CriticalCase::EEqMinusMu, -mu)] {
            let reference = critical_profile(&s, case, mu).eval_grid(&grid)?;
            let near = regular_solution(&s, e * (1.0 - 1e-7), mu).eval_grid(&grid)?;
            checks.push(Check::at_most(
                format!("{spinor:?}: regular solution tends to the critical profile on {case:?} (μ = {mu})"),
                relative_distance(&near, &reference),
                1e-4,
            ));
        }
    }
    if let BoundaryCondition::ChiralBag { lambda } = ctx.bc {
        let sector = AngularSector::top(ctx.two_j, SpinorType::Phi)?;
        let c = critical_eigenvalues_chiral(sector.ell(), ctx.radius, lambda);
        let psi = ctx.spec(ctx.bc, SpinorType::Psi)?;
        let phi = ctx.spec(ctx.bc, SpinorType::Phi)?;
        checks.push(Check::at_most(
            format!("Ψ: E = (2ℓ+3)e^(−λ)/2R = {} on E = +μ is an eigenvalue", c.plus),
            unified_residual(&psi, c.plus, c.plus)?.abs(),
            1e-12,
        ));
        checks.push(Check::at_most(
            format!("Φ: E = −(2ℓ+3)e^(λ)/2R = {} on E = −μ is an eigenvalue", c.minus),
            unified_residual(&phi, c.minus, -c.minus)?.abs(),
            1e-12,
        ));
    }
    Ok(checks)
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    if !args.mu.is_finite() {
        return Err(CliError::Config(format!("μ must be finite, got {}", args.mu)));
    }
    // validate the problem once, so a bad j or R is a usage error
    args.problem.spec(SpinorType::Phi)?;
    let ctx = Ctx { bc: args.problem.boundary_condition()?, two_j: args.problem.two_j()?, radius: args.problem.radius, mu: args.mu };
    let mut suites = Vec::new();
    let mut seen = Vec::new();
    for &suite in &args.suite {
        if seen.contains(&suite) {
            continue;
        }
        seen.push(suite);
        let checks = match suite {
            Suite::Symmetry => symmetry(&ctx)?,
            Suite::Current => current(&ctx)?,
            Suite::Angular => angular(&ctx)?,
            Suite::Projector => projector(&ctx)?,
            Suite::Limits => limits(&ctx)?,
        };
        let passed = checks.iter().all(|c| c.passed);
        suites.push(SuiteReport { suite: suite_name(suite), passed, checks });
    }
    let passed = suites.iter().all(|s| s.passed);
    let report = VerifyReport { bc: args.problem.bc_name(), j: args.problem.j, radius: args.problem.radius, mu: args.mu, passed, suites };
    write_json(std::io::stdout().lock(), &report)?;
    if passed {
        Ok(())
    } else {
        let failed: Vec<&str> = report.suites.iter().filter(|s| !s.passed).map(|s| s.suite).collect();
        Err(CliError::CheckFailed(format!("failed suites: {}", failed.join(", "))))
    }
}
