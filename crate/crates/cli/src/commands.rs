use std::fs::File;
use std::io::BufReader;

use diracband_core::branches::{mu_grid, spectral_flow, spectrum_at, sweep_branches, FlowMode, StateClass, SweepOptions};
use diracband_core::semiq::{
    degree_analytic, degree_jumps, degree_quadrature, degree_trace_form, DegreeReport, QuadratureParams, Sign,
    TraceFormParams,
};
use diracband_core::{AngularSector, BoundaryCondition, CoreError, Exec, ProblemSpec, SpinorType};
use diracband_oracle::{oracle_eigenvalues, OracleError, ShootingProblem};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::output::{gnuplot_script, read_sweep_csv, write_json, write_sweep_csv, write_to};
use crate::{BcArg, BranchKind, DegreeArgs, FlowArgs, FlowModeArg, OracleArgs, ProblemArgs, SpinorArg, SweepArgs};

impl ProblemArgs {
    pub fn boundary_condition(&self) -> Result<BoundaryCondition, CliError> {
        Ok(match self.bc {
            BcArg::Aps => BoundaryCondition::ApsMinus,
            BcArg::ApsPlus => BoundaryCondition::ApsPlus,
            BcArg::Chiral => {
                if !self.chiral_lambda.is_finite() {
                    return Err(CliError::Config(format!("chiral λ must be finite, got {}", self.chiral_lambda)));
                }
                BoundaryCondition::ChiralBag { lambda: self.chiral_lambda }
            }
        })
    }

    pub fn two_j(&self) -> Result<i64, CliError> {
        Ok(AngularSector::two_j_from(self.j)?)
    }

    /// The m = j sector of the requested layout.
    pub fn spec(&self, spinor: SpinorType) -> Result<ProblemSpec, CliError> {
        let sector = AngularSector::top(self.two_j()?, spinor)?;
        Ok(ProblemSpec::new(self.boundary_condition()?, sector, self.radius)?)
    }

    pub fn bc_name(&self) -> &'static str {
        match self.bc {
            BcArg::Aps => "aps",
            BcArg::ApsPlus => "aps-plus",
            BcArg::Chiral => "chiral",
        }
    }
}

impl From<SpinorArg> for SpinorType {
    fn from(s: SpinorArg) -> Self {
        match s {
            SpinorArg::Phi => SpinorType::Phi,
            SpinorArg::Psi => SpinorType::Psi,
        }
    }
}

pub fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let spec = args.problem.spec(SpinorType::Phi)?;
    if !(args.mu_min < args.mu_max) {
        return Err(CliError::Config(format!("empty μ range [{}, {}]", args.mu_min, args.mu_max)));
    }
    let grid = mu_grid(args.mu_min, args.mu_max, args.mu_steps)?;
    let options = SweepOptions {
        include_edge: args.branches.contains(&BranchKind::Edge),
        n_bulk: if args.branches.contains(&BranchKind::Bulk) { args.n_bulk } else { 0 },
        exec: Exec::Parallel,
        ..Default::default()
    };
    let result = sweep_branches(&spec, &grid, &options)?;
    for w in &result.warnings {
        eprintln!("diracband: warning: {w}");
    }
    let mut csv = Vec::new();
    write_sweep_csv(&mut csv, &result.points(), spec.sector.two_j())?;
    write_to(args.output.as_deref(), &csv)?;
    if args.emit_plot {
        // `requires = "output"` guarantees a path here
        let path = args.output.as_ref().expect("--emit-plot needs --output");
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let ids: Vec<usize> = result.branches.iter().map(|b| b.id).collect();
        let title = format!("{} j = {} R = {}", args.problem.bc_name(), args.problem.j, args.problem.radius);
        std::fs::write(path.with_extension("gp"), gnuplot_script(&name, &ids, &title))?;
    }
    Ok(())
}

pub fn flow(args: &FlowArgs) -> Result<(), CliError> {
    let file = File::open(&args.input)
        .map_err(|e| CliError::Config(format!("cannot open {}: {e}", args.input.display())))?;
    let branches = read_sweep_csv(BufReader::new(file))?;
    if branches.is_empty() {
        return Err(CliError::Config(format!("{} contains no branch points", args.input.display())));
    }
    let mode = match args.mode {
        FlowModeArg::Ordinary => FlowMode::Ordinary,
        FlowModeArg::Extended => FlowMode::Extended,
    };
    let report = spectral_flow(&branches, mode)?;
    write_json(std::io::stdout().lock(), &report)
}

#[derive(Serialize)]
struct MapDegrees {
    analytic: DegreeReport,
    quadrature: DegreeReport,
}

fn map_degrees(sign: Sign, mu: f64) -> Result<MapDegrees, CoreError> {
    Ok(MapDegrees { analytic: degree_analytic(sign, mu)?, quadrature: degree_quadrature(sign, mu, &QuadratureParams::default())? })
}

pub fn degree(args: &DegreeArgs) -> Result<(), CliError> {
    let mu = args.mu;
    if !mu.is_finite() {
        return Err(CliError::Config(format!("μ must be finite, got {mu}")));
    }
    let out = std::io::stdout().lock();
    if args.jump {
        if mu == 0.0 {
            return Err(CliError::Config("the jump is evaluated at ±|μ| and needs μ ≠ 0".into()));
        }
        let quad = degree_jumps(mu, |s, m| degree_quadrature(s, m, &QuadratureParams::default()))?;
        let analytic = degree_jumps(mu, degree_analytic)?;
        return write_json(
            out,
            &json!({
                "mu": mu.abs(),
                "method": "Quadrature",
                "q_plus": quad.q_plus,
                "q_minus": quad.q_minus,
                "net": quad.net,
                "analytic": analytic,
            }),
        );
    }
    if mu == 0.0 {
        return write_json(
            out,
            &json!({
                "mu": 0.0,
                "undefined": CoreError::UndefinedDegree.to_string(),
                "q_plus": null,
                "q_minus": null,
                "h_plus_trace_form": null,
            }),
        );
    }
    let trace = if args.no_trace_form {
        None
    } else {
        let params = TraceFormParams { step: args.trace_step, ball: args.trace_ball, exec: Exec::Parallel };
        Some(degree_trace_form(mu, &params)?)
    };
    write_json(
        out,
        &json!({
            "mu": mu,
            "q_plus": map_degrees(Sign::Plus, mu)?,
            "q_minus": map_degrees(Sign::Minus, mu)?,
            "h_plus_trace_form": trace,
        }),
    )
}

/// Oracle roots in the window; a short list is returned as is and shows up
/// as a count mismatch.
fn oracle_roots(problem: &ShootingProblem, count: usize, window: (f64, f64), scan: usize) -> Result<Vec<f64>, CliError> {
    match oracle_eigenvalues(problem, count, window, scan) {
        Ok(v) => Ok(v),
        Err(OracleError::InsufficientRoots { found, .. }) => Ok(found),
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct RootComparison {
    dispersion: Vec<f64>,
    oracle: Vec<f64>,
}

impl RootComparison {
    fn worst(&self) -> Option<f64> {
        if self.dispersion.len() != self.oracle.len() {
            return None;
        }
        Some(self.dispersion.iter().zip(&self.oracle).map(|(x, y)| (x - y).abs() / y.abs().max(1e-300)).fold(0.0, f64::max))
    }
}

pub const ORACLE_TOL: f64 = 1e-6;

pub fn oracle(args: &OracleArgs) -> Result<(), CliError> {
    let spec = args.problem.spec(args.spinor.into())?;
    let mu = args.mu;
    if !mu.is_finite() {
        return Err(CliError::Config(format!("μ must be finite, got {mu}")));
    }
    if args.count == 0 {
        return Err(CliError::Config("--count must be at least 1".into()));
    }
    let problem = ShootingProblem::new(spec, mu);
    let am = mu.abs();

    let edge = if am > 0.0 {
        let dispersion: Vec<f64> = spectrum_at(&spec, mu, &SweepOptions { n_bulk: 0, exec: Exec::Sequential, ..Default::default() })?
            .iter()
            .filter(|p| p.state_class != StateClass::Critical)
            .map(|p| p.energy)
            .collect();
        let w = am * (1.0 - 1e-12);
        let oracle = oracle_roots(&problem, dispersion.len().max(1) + 4, (-w, w), 400)?;
        Some(RootComparison { dispersion, oracle })
    } else {
        None
    };

    let options = SweepOptions { n_bulk: args.count, include_edge: false, exec: Exec::Sequential, ..Default::default() };
    let bulk_points = spectrum_at(&spec, mu, &options)?;
    let beta_max = (args.count as f64 + spec.sector.ell() as f64 + 8.0) * std::f64::consts::PI / spec.radius * 2.0;
    let e_max = (am * am + beta_max * beta_max).sqrt();
    let start = am + 1e-10 * am.max(1.0 / spec.radius);
    let scan = ((e_max - start) * spec.radius * 24.0 / std::f64::consts::PI).ceil() as usize + 2;
    let mut sides = Vec::new();
    for sign in [1.0, -1.0] {
        let dispersion: Vec<f64> = bulk_points.iter().map(|p| p.energy).filter(|e| e * sign > 0.0).collect();
        let mut dispersion = dispersion;
        dispersion.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
        dispersion.truncate(args.count);
        let oracle = oracle_roots(&problem, args.count, (sign * start, sign * e_max), scan)?;
        sides.push(RootComparison { dispersion, oracle });
    }
    let bulk_negative = sides.pop().expect("two sides");
    let bulk_positive = sides.pop().expect("two sides");

    let parts = [edge.as_ref(), Some(&bulk_positive), Some(&bulk_negative)];
    let count_mismatch = parts.iter().flatten().any(|c| c.worst().is_none());
    let worst = parts.iter().flatten().filter_map(|c| c.worst()).fold(0.0, f64::max);
    let passed = !count_mismatch && worst <= ORACLE_TOL;
    write_json(
        std::io::stdout().lock(),
        &json!({
            "bc": args.problem.bc_name(),
            "j": args.problem.j,
            "R": spec.radius,
            "mu": mu,
            "spinor": match args.spinor { SpinorArg::Phi => "phi", SpinorArg::Psi => "psi" },
            "edge": edge,
            "bulk_positive": bulk_positive,
            "bulk_negative": bulk_negative,
            "count_mismatch": count_mismatch,
            "max_relative_difference": worst,
            "tolerance": ORACLE_TOL,
            "passed": passed,
        }),
    )?;
    if passed {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("oracle comparison failed (worst relative difference {worst:.2e}, count mismatch {count_mismatch})")))
    }
}
