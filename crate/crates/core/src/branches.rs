//! Root finding, μ-continuation of eigenvalue branches and spectral flow.
//!
//! A sweep first computes, for every (layout, μ) pair independently, the set
//! of eigenvalues in the requested window; this is the data-parallel part.
//! Root sets are then joined into branches one μ step at a time by an
//! order-preserving alignment against linearly extrapolated predictions.
//! Eigenvalues of one layout never cross each other, so the alignment never
//! needs to reorder.

use diracband_sector::{BoundaryCondition, ProblemSpec, SpinorType};
use serde::Serialize;

use crate::dispersion::{unified_residual, DispersionEquation, EquationRegime, Residual};
use crate::radial::{classify, Regime};
use crate::{CoreError, Exec, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StateClass {
    Edge,
    Bulk,
    ZeroMode,
    Critical,
}

impl StateClass {
    pub fn as_str(self) -> &'static str {
        match self {
            StateClass::Edge => "edge",
            StateClass::Bulk => "bulk",
            StateClass::ZeroMode => "zero_mode",
            StateClass::Critical => "critical",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "edge" => Some(StateClass::Edge),
            "bulk" => Some(StateClass::Bulk),
            "zero_mode" => Some(StateClass::ZeroMode),
            "critical" => Some(StateClass::Critical),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchPoint {
    pub mu: f64,
    pub energy: f64,
    pub state_class: StateClass,
    pub p_sign: i8,
    pub residual: f64,
    pub branch_id: usize,
}

/// A continued eigenvalue curve of one layout, ordered by μ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Branch {
    pub id: usize,
    pub p_sign: i8,
    pub points: Vec<BranchPoint>,
}

/// Relative tolerance for tagging a point as lying on |E| = |μ|.
pub const CRITICAL_TOL: f64 = 1e-9;
/// Residual the root solver must reach.
pub const RESIDUAL_TOL: f64 = 1e-12;

fn class_of(energy: f64, mu: f64) -> StateClass {
    match classify(energy, mu, CRITICAL_TOL) {
        Regime::Edge => StateClass::Edge,
        Regime::Bulk => StateClass::Bulk,
        Regime::Critical => StateClass::Critical,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEstimate {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Root of `f` on a sign-changing bracket: bisection down to a relative
/// width of 10⁻⁶, then Newton steps with a one-sided numerical derivative,
/// safeguarded by the bracket, until |f| ≤ 10⁻¹² and the step has stalled.
pub fn find_root<F>(f: F, lo: f64, hi: f64) -> Result<RootEstimate>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a)?;
    let fb = f(b)?;
    if fa == 0.0 {
        return Ok(RootEstimate { x: a, residual: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(RootEstimate { x: b, residual: 0.0, iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(CoreError::NoSignChange { lo: a, hi: b });
    }
    let mut iterations = 0;
    let scale = |a: f64, b: f64| a.abs().max(b.abs()).max(1.0);
    while b - a > 1e-6 * scale(a, b) && iterations < 200 {
        iterations += 1;
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(RootEstimate { x: m, residual: 0.0, iterations });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let mut x = 0.5 * (a + b);
    let mut best = (x, f64::INFINITY);
    let mut last_step = f64::INFINITY;
    for _ in 0..100 {
        iterations += 1;
        let fx = f(x)?;
        if fx.abs() < best.1 {
            best = (x, fx.abs());
        }
        if fx == 0.0 || (fx.abs() <= RESIDUAL_TOL && last_step <= 1e-13 * scale(x, x)) {
            return Ok(RootEstimate { x, residual: fx, iterations });
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let h = (1e-8 * scale(x, x)).min(0.25 * (b - a)).max(f64::EPSILON * scale(x, x));
        let xh = if x + h < b { x + h } else { x - h };
        let d = (f(xh)? - fx) / (xh - x);
        let newton = x - fx / d;
        let next = if d != 0.0 && d.is_finite() && newton > a && newton < b { newton } else { 0.5 * (a + b) };
        last_step = (next - x).abs();
        if next == x || b - a <= 2.0 * f64::EPSILON * scale(a, b) {
            break;
        }
        x = next;
    }
    let (x, _) = best;
    let r = f(x)?;
    if r.abs() <= RESIDUAL_TOL {
        Ok(RootEstimate { x, residual: r, iterations })
    } else {
        Err(CoreError::MaxIterations { iterations, x, residual: r })
    }
}

/// Solves one dispersion equation on a bracket and tags the result.
pub fn solve_root(equation: &DispersionEquation, bracket: (f64, f64)) -> Result<BranchPoint> {
    let est = find_root(|e| equation.value(e), bracket.0, bracket.1)?;
    Ok(BranchPoint {
        mu: equation.mu,
        energy: est.x,
        state_class: class_of(est.x, equation.mu),
        p_sign: equation.spec.sector.p_sign(),
        residual: est.residual,
        branch_id: 0,
    })
}

/// `steps` equally spaced values on [min, max]; values within 10⁻¹² of the
/// span from zero are snapped to exactly 0.
pub fn mu_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite()) || min >= max {
        return Err(CoreError::InvalidGrid(format!("empty μ range [{min}, {max}]")));
    }
    if steps < 2 {
        return Err(CoreError::InvalidGrid(format!("need at least 2 μ steps, got {steps}")));
    }
    let span = max - min;
    Ok((0..steps)
        .map(|i| {
            let v = if i + 1 == steps { max } else { min + span * i as f64 / (steps - 1) as f64 };
            if v.abs() <= 1e-12 * span {
                0.0
            } else {
                v
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    /// Bulk roots wanted on each side of the spectrum.
    pub n_bulk: usize,
    pub include_edge: bool,
    /// Samples of the edge window scanned for sign changes.
    pub edge_scan_points: usize,
    /// Locate crossings of E = ±μ exactly and insert them as critical points.
    pub refine_crossings: bool,
    /// Maximum number of times a μ step is halved when a match jumps.
    pub max_subdivisions: u32,
    pub exec: Exec,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { n_bulk: 0, include_edge: true, edge_scan_points: 128, refine_crossings: true, max_subdivisions: 3, exec: Exec::default() }
    }
}

/// An eigenvalue at one μ before it is assigned to a branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    pub energy: f64,
    pub residual: f64,
    pub state_class: StateClass,
}

fn scan_roots<F>(f: F, samples: &[f64], out: &mut Vec<SpectrumPoint>, mu: f64, limit: usize) -> Result<()>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut prev: Option<(f64, f64)> = None;
    for &x in samples {
        if out.len() >= limit {
            break;
        }
        let fx = f(x)?;
        if fx == 0.0 {
            out.push(SpectrumPoint { energy: x, residual: 0.0, state_class: class_of(x, mu) });
        } else if let Some((x0, f0)) = prev {
            if f0 != 0.0 && f0.signum() != fx.signum() {
                let est = find_root(&f, x0, x)?;
                out.push(SpectrumPoint { energy: est.x, residual: est.residual, state_class: class_of(est.x, mu) });
            }
        }
        prev = Some((x, fx));
    }
    Ok(())
}

/// Eigenvalues of one layout at one μ: every edge root, the zero mode at
/// μ = 0 under APS(−), and `n_bulk` bulk roots on each side. Sorted by E.
pub fn spectrum_at(spec: &ProblemSpec, mu: f64, options: &SweepOptions) -> Result<Vec<SpectrumPoint>> {
    let mut out = Vec::new();
    let radius = spec.radius;
    if options.include_edge {
        if mu == 0.0 {
            if spec.bc == BoundaryCondition::ApsMinus {
                let residual = unified_residual(spec, 0.0, 0.0)?;
                out.push(SpectrumPoint { energy: 0.0, residual, state_class: StateClass::ZeroMode });
            }
        } else {
            let eq = DispersionEquation::new(*spec, mu, EquationRegime::Edge);
            if let Some((lo, hi)) = eq.edge_window() {
                let n = options.edge_scan_points.max(2);
                let samples: Vec<f64> = (0..n)
                    .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
                    .collect();
                scan_roots(
                    |e| match eq.residual(e)? {
                        Residual::Value(v) => Ok(v),
                        Residual::NoSolution => Ok(f64::NAN),
                    },
                    &samples,
                    &mut out,
                    mu,
                    usize::MAX,
                )?;
            }
        }
    }
    if options.n_bulk > 0 {
        let step = std::f64::consts::PI / (24.0 * radius);
        let beta_max = (options.n_bulk as f64 + spec.sector.ell() as f64 + 8.0) * std::f64::consts::PI / radius * 2.0;
        let n_samples = (beta_max / step).ceil() as usize + 1;
        for sign in [1.0, -1.0] {
            let regime = if sign > 0.0 { EquationRegime::BulkPositiveE } else { EquationRegime::BulkNegativeE };
            let eq = DispersionEquation::new(*spec, mu, regime);
            let floor = if mu == 0.0 { 1e-9 * step } else { 0.0 };
            let samples: Vec<f64> = (0..n_samples)
                .map(|k| {
                    let beta = (k as f64 * step).max(floor);
                    sign * (mu * mu + beta * beta).sqrt()
                })
                .collect();
            let mut side = Vec::new();
            scan_roots(|e| eq.value(e), &samples, &mut side, mu, options.n_bulk)?;
            out.extend(side);
        }
    }
    out.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    out.dedup_by(|b, a| (a.energy - b.energy).abs() <= 1e-10 * a.energy.abs().max(1.0));
    Ok(out)
}

/// Result of a sweep: branches sorted by id, plus continuation warnings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sweep {
    pub branches: Vec<Branch>,
    pub warnings: Vec<String>,
}

impl Sweep {
    /// All points sorted by (branch_id, μ).
    pub fn points(&self) -> Vec<BranchPoint> {
        self.branches.iter().flat_map(|b| b.points.iter().copied()).collect()
    }
}

struct Tracker<'a> {
    spec: ProblemSpec,
    options: &'a SweepOptions,
    branches: Vec<Branch>,
    /// Indices into `branches` of the curves alive at the last μ, by E.
    active: Vec<usize>,
    last_mu: Option<f64>,
    next_id: usize,
    warnings: Vec<String>,
}

impl<'a> Tracker<'a> {
    fn new_branch(&mut self, mu: f64, p: &SpectrumPoint) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        let p_sign = self.spec.sector.p_sign();
        self.branches.push(Branch {
            id,
            p_sign,
            points: vec![BranchPoint { mu, energy: p.energy, state_class: p.state_class, p_sign, residual: p.residual, branch_id: id }],
        });
        self.branches.len() - 1
    }

    fn prediction(&self, idx: usize, mu: f64) -> (f64, f64) {
        let pts = &self.branches[idx].points;
        let last = pts[pts.len() - 1];
        if pts.len() >= 2 {
            let prev = pts[pts.len() - 2];
            if last.mu != prev.mu {
                let slope = (last.energy - prev.energy) / (last.mu - prev.mu);
                return (last.energy + slope * (mu - last.mu), last.energy);
            }
        }
        (last.energy, last.energy)
    }

    /// Order-preserving alignment; returns for each current root the index
    /// into `active` it continues, and the worst match ratio.
    fn align(&self, mu: f64, roots: &[SpectrumPoint]) -> (Vec<Option<usize>>, f64, f64) {
        let last_mu = self.last_mu.expect("alignment needs a previous step");
        let dmu = (mu - last_mu).abs();
        let penalty = 1.5 * dmu + 1e-12;
        let preds: Vec<(f64, f64)> = self.active.iter().map(|&i| self.prediction(i, mu)).collect();
        let (n, m) = (preds.len(), roots.len());
        let mut cost = vec![vec![0.0f64; m + 1]; n + 1];
        for i in 0..=n {
            for j in 0..=m {
                cost[i][j] = if i == 0 {
                    j as f64 * penalty
                } else if j == 0 {
                    i as f64 * penalty
                } else {
                    let matched = cost[i - 1][j - 1] + (preds[i - 1].0 - roots[j - 1].energy).abs();
                    matched.min(cost[i - 1][j] + penalty).min(cost[i][j - 1] + penalty)
                };
            }
        }
        let mut assignment = vec![None; m];
        let (mut i, mut j) = (n, m);
        let mut worst_ratio: f64 = 0.0;
        let mut worst_dist: f64 = 0.0;
        while i > 0 && j > 0 {
            let d = (preds[i - 1].0 - roots[j - 1].energy).abs();
            if cost[i][j] == cost[i - 1][j - 1] + d {
                assignment[j - 1] = Some(i - 1);
                let predicted_step = (preds[i - 1].0 - preds[i - 1].1).abs().max(0.25 * dmu);
                worst_ratio = worst_ratio.max(d / predicted_step);
                worst_dist = worst_dist.max(d);
                i -= 1;
                j -= 1;
            } else if cost[i][j] == cost[i - 1][j] + penalty {
                i -= 1;
            } else {
                j -= 1;
            }
        }
        (assignment, worst_ratio, worst_dist)
    }

    fn advance<G>(&mut self, mu: f64, roots: Vec<SpectrumPoint>, depth: u32, recompute: &G) -> Result<()>
    where
        G: Fn(f64) -> Result<Vec<SpectrumPoint>>,
    {
        let Some(last_mu) = self.last_mu else {
            let mut active = Vec::with_capacity(roots.len());
            for p in &roots {
                active.push(self.new_branch(mu, p));
            }
            self.active = active;
            self.last_mu = Some(mu);
            return Ok(());
        };
        let (assignment, ratio, dist) = self.align(mu, &roots);
        if ratio > 5.0 && dist > 1e-8 {
            if depth < self.options.max_subdivisions {
                let mid = 0.5 * (last_mu + mu);
                let mid_roots = recompute(mid)?;
                self.advance(mid, mid_roots, depth + 1, recompute)?;
                return self.advance(mu, roots, depth + 1, recompute);
            }
            self.warnings.push(format!(
                "p_sign {}: branch jump between μ = {last_mu} and μ = {mu} (match distance {dist:.3e}, {ratio:.1}× the predicted step)",
                self.spec.sector.p_sign()
            ));
        }
        let mut next_active = Vec::with_capacity(roots.len());
        for (p, a) in roots.iter().zip(&assignment) {
            let idx = match a {
                Some(k) => {
                    let idx = self.active[*k];
                    let b = &mut self.branches[idx];
                    b.points.push(BranchPoint {
                        mu,
                        energy: p.energy,
                        state_class: p.state_class,
                        p_sign: b.p_sign,
                        residual: p.residual,
                        branch_id: b.id,
                    });
                    idx
                }
                None => self.new_branch(mu, p),
            };
            next_active.push(idx);
        }
        self.active = next_active;
        self.last_mu = Some(mu);
        Ok(())
    }
}

/// Inserts exact crossings of E = ±μ, found as roots in μ of the unified
/// residual restricted to the line.
fn refine_crossings(spec: &ProblemSpec, branch: &mut Branch, warnings: &mut Vec<String>) -> Result<()> {
    let mut inserted = Vec::new();
    for w in branch.points.windows(2) {
        let (p, q) = (w[0], w[1]);
        if p.mu * q.mu <= 0.0 {
            continue;
        }
        for c in [1.0, -1.0] {
            let (dp, dq) = (p.energy - c * p.mu, q.energy - c * q.mu);
            if dp.abs() <= 1e-10 || dq.abs() <= 1e-10 || dp.signum() == dq.signum() {
                continue;
            }
            let phi = |m: f64| unified_residual(spec, c * m, m);
            match find_root(phi, p.mu, q.mu) {
                Ok(est) => inserted.push(BranchPoint {
                    mu: est.x,
                    energy: c * est.x,
                    state_class: StateClass::Critical,
                    p_sign: branch.p_sign,
                    residual: est.residual,
                    branch_id: branch.id,
                }),
                Err(CoreError::NoSignChange { .. }) => warnings.push(format!(
                    "branch {}: E = {}μ crossing between μ = {} and {} could not be bracketed",
                    branch.id,
                    if c > 0.0 { "+" } else { "−" },
                    p.mu,
                    q.mu
                )),
                Err(e) => return Err(e),
            }
        }
    }
    if !inserted.is_empty() {
        branch.points.extend(inserted);
        branch.points.sort_by(|a, b| a.mu.total_cmp(&b.mu));
    }
    Ok(())
}

/// Continues every eigenvalue of both layouts of `spec` across `mu_grid`.
///
/// Branch ids are assigned in creation order, Φ layout first, so the result
/// is deterministic for a given grid and options.
pub fn sweep_branches(spec: &ProblemSpec, mu_grid: &[f64], options: &SweepOptions) -> Result<Sweep> {
    if mu_grid.is_empty() {
        return Err(CoreError::InvalidGrid("empty μ grid".into()));
    }
    if mu_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(CoreError::InvalidGrid("μ grid must be strictly increasing".into()));
    }
    let layouts = [SpinorType::Phi, SpinorType::Psi];
    let tasks: Vec<(SpinorType, f64)> = layouts.iter().flat_map(|&s| mu_grid.iter().map(move |&m| (s, m))).collect();
    let spectra = options.exec.map(&tasks, |&(s, m)| spectrum_at(&spec.with_spinor(s), m, options));
    let mut spectra = spectra.into_iter();

    let mut branches = Vec::new();
    let mut warnings = Vec::new();
    let mut next_id = 0;
    for &layout in &layouts {
        let spec_l = spec.with_spinor(layout);
        let mut tracker = Tracker {
            spec: spec_l,
            options,
            branches: Vec::new(),
            active: Vec::new(),
            last_mu: None,
            next_id,
            warnings: Vec::new(),
        };
        let recompute = |m: f64| spectrum_at(&spec_l, m, options);
        for &mu in mu_grid {
            let roots = spectra.next().expect("one spectrum per task")?;
            tracker.advance(mu, roots, 0, &recompute)?;
        }
        next_id = tracker.next_id;
        warnings.extend(tracker.warnings);
        let mut layout_branches = tracker.branches;
        if options.refine_crossings {
            for b in &mut layout_branches {
                refine_crossings(&spec_l, b, &mut warnings)?;
            }
        }
        branches.extend(layout_branches);
    }
    branches.sort_by_key(|b| b.id);
    Ok(Sweep { branches, warnings })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowMode {
    /// Signed crossings of E = 0.
    Ordinary,
    /// Crossings of E = +μ (+1) and E = −μ (−1).
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FlowLine {
    #[serde(rename = "E=0")]
    Zero,
    #[serde(rename = "E=+mu")]
    PlusMu,
    #[serde(rename = "E=-mu")]
    MinusMu,
}

impl FlowLine {
    fn slope(self) -> f64 {
        match self {
            FlowLine::Zero => 0.0,
            FlowLine::PlusMu => 1.0,
            FlowLine::MinusMu => -1.0,
        }
    }

    fn label(self) -> &'static str {
        match self {
            FlowLine::Zero => "E = 0",
            FlowLine::PlusMu => "E = +μ",
            FlowLine::MinusMu => "E = −μ",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FlowContribution {
    pub branch_id: usize,
    pub p_sign: i8,
    pub crossing_mu: f64,
    pub delta: i32,
    pub line: FlowLine,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlowReport {
    pub mode: FlowMode,
    #[serde(rename = "spectral_flow")]
    pub flow: i32,
    pub contributions: Vec<FlowContribution>,
    /// Extended mode only: passages through (μ, E) = (0, 0), which lie on
    /// both lines at once and are not counted.
    pub excluded_origin_passages: usize,
}

/// Distance below which a point counts as lying on a line.
pub const CROSSING_TOL: f64 = 1e-10;

/// Counts signed crossings along every branch.
///
/// A crossing is a sign change of the signed distance to the line between
/// consecutive points whose distance exceeds 10⁻¹⁰; points closer than that
/// are skipped and, if the sign does not change across them, reported as an
/// ambiguous touch.
pub fn spectral_flow(branches: &[Branch], mode: FlowMode) -> Result<FlowReport> {
    let lines: &[FlowLine] = match mode {
        FlowMode::Ordinary => &[FlowLine::Zero],
        FlowMode::Extended => &[FlowLine::PlusMu, FlowLine::MinusMu],
    };
    let mut contributions = Vec::new();
    let mut excluded = 0;
    for branch in branches {
        for &line in lines {
            let c = line.slope();
            let mut last: Option<BranchPoint> = None;
            let mut touching: Vec<BranchPoint> = Vec::new();
            for &p in &branch.points {
                let d = p.energy - c * p.mu;
                if d.abs() <= CROSSING_TOL {
                    if last.is_some() {
                        touching.push(p);
                    }
                    continue;
                }
                if let Some(q) = last {
                    let dq = q.energy - c * q.mu;
                    let at_origin = |m: f64, e: f64| m.abs() <= 1e-9 && e.abs() <= 1e-9;
                    let (mu_x, e_x) = match touching.first() {
                        Some(t) => (t.mu, t.energy),
                        None => {
                            let t = dq / (dq - d);
                            let m = q.mu + t * (p.mu - q.mu);
                            (m, c * m)
                        }
                    };
                    let origin = mode == FlowMode::Extended && (at_origin(mu_x, e_x) || (q.mu * p.mu < 0.0 && touching.iter().any(|t| at_origin(t.mu, t.energy))));
                    if dq.signum() != d.signum() {
                        if origin {
                            excluded += 1;
                        } else {
                            let delta = match line {
                                FlowLine::Zero => {
                                    if d > 0.0 {
                                        1
                                    } else {
                                        -1
                                    }
                                }
                                FlowLine::PlusMu => 1,
                                FlowLine::MinusMu => -1,
                            };
                            contributions.push(FlowContribution { branch_id: branch.id, p_sign: branch.p_sign, crossing_mu: mu_x, delta, line });
                        }
                    } else if !touching.is_empty() && !origin {
                        return Err(CoreError::AmbiguousCrossing { branch_id: branch.id, line: line.label(), mu: touching[0].mu });
                    }
                }
                touching.clear();
                last = Some(p);
            }
        }
    }
    contributions.sort_by(|a, b| a.branch_id.cmp(&b.branch_id).then(a.crossing_mu.total_cmp(&b.crossing_mu)));
    let flow = contributions.iter().map(|c| c.delta).sum();
    Ok(FlowReport { mode, flow, contributions, excluded_origin_passages: excluded })
}
