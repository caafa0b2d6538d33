//! Eigenvalue conditions as residual functions of E.
//!
//! Each boundary condition, spinor layout and regime has its own equation of
//! the form α·√|μ±E|·Z_p(κR) = β·√|μ∓E|·Z_q(κR), with Z = I for edge states
//! (κ = ε = √(μ²−E²)) and Z = J for bulk states (κ = β = √(E²−μ²)). The
//! square roots have been cleared from the denominators so every coefficient
//! is finite up to the lines |E| = |μ|.
//!
//! Residuals are returned as (lhs − rhs)/|(lhs, rhs)|, built from the
//! exponentially scaled pair of regularized series so nothing overflows.
//! This normalization is unchanged by any factor common to both sides.
//! When one coefficient is exactly zero (APS at μ = 0) the other side is
//! divided by the size of the regularized pair instead, so that its zeros
//! remain ordinary simple roots.
//! Within 10⁻⁸ of |E| = |μ| both sides vanish together; there the common
//! factor √|μ±E|·(κR)^ν is divided out analytically before forming the same
//! ratio, so the residual is continuous across the switch.
//!
//! [`unified_residual`] is a second, structurally different route: the
//! reduced regular solution of [`crate::radial`] evaluated at R and crossed
//! with the boundary direction from the sector crate.

use diracband_sector::{BoundaryCondition, ProblemSpec, SpinorType};
use diracband_specfun::{entire_h_pair_scaled, HalfIntOrder};
use serde::Serialize;

use crate::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EquationRegime {
    Edge,
    BulkPositiveE,
    BulkNegativeE,
}

/// Value of a residual, or the structural statement that the equation has
/// no solution in this (sgn μ, sgn E) quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Residual {
    Value(f64),
    NoSolution,
}

impl Residual {
    pub fn value(self) -> Option<f64> {
        match self {
            Residual::Value(v) => Some(v),
            Residual::NoSolution => None,
        }
    }
}

/// How the Bessel order in the APS(+), Ψ, E < 0 equation is read. The
/// radial system and the sibling equations call for J_{ℓ+3/2} on the left
/// (with J_{ℓ+½} on the right); `LowerOrder` keeps the J_{ℓ−½} variant of
/// that equation so the two can be compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum OrderReading {
    #[default]
    Corrected,
    LowerOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Root {
    /// √|μ+E|
    Plus,
    /// √|μ−E|
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Order {
    /// ℓ+½
    A,
    /// ℓ+3/2
    B,
    /// ℓ−½
    BelowA,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Side {
    coef: f64,
    root: Root,
    order: Order,
}

/// lhs = rhs, each side coef·root·Z_order(κR).
#[derive(Debug, Clone, Copy, PartialEq)]
struct TabulatedEquation {
    lhs: Side,
    rhs: Side,
}

const fn side(coef: f64, root: Root, order: Order) -> Side {
    Side { coef, root, order }
}

fn aps_coefficient(spec: &ProblemSpec, mu: f64) -> f64 {
    let l = spec.sector.ell() as f64;
    let mr = mu * spec.radius;
    (l + 1.0 + ((l + 1.0).powi(2) + mr * mr).sqrt()) / spec.radius
}

/// Selects the equation for (bc, layout, regime); `None` is the structural
/// "no solution" entry.
fn tabulated_equation(spec: &ProblemSpec, regime: EquationRegime, energy: f64, mu: f64, reading: OrderReading) -> Option<TabulatedEquation> {
    use EquationRegime::*;
    use Order::*;
    use Root::{Minus, Plus};
    use SpinorType::{Phi, Psi};
    let spinor = spec.sector.spinor();
    let eq = |lhs, rhs| Some(TabulatedEquation { lhs, rhs });
    match spec.bc {
        BoundaryCondition::ApsMinus => {
            let c = aps_coefficient(spec, mu);
            let am = mu.abs();
            match (regime, spinor) {
                (Edge, Phi) if (mu > 0.0 && energy <= 0.0) || (mu < 0.0 && energy >= 0.0) => {
                    eq(side(am, Plus, A), side(c, Minus, B))
                }
                (Edge, Psi) if (mu > 0.0 && energy >= 0.0) || (mu < 0.0 && energy <= 0.0) => {
                    eq(side(am, Minus, A), side(c, Plus, B))
                }
                (Edge, _) => None,
                (BulkPositiveE, Phi) => eq(side(-mu, Plus, A), side(c, Minus, B)),
                (BulkNegativeE, Phi) => eq(side(mu, Plus, A), side(c, Minus, B)),
                (BulkPositiveE, Psi) => eq(side(mu, Minus, A), side(c, Plus, B)),
                (BulkNegativeE, Psi) => eq(side(-mu, Minus, A), side(c, Plus, B)),
            }
        }
        BoundaryCondition::ApsPlus => {
            let c = aps_coefficient(spec, mu);
            match (regime, spinor) {
                (Edge, _) => None,
                (BulkPositiveE, Phi) => eq(side(mu, Minus, B), side(c, Plus, A)),
                (BulkNegativeE, Phi) => eq(side(-mu, Minus, B), side(c, Plus, A)),
                (BulkPositiveE, Psi) => eq(side(-mu, Plus, B), side(c, Minus, A)),
                (BulkNegativeE, Psi) => {
                    let top = match reading {
                        OrderReading::Corrected => B,
                        OrderReading::LowerOrder => BelowA,
                    };
                    eq(side(mu, Plus, top), side(c, Minus, A))
                }
            }
        }
        BoundaryCondition::ChiralBag { lambda } => {
            let e = (-lambda).exp();
            match (regime, spinor) {
                (Edge, _) if mu <= 0.0 => None,
                (Edge, Phi) => eq(side(1.0, Plus, A), side(e, Minus, B)),
                (Edge, Psi) => eq(side(1.0, Plus, B), side(e, Minus, A)),
                (BulkPositiveE, Phi) => eq(side(-1.0, Plus, A), side(e, Minus, B)),
                (BulkNegativeE, Phi) => eq(side(1.0, Plus, A), side(e, Minus, B)),
                (BulkPositiveE, Psi) => eq(side(1.0, Plus, B), side(e, Minus, A)),
                (BulkNegativeE, Psi) => eq(side(-1.0, Plus, B), side(e, Minus, A)),
            }
        }
    }
}

fn check_regime(regime: EquationRegime, energy: f64, mu: f64) -> Result<()> {
    let ok = match regime {
        EquationRegime::Edge => mu != 0.0 && energy.abs() <= mu.abs(),
        EquationRegime::BulkPositiveE => energy >= mu.abs() && energy > 0.0,
        EquationRegime::BulkNegativeE => energy <= -mu.abs() && energy < 0.0,
    };
    if ok {
        Ok(())
    } else {
        let requirement = match regime {
            EquationRegime::Edge => "|E| ≤ |μ|, μ ≠ 0",
            EquationRegime::BulkPositiveE => "E ≥ |μ|, E > 0",
            EquationRegime::BulkNegativeE => "E ≤ −|μ|, E < 0",
        };
        Err(CoreError::Regime { what: "dispersion equation", requirement, energy, mu })
    }
}

/// Evaluates a tabulated equation at (E, μ).
fn evaluate(eq: &TabulatedEquation, modified: bool, ell: u32, radius: f64, energy: f64, mu: f64) -> Result<f64> {
    let sp2 = (mu + energy).abs();
    let sm2 = (mu - energy).abs();
    let (sp, sm) = (sp2.sqrt(), sm2.sqrt());
    let x = radius * sp * sm;
    let w = if modified { x * x } else { -x * x };
    let a = HalfIntOrder::ell_plus_half(ell);
    // (c·H_a, c·H_b) with the same c > 0
    let (ha, hb) = entire_h_pair_scaled(a, w)?;
    let h_below = a.nu() * ha + 0.25 * w * hb;

    let degenerate = (sp2.min(sm2) < 1e-8 * mu.abs().max(1.0)) || x < 1e-6;
    if !degenerate {
        let z = |o: Order| match o {
            Order::A => ha,
            Order::B => 0.5 * x * hb,
            Order::BelowA => 2.0 / x * h_below,
        };
        let root = |r: Root| match r {
            Root::Plus => sp,
            Root::Minus => sm,
        };
        let (cl, cr) = (eq.lhs.coef * root(eq.lhs.root), eq.rhs.coef * root(eq.rhs.root));
        let (zl, zr) = (z(eq.lhs.order), z(eq.rhs.order));
        let (vl, vr) = (cl * zl, cr * zr);
        if eq.lhs.coef == 0.0 || eq.rhs.coef == 0.0 {
            // One side vanishes identically (APS at μ = 0) and the equation
            // is a zero of the other; the ratio form would be a sign
            // function there. H_a and H_b have no common zero.
            let scale = (cl.abs() + cr.abs()) * ha.abs().max((0.5 * x * hb).abs()).max((2.0 / x * h_below).abs());
            return Ok((vl - vr) / scale);
        }
        let norm = vl.hypot(vr);
        if norm > 0.0 && norm.is_finite() {
            return Ok((vl - vr) / norm);
        }
    }

    // Reduced form: write each side as coef·sp^i·sm^j·(R/2)^k·H and divide
    // out the common powers of sp and sm. The leftover powers are even.
    let term = |s: &Side| {
        let (mut i, mut j) = match s.root {
            Root::Plus => (1, 0),
            Root::Minus => (0, 1),
        };
        let (factor, h) = match s.order {
            Order::A => (1.0, ha),
            Order::B => {
                i += 1;
                j += 1;
                (0.5 * radius, hb)
            }
            Order::BelowA => {
                i -= 1;
                j -= 1;
                (2.0 / radius, h_below)
            }
        };
        (s.coef * factor * h, i, j)
    };
    let (tl, il, jl) = term(&eq.lhs);
    let (tr, ir, jr) = term(&eq.rhs);
    let (imin, jmin) = (il.min(ir), jl.min(jr));
    let pow = |i: i32, j: i32| sp2.powi((i - imin) / 2) * sm2.powi((j - jmin) / 2);
    let (vl, vr) = (tl * pow(il, jl), tr * pow(ir, jr));
    let norm = vl.hypot(vr);
    Ok(if norm > 0.0 { (vl - vr) / norm } else { 0.0 })
}

/// One eigenvalue condition at fixed (spec, μ), as a function of E.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionEquation {
    pub spec: ProblemSpec,
    pub mu: f64,
    pub regime: EquationRegime,
    pub reading: OrderReading,
}

impl DispersionEquation {
    pub fn new(spec: ProblemSpec, mu: f64, regime: EquationRegime) -> Self {
        Self { spec, mu, regime, reading: OrderReading::Corrected }
    }

    pub fn with_reading(self, reading: OrderReading) -> Self {
        Self { reading, ..self }
    }

    /// Whether E lies in the closed regime of this equation.
    pub fn in_regime(&self, energy: f64) -> bool {
        check_regime(self.regime, energy, self.mu).is_ok()
    }

    /// The part of the edge window [−|μ|, |μ|] where the equation exists, or
    /// `None` when the whole regime is a structural "no solution".
    pub fn edge_window(&self) -> Option<(f64, f64)> {
        if self.regime != EquationRegime::Edge || self.mu == 0.0 {
            return None;
        }
        let am = self.mu.abs();
        let lo = tabulated_equation(&self.spec, self.regime, -am, self.mu, self.reading).is_some();
        let hi = tabulated_equation(&self.spec, self.regime, am, self.mu, self.reading).is_some();
        match (lo, hi) {
            (true, true) => Some((-am, am)),
            (true, false) => Some((-am, 0.0)),
            (false, true) => Some((0.0, am)),
            (false, false) => None,
        }
    }

    pub fn residual(&self, energy: f64) -> Result<Residual> {
        check_regime(self.regime, energy, self.mu)?;
        let Some(eq) = tabulated_equation(&self.spec, self.regime, energy, self.mu, self.reading) else {
            return Ok(Residual::NoSolution);
        };
        let modified = self.regime == EquationRegime::Edge;
        let v = evaluate(&eq, modified, self.spec.sector.ell(), self.spec.radius, energy, self.mu)?;
        Ok(Residual::Value(v))
    }

    /// Residual value, treating the structural no-solution marker as an
    /// error.
    pub fn value(&self, energy: f64) -> Result<f64> {
        match self.residual(energy)? {
            Residual::Value(v) => Ok(v),
            Residual::NoSolution => Err(CoreError::InvalidParameter(format!(
                "no eigenvalue equation exists at E = {energy}, μ = {} for this layout",
                self.mu
            ))),
        }
    }
}

fn bulk_regime(energy: f64) -> EquationRegime {
    if energy >= 0.0 {
        EquationRegime::BulkPositiveE
    } else {
        EquationRegime::BulkNegativeE
    }
}

fn require_aps(spec: &ProblemSpec) -> Result<()> {
    if spec.bc.is_aps() {
        Ok(())
    } else {
        Err(CoreError::InvalidParameter("an APS boundary condition is required".into()))
    }
}

fn require_chiral(spec: &ProblemSpec) -> Result<()> {
    if spec.bc.is_aps() {
        Err(CoreError::InvalidParameter("the chiral bag boundary condition is required".into()))
    } else {
        Ok(())
    }
}

/// Edge condition under APS(±).
pub fn edge_residual_aps(spec: &ProblemSpec, energy: f64, mu: f64) -> Result<Residual> {
    require_aps(spec)?;
    DispersionEquation::new(*spec, mu, EquationRegime::Edge).residual(energy)
}

/// Bulk condition under APS(±), selected by sgn E.
pub fn bulk_residual_aps(spec: &ProblemSpec, energy: f64, mu: f64) -> Result<f64> {
    require_aps(spec)?;
    DispersionEquation::new(*spec, mu, bulk_regime(energy)).value(energy)
}

/// Edge condition under the chiral bag; no solutions for μ ≤ 0.
pub fn edge_residual_chiral(spec: &ProblemSpec, energy: f64, mu: f64) -> Result<Residual> {
    require_chiral(spec)?;
    DispersionEquation::new(*spec, mu, EquationRegime::Edge).residual(energy)
}

/// Bulk condition under the chiral bag, selected by sgn E.
pub fn bulk_residual_chiral(spec: &ProblemSpec, energy: f64, mu: f64) -> Result<f64> {
    require_chiral(spec)?;
    DispersionEquation::new(*spec, mu, bulk_regime(energy)).value(energy)
}

/// The regular solution at r = R crossed with the allowed boundary direction,
/// normalized to [−1, 1]. Valid for every (E, μ) and boundary condition;
/// zero exactly at eigenvalues.
pub fn unified_residual(spec: &ProblemSpec, energy: f64, mu: f64) -> Result<f64> {
    let a = HalfIntOrder::ell_plus_half(spec.sector.ell());
    let r = spec.radius;
    let (ha, hb) = entire_h_pair_scaled(a, (mu - energy) * (mu + energy) * r * r)?;
    // common factor R^ℓ and the scale of the pair dropped
    let (f, g) = match spec.sector.spinor() {
        SpinorType::Phi => (ha, 0.5 * (mu - energy) * r * hb),
        SpinorType::Psi => (0.5 * (mu + energy) * r * hb, ha),
    };
    let (p, q) = spec.boundary_direction(mu);
    let norm = f.hypot(g) * p.hypot(q);
    Ok(if norm > 0.0 { (f * q - g * p) / norm } else { 0.0 })
}

/// The chiral-bag eigenvalues on the critical lines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalEnergies {
    /// On E = +μ: (2ℓ+3)e^{−λ}/(2R).
    pub plus: f64,
    /// On E = −μ: −(2ℓ+3)e^{λ}/(2R).
    pub minus: f64,
}

pub fn critical_eigenvalues_chiral(ell: u32, radius: f64, lambda: f64) -> CriticalEnergies {
    let k = (2 * ell + 3) as f64 / (2.0 * radius);
    CriticalEnergies { plus: k * (-lambda).exp(), minus: -k * lambda.exp() }
}
