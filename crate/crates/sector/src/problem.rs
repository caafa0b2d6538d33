use crate::{Result, SectorError};

/// Which of the two 4-spinor layouts a sector uses.
///
/// `Phi` puts Φ^{j(+)} on top and Φ^{j(−)} below; `Psi` swaps them. The P
/// operator takes the values +(j+½) and −(j+½) respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinorType {
    Phi,
    Psi,
}

impl SpinorType {
    pub fn p_sign(self) -> i8 {
        match self {
            SpinorType::Phi => 1,
            SpinorType::Psi => -1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            SpinorType::Phi => SpinorType::Psi,
            SpinorType::Psi => SpinorType::Phi,
        }
    }
}

/// A (j, m, layout) block. Stored as 2j, 2m so every field is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngularSector {
    two_j: u32,
    two_m: i32,
    spinor: SpinorType,
}

impl AngularSector {
    pub fn new(two_j: i64, two_m: i64, spinor: SpinorType) -> Result<Self> {
        if two_j <= 0 || two_j % 2 == 0 || two_j > 1_000_000 {
            return Err(SectorError::InvalidJ(two_j));
        }
        if two_m.abs() > two_j || two_m % 2 == 0 {
            return Err(SectorError::InvalidM { two_j, two_m });
        }
        Ok(Self { two_j: two_j as u32, two_m: two_m as i32, spinor })
    }

    /// Sector with m = j, the default for m-independent radial work.
    pub fn top(two_j: i64, spinor: SpinorType) -> Result<Self> {
        Self::new(two_j, two_j, spinor)
    }

    /// Parses a decimal j such as 3.5.
    pub fn two_j_from(j: f64) -> Result<i64> {
        let t = (2.0 * j).round();
        if (2.0 * j - t).abs() > 1e-9 || t <= 0.0 || (t as i64) % 2 == 0 {
            return Err(SectorError::InvalidJ((2.0 * j).round() as i64));
        }
        Ok(t as i64)
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn two_m(&self) -> i32 {
        self.two_m
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }

    /// ℓ = j − ½.
    pub fn ell(&self) -> u32 {
        (self.two_j - 1) / 2
    }

    pub fn spinor(&self) -> SpinorType {
        self.spinor
    }

    pub fn p_sign(&self) -> i8 {
        self.spinor.p_sign()
    }

    /// ±(j + ½).
    pub fn p_eigenvalue(&self) -> f64 {
        self.p_sign() as f64 * (self.j() + 0.5)
    }

    pub fn with_spinor(&self, spinor: SpinorType) -> Self {
        Self { spinor, ..*self }
    }

    pub fn with_two_m(&self, two_m: i64) -> Result<Self> {
        Self::new(self.two_j as i64, two_m, self.spinor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    /// Boundary values in the negative eigenspace of B_μ.
    ApsMinus,
    /// Boundary values in the positive eigenspace of B_μ.
    ApsPlus,
    /// ψ = −iγ_r e^{λγ₀}γ₀ψ on the sphere.
    ChiralBag { lambda: f64 },
}

impl BoundaryCondition {
    pub fn is_aps(&self) -> bool {
        !matches!(self, BoundaryCondition::ChiralBag { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec {
    pub bc: BoundaryCondition,
    pub sector: AngularSector,
    pub radius: f64,
}

impl ProblemSpec {
    pub fn new(bc: BoundaryCondition, sector: AngularSector, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(SectorError::InvalidRadius(radius));
        }
        Ok(Self { bc, sector, radius })
    }

    pub fn with_spinor(&self, spinor: SpinorType) -> Self {
        Self { sector: self.sector.with_spinor(spinor), ..*self }
    }

    /// Direction (p, q) that the boundary pair (f(R), g(R)) must be parallel to.
    ///
    /// Written so that neither entry degenerates as μ → 0.
    pub fn boundary_direction(&self, mu: f64) -> (f64, f64) {
        let l = self.sector.ell() as f64;
        let mr = mu * self.radius;
        let big = l + 1.0 + ((l + 1.0).powi(2) + mr * mr).sqrt();
        match (self.bc, self.sector.spinor()) {
            (BoundaryCondition::ApsMinus, SpinorType::Phi) => (big, mr),
            (BoundaryCondition::ApsPlus, SpinorType::Phi) => (-mr, big),
            (BoundaryCondition::ApsMinus, SpinorType::Psi) => (mr, big),
            (BoundaryCondition::ApsPlus, SpinorType::Psi) => (big, -mr),
            (BoundaryCondition::ChiralBag { lambda }, _) => ((-lambda).exp(), 1.0),
        }
    }
}
