use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Result, SectorError};

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(SectorError::EmptyQuadrature);
    }
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != 0.0 {
            dp = d;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    Ok((x, w))
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    (p1, n as f64 * (z * p1 - p0) / (z * z - 1.0))
}

/// Product rule on S²: Gauss–Legendre in cos θ times a uniform grid in φ.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    thetas: Vec<f64>,
    theta_weights: Vec<f64>,
    phis: Vec<f64>,
}

impl SphereQuadrature {
    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_phi == 0 {
            return Err(SectorError::EmptyQuadrature);
        }
        let (x, w) = gauss_legendre(n_theta)?;
        let thetas = x.iter().map(|c| c.acos()).collect();
        let phis = (0..n_phi).map(|k| 2.0 * PI * k as f64 / n_phi as f64).collect();
        Ok(Self { thetas, theta_weights: w, phis })
    }

    /// 64 × 64, exact for the harmonic products met with j ≤ 21/2.
    pub fn standard() -> Self {
        Self::new(64, 64).expect("fixed positive orders")
    }

    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let dphi = 2.0 * PI / self.phis.len() as f64;
        self.thetas.iter().zip(&self.theta_weights).flat_map(move |(&t, &w)| {
            self.phis.iter().map(move |&p| (t, p, w * dphi))
        })
    }

    pub fn integrate<F: Fn(f64, f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes().map(|(t, p, w)| f(t, p) * w).sum()
    }

    pub fn integrate_real<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        self.nodes().map(|(t, p, w)| f(t, p) * w).sum()
    }
}
