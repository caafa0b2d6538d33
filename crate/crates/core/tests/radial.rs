use diracband_core::radial::*;
use diracband_core::*;
use diracband_specfun::{bessel_i, bessel_j, gamma_half, HalfIntOrder};
use proptest::prelude::*;

fn sector(two_j: i64, spinor: SpinorType) -> AngularSector {
    AngularSector::top(two_j, spinor).unwrap()
}

fn ratio_spread(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    // largest deviation of a from (best constant)·b, relative to max|a|
    let (mut num, mut den) = (0.0, 0.0);
    for (p, q) in a.iter().zip(b) {
        num += p.0 * q.0 + p.1 * q.1;
        den += q.0 * q.0 + q.1 * q.1;
    }
    let s = num / den;
    let scale = a.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max);
    a.iter().zip(b).map(|(p, q)| (p.0 - s * q.0).abs().max((p.1 - s * q.1).abs())).fold(0.0, f64::max) / scale
}

/// Edge and bulk profiles written out directly from I_ν and J_ν values, as
/// an independent route to the same functions.
fn direct_profile(spinor: SpinorType, ell: u32, energy: f64, mu: f64, r: f64) -> (f64, f64) {
    let a = HalfIntOrder::ell_plus_half(ell);
    let b = a.next();
    let edge = energy.abs() < mu.abs();
    let sp = (mu + energy).abs().sqrt();
    let sm = (mu - energy).abs().sqrt();
    let kappa = sp * sm;
    let x = kappa * r;
    let z = |nu: HalfIntOrder| {
        if edge {
            bessel_i(nu, x).unwrap() / x.sqrt()
        } else {
            bessel_j(nu, x).unwrap() / x.sqrt()
        }
    };
    match (spinor, edge) {
        (SpinorType::Phi, true) => (mu.signum() * sp * z(a), sm * z(b)),
        (SpinorType::Psi, true) => (mu.signum() * sp * z(b), sm * z(a)),
        (SpinorType::Phi, false) => (if energy > 0.0 { -sp } else { sp } * z(a), sm * z(b)),
        (SpinorType::Psi, false) => (if energy < 0.0 { -sp } else { sp } * z(b), sm * z(a)),
    }
}

#[test]
fn bessel_forms_match_direct_evaluation() {
    let grid = check_grid(1.5);
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        for two_j in [1, 7, 21] {
            let s = sector(two_j, spinor);
            for &(e, mu) in &[(0.3f64, 1.2f64), (-0.3, 1.2), (0.4, -2.0), (-1.1, -2.0), (3.0, 0.5), (-3.0, 0.5), (4.0, -1.0), (-4.0, -1.0)] {
                let p = if e.abs() < mu.abs() { edge_profile(&s, e, mu) } else { bulk_profile(&s, e, mu) }.unwrap();
                for &r in &grid {
                    let (f, g) = p.eval(r).unwrap();
                    let (fd, gd) = direct_profile(spinor, s.ell(), e, mu, r);
                    let scale = fd.abs().max(gd.abs());
                    assert!((f - fd).abs() <= 1e-11 * scale, "f {spinor:?} j2={two_j} E={e} μ={mu} r={r}: {f} vs {fd}");
                    assert!((g - gd).abs() <= 1e-11 * scale, "g {spinor:?} j2={two_j} E={e} μ={mu} r={r}: {g} vs {gd}");
                }
            }
        }
    }
}

#[test]
fn profiles_solve_the_radial_system() {
    let grid: Vec<f64> = check_grid(2.0).into_iter().step_by(10).collect();
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        for two_j in [1, 7] {
            let s = sector(two_j, spinor);
            for &(e, mu) in &[(0.2f64, 0.9f64), (-0.5, -1.7), (2.5, 0.4), (-2.5, 0.4), (0.0, 0.0), (1.3, 0.0)] {
                let p = regular_solution(&s, e, mu);
                assert!(p.ode_residual(&grid).unwrap() < 1e-9, "{spinor:?} E={e} μ={mu}");
                if e.abs() < mu.abs() {
                    assert!(edge_profile(&s, e, mu).unwrap().ode_residual(&grid).unwrap() < 1e-9);
                } else if e.abs() > mu.abs() {
                    assert!(bulk_profile(&s, e, mu).unwrap().ode_residual(&grid).unwrap() < 1e-9);
                }
            }
            for case in [CriticalCase::EEqPlusMu, CriticalCase::EEqMinusMu] {
                for mu in [0.8, -1.4] {
                    let p = critical_profile(&s, case, mu);
                    assert!(p.ode_residual(&grid).unwrap() < 1e-9, "{spinor:?} {case:?} μ={mu}");
                }
            }
        }
    }
}

#[test]
fn bessel_forms_are_multiples_of_the_regular_solution() {
    let grid = check_grid(3.0);
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = sector(5, spinor);
        for &(e, mu) in &[(0.5f64, 1.0f64), (-0.5, 1.0), (0.5, -1.0), (-0.5, -1.0), (2.0, 1.0), (-2.0, 1.0), (2.0, -1.0), (-2.0, -1.0)] {
            let reference = regular_solution(&s, e, mu).eval_grid(&grid).unwrap();
            let p = if e.abs() < mu.abs() { edge_profile(&s, e, mu) } else { bulk_profile(&s, e, mu) }.unwrap();
            let spread = ratio_spread(&p.eval_grid(&grid).unwrap(), &reference);
            assert!(spread < 1e-12, "{spinor:?} E={e} μ={mu}: {spread}");
        }
    }
}

#[test]
fn critical_profiles_are_limits_of_the_regular_solution() {
    let grid = check_grid(2.0);
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = sector(7, spinor);
        for mu in [0.6, -0.6] {
            for (case, e) in [(CriticalCase::EEqPlusMu, mu), (CriticalCase::EEqMinusMu, -mu)] {
                let exact = critical_profile(&s, case, mu).eval_grid(&grid).unwrap();
                let reduced = regular_solution(&s, e, mu).eval_grid(&grid).unwrap();
                assert!(ratio_spread(&reduced, &exact) < 1e-13, "{spinor:?} {case:?} μ={mu}");
            }
        }
    }
}

#[test]
fn near_the_lines_the_reduced_form_takes_over() {
    let s = sector(7, SpinorType::Phi);
    let mu = 0.9;
    let e = mu - 1e-10;
    let p = edge_profile(&s, e, mu).unwrap();
    assert_eq!(p.normalization, Normalization::Reduced);
    let (f, g) = p.eval(1.0).unwrap();
    assert!(f.is_finite() && g.is_finite() && f != 0.0);
    let q = edge_profile(&s, mu - 1e-3, mu).unwrap();
    assert_eq!(q.normalization, Normalization::Prefactor);
}

#[test]
fn zero_mode_limit_of_reduced_state() {
    // At (μ, E) = (0, 0) the reduced states are exactly r^ℓ/Γ(ℓ+3/2) in the
    // regular component and zero in the other.
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = sector(7, spinor);
        let p = reduced_edge_state(&s, 0.0, 0.0).unwrap();
        for r in [0.1, 0.5, 1.0] {
            let (f, g) = p.eval(r).unwrap();
            let z = r.powi(3) / gamma_half(9);
            let (want_f, want_g) = if spinor == SpinorType::Phi { (z, 0.0) } else { (0.0, z) };
            assert!((f - want_f).abs() < 1e-15 && (g - want_g).abs() < 1e-15);
        }
    }
}

#[test]
fn regime_violations_are_reported() {
    let s = sector(3, SpinorType::Phi);
    assert!(matches!(edge_profile(&s, 2.0, 1.0), Err(CoreError::Regime { .. })));
    assert!(matches!(bulk_profile(&s, 0.5, 1.0), Err(CoreError::Regime { .. })));
    assert!(matches!(edge_profile(&s, 1.0, 1.0), Err(CoreError::Regime { .. })));
    assert!(matches!(reduced_edge_state(&s, 1.5, 1.0), Err(CoreError::Regime { .. })));
    assert!(matches!(reduced_bulk_state(&s, 0.5, 1.0), Err(CoreError::Regime { .. })));
    assert!(reduced_edge_state(&s, 1.0, 1.0).is_ok());
    assert!(reduced_bulk_state(&s, -1.0, 1.0).is_ok());
}

#[test]
fn classification() {
    assert_eq!(classify(0.5, 1.0, 1e-9), Regime::Edge);
    assert_eq!(classify(-1.5, 1.0, 1e-9), Regime::Bulk);
    assert_eq!(classify(1.0 + 1e-12, -1.0, 1e-9), Regime::Critical);
}

#[test]
fn unit_normalization() {
    let s = sector(7, SpinorType::Psi);
    let p = bulk_profile(&s, 3.0, 0.2).unwrap().normalized(2.0).unwrap();
    assert_eq!(p.normalization, Normalization::UnitL2);
    assert!((p.l2_norm_sqr(2.0).unwrap() - 1.0).abs() < 1e-13);
    // ∫₀^1 (r³)² r² dr = 1/9 for the critical Φ profile at E = μ
    let c = critical_profile(&sector(7, SpinorType::Phi), CriticalCase::EEqPlusMu, 1.0);
    assert!((c.l2_norm_sqr(1.0).unwrap() - 1.0 / 9.0).abs() < 1e-14);
}

#[test]
fn check_grid_shape() {
    let g = check_grid(4.0);
    assert_eq!(g.len(), 200);
    assert!((g[0] - 0.04).abs() < 1e-15 && (g[199] - 4.0).abs() < 1e-14);
    assert!(g.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn matched_distance_ignores_scale() {
    let a = vec![(1.0, 2.0), (3.0, -1.0)];
    let b: Vec<(f64, f64)> = a.iter().map(|p| (-7.5 * p.0, -7.5 * p.1)).collect();
    assert!(matched_sup_distance(&a, &b) < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_solution_is_continuous_across_the_lines(
        two_j in prop::sample::select(vec![1i64, 3, 7, 11]),
        mu in -3.0f64..3.0,
        eps in 1e-9f64..1e-6,
        phi in proptest::bool::ANY,
    ) {
        prop_assume!(mu.abs() > 1e-3);
        let s = sector(two_j, if phi { SpinorType::Phi } else { SpinorType::Psi });
        let inside = regular_solution(&s, mu * (1.0 - eps), mu).eval(1.0).unwrap();
        let outside = regular_solution(&s, mu * (1.0 + eps), mu).eval(1.0).unwrap();
        let scale = inside.0.abs().max(inside.1.abs());
        prop_assert!((inside.0 - outside.0).abs() < 1e-4 * scale);
        prop_assert!((inside.1 - outside.1).abs() < 1e-4 * scale);
    }

    #[test]
    fn regular_solution_solves_the_system(
        two_j in prop::sample::select(vec![1i64, 5, 9]),
        e in -4.0f64..4.0,
        mu in -4.0f64..4.0,
        phi in proptest::bool::ANY,
    ) {
        let s = sector(two_j, if phi { SpinorType::Phi } else { SpinorType::Psi });
        let grid = [0.2, 0.5, 0.9, 1.4];
        prop_assert!(regular_solution(&s, e, mu).ode_residual(&grid).unwrap() < 1e-8);
    }
}
