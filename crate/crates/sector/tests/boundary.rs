use diracband_sector::*;
use num_complex::Complex64;

fn sector(two_j: i64, spinor: SpinorType) -> AngularSector {
    AngularSector::top(two_j, spinor).unwrap()
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn angles(n: usize) -> Vec<(f64, f64)> {
    // deterministic scatter away from the poles
    (0..n)
        .map(|k| {
            let u = ((k as f64 + 0.5) * 0.618_033_988_75).fract();
            let v = ((k as f64 + 0.5) * 0.414_213_562_37).fract();
            (0.05 + 3.0 * u, 6.2 * v)
        })
        .collect()
}

#[test]
fn eigenvalues_at_mu_zero() {
    let e = aps_boundary_eigen(&sector(3, SpinorType::Phi), 0.0, 1.0).unwrap();
    assert_eq!(e.lambda_minus, -1.0);
    assert_eq!(e.lambda_plus, 3.0);
    // pure spin states
    assert_eq!(e.coeff_minus, [1.0, 0.0]);
    assert!(e.coeff_plus[0].abs() == 0.0 && e.coeff_plus[1] == 1.0);
}

#[test]
fn eigenvalues_closed_form() {
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let e = aps_boundary_eigen(&sector(7, spinor), 1.0, 1.0).unwrap();
        assert!((e.lambda_plus - (1.0 + 17f64.sqrt())).abs() < 1e-14);
        assert!((e.lambda_minus - (1.0 - 17f64.sqrt())).abs() < 1e-14);
    }
    let tiny = aps_boundary_eigen(&sector(7, SpinorType::Phi), 1e-9, 1.0).unwrap();
    assert!(tiny.lambda_plus > 0.0 && tiny.lambda_minus < 0.0);
}

#[test]
fn eigenvectors_diagonalize_block() {
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        for &(tj, mu, r) in &[(1, 0.3, 1.0), (7, -2.0, 1.0), (21, 0.7, 10.0), (7, 0.0, 0.5)] {
            let s = sector(tj, spinor);
            let b = boundary_block(&s, mu, r);
            let e = aps_boundary_eigen(&s, mu, r).unwrap();
            for (v, ev) in [(e.coeff_plus, e.lambda_plus), (e.coeff_minus, e.lambda_minus)] {
                for row in 0..2 {
                    let bv = b[row][0] * v[0] + b[row][1] * v[1];
                    assert!((bv - ev * v[row]).abs() < 1e-13 * (1.0 + ev.abs()));
                }
            }
            let dot = e.coeff_plus[0] * e.coeff_minus[0] + e.coeff_plus[1] * e.coeff_minus[1];
            assert!(dot.abs() < 1e-15);
        }
    }
}

#[test]
fn block_does_not_depend_on_m() {
    let a = AngularSector::new(7, 7, SpinorType::Psi).unwrap();
    let b = AngularSector::new(7, -3, SpinorType::Psi).unwrap();
    assert_eq!(boundary_block(&a, 0.4, 2.0), boundary_block(&b, 0.4, 2.0));
}

#[test]
fn eigenlimits_continuous_at_zero_mass() {
    let s = sector(7, SpinorType::Phi);
    let e = aps_boundary_eigen(&s, 1e-7, 1.0).unwrap();
    assert!((e.lambda_minus + 3.0).abs() < 1e-12);
    assert!((e.lambda_plus - 5.0).abs() < 1e-12);
}

#[test]
fn eigenstates_orthogonal_on_sphere() {
    let q = SphereQuadrature::standard();
    for tm in [7i64, 1, -5] {
        let phi = AngularSector::new(7, tm, SpinorType::Phi).unwrap();
        let psi = phi.with_spinor(SpinorType::Psi);
        let ep = aps_boundary_eigen(&phi, 1.0, 1.0).unwrap();
        let eq = aps_boundary_eigen(&psi, 1.0, 1.0).unwrap();
        let states = [
            (phi, ep.coeff_plus),
            (phi, ep.coeff_minus),
            (psi, eq.coeff_plus),
            (psi, eq.coeff_minus),
        ];
        for a in 0..4 {
            for b in (a + 1)..4 {
                let ip = q.integrate(|t, p| {
                    let (u0, v0) = sector_spinor(&states[a].0, c(states[a].1[0]), c(states[a].1[1]), t, p);
                    let (u1, v1) = sector_spinor(&states[b].0, c(states[b].1[0]), c(states[b].1[1]), t, p);
                    u0.inner(&u1) + v0.inner(&v1)
                });
                assert!(ip.norm() <= 1e-10, "pair {a},{b}: {ip}");
            }
        }
    }
}

#[test]
fn gamma_r_exchanges_eigenstates() {
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = sector(7, spinor);
        let rep = gamma_r_exchange_check(&s, 0.5, 1.0, &angles(50)).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(rep.anticommutator_residual <= 1e-13);
        let zero = gamma_r_exchange_check(&s, 0.0, 1.0, &angles(20)).unwrap();
        assert!(zero.passed);
    }
}

#[test]
fn aps_and_chiral_states_carry_no_normal_current() {
    let q = SphereQuadrature::standard();
    for spinor in [SpinorType::Phi, SpinorType::Psi] {
        let s = sector(7, spinor);
        let e = aps_boundary_eigen(&s, 1.0, 1.0).unwrap();
        for v in [e.coeff_plus, e.coeff_minus] {
            let j = boundary_current(&s, c(v[0]), c(v[1]), 1.0, &q);
            assert!(j.abs() <= 1e-12);
        }
        let lambda: f64 = 0.1;
        let j = boundary_current(&s, c((-lambda).exp()), c(1.0), 10.0, &q);
        assert!(j.abs() <= 1e-12);
    }
}

#[test]
fn mixed_state_carries_current() {
    let q = SphereQuadrature::standard();
    let s = sector(7, SpinorType::Phi);
    let e = aps_boundary_eigen(&s, 1.0, 1.0).unwrap();
    let (alpha, beta) = (c(0.8), Complex64::new(0.0, 0.6));
    let f = alpha * e.coeff_plus[0] + beta * e.coeff_minus[0];
    let g = alpha * e.coeff_plus[1] + beta * e.coeff_minus[1];
    let j = boundary_current(&s, f, g, 1.0, &q);
    assert!(j.abs() > 0.1, "current {j}");
}

#[test]
fn invalid_sectors_rejected() {
    assert_eq!(AngularSector::new(2, 0, SpinorType::Phi), Err(SectorError::InvalidJ(2)));
    assert!(matches!(
        AngularSector::new(3, 5, SpinorType::Phi),
        Err(SectorError::InvalidM { .. })
    ));
    assert!(matches!(
        aps_boundary_eigen(&sector(1, SpinorType::Phi), 1.0, 0.0),
        Err(SectorError::InvalidRadius(_))
    ));
    assert_eq!(AngularSector::two_j_from(3.5), Ok(7));
    assert!(AngularSector::two_j_from(3.0).is_err());
}

#[test]
fn p_eigenvalues() {
    assert_eq!(sector(7, SpinorType::Phi).p_eigenvalue(), 4.0);
    assert_eq!(sector(7, SpinorType::Psi).p_eigenvalue(), -4.0);
}
