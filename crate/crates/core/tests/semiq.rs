use diracband_core::semiq::*;
use diracband_core::*;
use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64 as C64;
use proptest::prelude::*;

fn max_abs4(m: &Matrix4<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn max_abs2(m: &Matrix2<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn norm(k: [f64; 3]) -> f64 {
    (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt()
}

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

const I: C64 = C64::new(0.0, 1.0);

fn k_strategy() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-5.0f64..5.0)
}

#[test]
fn hamiltonian_layout() {
    // K = μσ₃⊗1 + σ₂⊗(k·σ)
    let [_, s2, s3] = pauli();
    let (k, mu) = ([0.3, -1.2, 2.0], 0.7);
    let expected = kron(&s3, &identity2()) * c(mu) + kron(&s2, &k_dot_sigma(k));
    assert!(max_abs4(&(k_matrix(k, mu) - expected)) < 1e-15);
    assert!(k_matrix(k, mu).trace().norm() < 1e-15);
}

#[test]
fn origin_is_degenerate() {
    assert!(matches!(k_hamiltonian([0.0; 3], 0.0), Err(CoreError::DegenerateOrigin)));
    assert!(matches!(map_q(Sign::Plus, [0.0; 3], 0.0), Err(CoreError::DegenerateOrigin)));
    assert!(matches!(map_h(Sign::Minus, [0.0; 3], 0.0), Err(CoreError::DegenerateOrigin)));
    assert!(k_hamiltonian([0.0; 3], 0.3).is_ok());
}

#[test]
fn eigenvectors_fail_at_exceptional_points() {
    // up gauge needs λ ≠ μ, down gauge needs λ ≠ −μ
    let s = k_hamiltonian([0.0; 3], 0.8).unwrap();
    assert!(matches!(eigenvectors(&s, Sign::Plus, Gauge::Up), Err(CoreError::ExceptionalPoint { .. })));
    assert!(eigenvectors(&s, Sign::Plus, Gauge::Down).is_ok());
    assert!(matches!(eigenvectors(&s, Sign::Minus, Gauge::Down), Err(CoreError::ExceptionalPoint { .. })));
    assert!(eigenvectors(&s, Sign::Minus, Gauge::Up).is_ok());
}

#[test]
fn transition_matrices_are_minus_and_plus_i_k_sigma() {
    for (k, mu) in [([1.0, 2.0, -0.5], 0.7), ([0.1, 0.0, 0.0], -2.0), ([-3.0, 0.4, 1.1], 0.0)] {
        let s = k_hamiltonian(k, mu).unwrap();
        let ks = k_dot_sigma(k) / c(norm(k));
        let up = transition_matrix(&s, Sign::Plus).unwrap();
        let down = transition_matrix(&s, Sign::Minus).unwrap();
        assert!(max_abs2(&(up + ks * I)) < 1e-14, "U+ at {k:?}, {mu}");
        assert!(max_abs2(&(down - ks * I)) < 1e-14, "U− at {k:?}, {mu}");
        // and the gauges really are related by it
        let v_up = eigenvectors(&s, Sign::Plus, Gauge::Up).unwrap();
        let v_down = eigenvectors(&s, Sign::Plus, Gauge::Down).unwrap();
        assert!((v_up * up - v_down).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-14);
    }
}

#[test]
fn q_blocks_match_the_block_maps() {
    let (k, mu) = ([0.4, -0.9, 1.7], -0.6);
    let s = k_hamiltonian(k, mu).unwrap();
    // the blocks are (μ ± ik·σ)/λ±, and λ₋ = −λ₊ flips the sign of the second
    assert!(max_abs2(&(q_block(&s, Sign::Plus) - map_h(Sign::Plus, k, mu).unwrap())) < 1e-14);
    assert!(max_abs2(&(q_block(&s, Sign::Minus) + map_h(Sign::Minus, k, mu).unwrap())) < 1e-14);
    // the diagonal blocks vanish after conjugation
    let (qp, qm) = q_matrices(&s);
    for q in [qp, qm] {
        let g = conjugate_off_diagonal(&q);
        for (r, col) in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            assert!(g[(r, col)].norm() < 1e-15);
        }
        assert!(max_abs4(&(q * q - Matrix4::identity())) < 1e-14);
    }
}

#[test]
fn s3_points_and_block_maps() {
    let (k, mu) = ([0.5, 1.5, -0.2], 0.9);
    let q = map_q(Sign::Plus, k, mu).unwrap();
    let h = map_h(Sign::Plus, k, mu).unwrap();
    // h = [[a, −b̄], [b, ā]] with q = (−ib, iā)
    let (a, b) = (h[(0, 0)], h[(1, 0)]);
    assert!((h[(0, 1)] + b.conj()).norm() < 1e-15 && (h[(1, 1)] - a.conj()).norm() < 1e-15);
    assert!((q.z1 + I * b).norm() < 1e-15);
    assert!((q.z2 - I * a.conj()).norm() < 1e-15);
    assert!((q.norm_sqr() - 1.0).abs() < 1e-15);
    let x = q.to_r4();
    assert_eq!(x, [q.z1.re, q.z1.im, q.z2.re, q.z2.im]);
}

#[test]
fn rotated_block_map_has_determinant_minus_one() {
    let (k, mu) = ([0.2, -0.7, 0.3], 1.1);
    for sign in [Sign::Plus, Sign::Minus] {
        let r = map_h_rotated(sign, k, mu).unwrap();
        assert!((r.determinant() + c(1.0)).norm() < 1e-14);
        assert!((map_h(sign, k, mu).unwrap().determinant() - c(1.0)).norm() < 1e-14);
    }
    let plus = map_h_rotated(Sign::Plus, k, mu).unwrap();
    assert!(max_abs2(&(plus - map_h(Sign::Minus, k, mu).unwrap() * I)) < 1e-15);
}

#[test]
fn su2_equivariance() {
    // (1⊗g)K(k)(1⊗g⁻¹) = K(Gk)
    let theta = 0.83f64;
    let n = [0.36, -0.48, 0.8];
    let g = identity2() * c((theta / 2.0).cos()) - k_dot_sigma(n) * (I * (theta / 2.0).sin());
    let rot = rotation_from_su2(&g);
    assert!((rot.determinant() - 1.0).abs() < 1e-14);
    assert!((rot * rot.transpose() - nalgebra::Matrix3::identity()).abs().max() < 1e-14);
    let k = [1.0, -2.0, 0.5];
    let gk = rot * nalgebra::Vector3::new(k[0], k[1], k[2]);
    let big_g = kron(&identity2(), &g);
    let lhs = big_g * k_matrix(k, 0.4) * big_g.adjoint();
    assert!(max_abs4(&(lhs - k_matrix([gk[0], gk[1], gk[2]], 0.4))) < 1e-14);
}

#[test]
fn pullback_density_closed_form() {
    // q±*ω = ±μ/(k²+μ²)² dk₁dk₂dk₃
    for (k, mu) in [([0.3, 0.1, -0.4], 0.5), ([2.0, -1.0, 0.5], -1.3), ([0.0, 0.0, 0.0], 0.7)] {
        let l2 = norm(k).powi(2) + mu * mu;
        let want = mu / (l2 * l2);
        assert!((pullback_density(Sign::Plus, k, mu).unwrap() - want).abs() < 1e-13 * want.abs());
        assert!((pullback_density(Sign::Minus, k, mu).unwrap() + want).abs() < 1e-13 * want.abs());
    }
}

#[test]
fn trace_form_density_closed_form() {
    // tr((h₊†dh₊)³) = 12μ/(k²+μ²)² dk₁dk₂dk₃, to O(h²)
    for (k, mu) in [([0.3, 0.1, -0.4], 0.5), ([1.0, -1.0, 0.5], -1.3)] {
        let l2 = norm(k).powi(2) + mu * mu;
        let want = 12.0 * mu / (l2 * l2);
        let got = trace_form_density(k, mu, 1e-4).unwrap();
        assert!((got - want).abs() < 1e-6 * want.abs(), "{got} vs {want}");
    }
}

#[test]
fn analytic_degrees() {
    for (mu, plus) in [(0.3, 0.5), (-2.0, -0.5)] {
        assert_eq!(degree_analytic(Sign::Plus, mu).unwrap().value, plus);
        assert_eq!(degree_analytic(Sign::Minus, mu).unwrap().value, -plus);
    }
    assert!(matches!(degree_analytic(Sign::Plus, 0.0), Err(CoreError::UndefinedDegree)));
}

#[test]
fn quadrature_degrees() {
    for mu in [0.05, 0.7, -3.0] {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = degree_quadrature(sign, mu, &QuadratureParams::default()).unwrap();
            let exact = degree_analytic(sign, mu).unwrap().value;
            assert!((r.value - exact).abs() < 1e-6, "{sign:?} μ={mu}: {}", r.value);
            let raw = r.raw_integral.unwrap();
            assert!((raw.abs() - std::f64::consts::PI.powi(2)).abs() < 1e-5);
        }
    }
}

#[test]
fn truncated_quadrature_with_tail() {
    let p = QuadratureParams { layout: RadialLayout::TruncatedWithTail, n_radial: 400, k_max: Some(40.0), ..Default::default() };
    let r = degree_quadrature(Sign::Minus, 0.8, &p).unwrap();
    assert!((r.value + 0.5).abs() < 1e-4, "{}", r.value);
    let bad = QuadratureParams { k_max: Some(1.0), ..p };
    assert!(matches!(degree_quadrature(Sign::Plus, 0.8, &bad), Err(CoreError::InvalidParameter(_))));
}

#[test]
fn quadrature_reports_non_convergence() {
    // the plain truncated layout converges slowly in the radial node count
    let p = QuadratureParams {
        layout: RadialLayout::TruncatedWithTail,
        k_max: Some(50.0),
        n_radial: 8,
        tolerance: 1e-6,
        ..Default::default()
    };
    assert!(matches!(degree_quadrature(Sign::Plus, 1.0, &p), Err(CoreError::NonConvergence { .. })));
}

#[test]
fn trace_form_degree_on_a_coarse_grid() {
    let p = TraceFormParams { step: Some(0.1), ball: 6.0, exec: Exec::Sequential };
    let r = degree_trace_form(1.0, &p).unwrap();
    assert!((r.value - 0.5).abs() < 1e-2, "{}", r.value);
    let par = degree_trace_form(1.0, &TraceFormParams { exec: Exec::Parallel, ..p }).unwrap();
    assert_eq!(r, par);
    let neg = degree_trace_form(-1.0, &p).unwrap();
    assert!((neg.value + r.value).abs() < 1e-12);
}

#[test]
fn trace_form_rejects_coarse_grids() {
    let p = TraceFormParams { step: Some(0.3), ..Default::default() };
    assert!(matches!(degree_trace_form(1.0, &p), Err(CoreError::GridTooCoarse { .. })));
    assert!(matches!(degree_trace_form(0.0, &TraceFormParams::default()), Err(CoreError::UndefinedDegree)));
}

#[test]
fn degree_jumps_across_zero_mass() {
    let analytic = degree_jumps(0.4, degree_analytic).unwrap();
    assert_eq!((analytic.q_plus, analytic.q_minus, analytic.net), (1.0, -1.0, 0.0));
    let quad = degree_jumps(0.4, |s, m| degree_quadrature(s, m, &QuadratureParams::default())).unwrap();
    assert!((quad.q_plus - 1.0).abs() < 1e-6 && (quad.q_minus + 1.0).abs() < 1e-6 && quad.net.abs() < 1e-12);
}

#[test]
fn eigenspaces_exchange_at_zero_mass() {
    let r = eigenspace_crossing_check(&[-0.5, -1e-3, 1e-3, 0.5]).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.projector_deviation.len(), 4);
    // (λ₊ − λ₋)/2|k| = λ/|k| ≥ 1, approaching 1 at small mass
    assert!(r.min_relative_gap >= 1.0 && r.min_relative_gap < 1.001, "{}", r.min_relative_gap);
}

#[test]
fn degree_report_serializes() {
    let r = degree_quadrature(Sign::Plus, 1.0, &QuadratureParams::default()).unwrap();
    let json = serde_json::to_value(r).unwrap();
    assert_eq!(json["method"], "Quadrature");
    assert!(json["raw_integral"].is_f64());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spectrum_and_projectors(k in k_strategy(), mu in -4.0f64..4.0) {
        prop_assume!(norm(k) + mu.abs() > 1e-3);
        let s = k_hamiltonian(k, mu).unwrap();
        let l = (norm(k).powi(2) + mu * mu).sqrt();
        let eig = s.numerical_eigenvalues();
        for (got, want) in eig.iter().zip([-l, -l, l, l]) {
            prop_assert!((got - want).abs() < 1e-12 * l.max(1.0));
        }
        prop_assert_eq!(s.multiplicities(1e-9 * l.max(1.0)), vec![2, 2]);
        let (p, m) = (s.projector_plus, s.projector_minus);
        let id = Matrix4::<C64>::identity();
        prop_assert!(max_abs4(&(p * p - p)) < 1e-13);
        prop_assert!(max_abs4(&(p + m - id)) < 1e-14);
        prop_assert!(max_abs4(&(s.matrix * p - p * c(l))) < 1e-12 * l.max(1.0));
        prop_assert!((p.trace() - c(2.0)).norm() < 1e-13);
    }

    #[test]
    fn eigenvector_frames(k in k_strategy(), mu in -4.0f64..4.0, up in proptest::bool::ANY, plus in proptest::bool::ANY) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let gauge = if up { Gauge::Up } else { Gauge::Down };
        let s = k_hamiltonian(k, mu).unwrap();
        let l = s.lambda(sign);
        // stay away from the exceptional set of this gauge
        prop_assume!((if up { l - mu } else { l + mu }).abs() > 1e-3);
        let v = eigenvectors(&s, sign, gauge).unwrap();
        let gram = v.adjoint() * v;
        prop_assert!(max_abs2(&(gram - identity2())) < 1e-12);
        let kv = s.matrix * v - v * c(l);
        prop_assert!(kv.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-12 * l.abs().max(1.0));
        prop_assert!(max_abs4(&(v * v.adjoint() - s.projector(sign))) < 1e-12);
    }

    #[test]
    fn block_maps_are_unitary(k in k_strategy(), mu in -4.0f64..4.0, plus in proptest::bool::ANY) {
        prop_assume!(norm(k) + mu.abs() > 1e-6);
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let h = map_h(sign, k, mu).unwrap();
        prop_assert!(max_abs2(&(h.adjoint() * h - identity2())) < 1e-14);
        prop_assert!((map_q(sign, k, mu).unwrap().norm_sqr() - 1.0).abs() < 1e-14);
    }
}
