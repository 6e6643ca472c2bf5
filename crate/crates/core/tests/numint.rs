use std::collections::BTreeMap;

use painleve_core::catalog::{EquationId, FamilyId};
use painleve_core::diffpoly::DiffExpr;
use painleve_core::exactnum::{rat, Atom};
use painleve_core::numint::{
    integrate, integrate_field, residual_norm, residual_norm_field, NumIntError, NumericAssignment, Sample, Trajectory,
    TrajectoryStatus, VectorField, STENCIL_ORDER,
};

fn exp_field() -> VectorField {
    VectorField::from_exprs("exp", &["y"], 1, &[DiffExpr::jet("y", 0)], &[]).unwrap()
}

/// `y′ = s·(y² + ½t)`.
fn riccati_field(s: i64) -> VectorField {
    let y = DiffExpr::jet("y", 0);
    let rhs = y.pow(2).add(&DiffExpr::t().scale(&rat(1, 2))).scale(&rat(s, 1));
    VectorField::from_exprs("riccati", &["y"], 1, &[rhs], &[]).unwrap()
}

fn pii(alpha: &str) -> EquationId {
    EquationId::parse(FamilyId::PII, alpha).unwrap()
}

fn global_error(h: f64) -> f64 {
    let tr = integrate_field(&exp_field(), &[1.0], 0.0, 1.0, h).unwrap();
    (tr.last().unwrap().state[0] - std::f64::consts::E).abs()
}

fn sup_distance(a: &Trajectory, b: &Trajectory, component: usize) -> f64 {
    a.samples
        .iter()
        .zip(&b.samples)
        .map(|(x, y)| {
            assert!((x.t - y.t).abs() < 1e-12);
            (x.state[component] - y.state[component]).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn exponential_reaches_e() {
    assert!(global_error(1e-3) < 1e-8);
}

#[test]
fn rk4_convergence_slope() {
    let hs: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
    let pts: Vec<(f64, f64)> = hs.iter().map(|&h| (h.ln(), global_error(h).ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    assert!(slope >= 3.7, "slope {slope}");
}

#[test]
fn riccati_solution_solves_pii_minus_half() {
    let (t0, y0) = (1.0, 0.3);
    let ric = integrate_field(&riccati_field(-1), &[y0], t0, 2.0, 1e-4).unwrap();
    let full = integrate(&pii("-1/2"), &NumericAssignment::new(), None, &[y0, -y0 * y0 - t0 / 2.0], t0, 2.0, 1e-4).unwrap();
    assert_eq!(ric.status, TrajectoryStatus::Completed);
    assert_eq!(full.status, TrajectoryStatus::Completed);
    assert_eq!(ric.samples.len(), full.samples.len());
    let d = sup_distance(&ric, &full, 0);
    assert!(d <= 1e-6, "sup distance {d}");
}

#[test]
fn riccati_does_not_solve_pii_zero() {
    let (t0, y0) = (1.0, 0.3);
    let ric = integrate_field(&riccati_field(-1), &[y0], t0, 2.0, 1e-3).unwrap();
    let full = integrate(&pii("0"), &NumericAssignment::new(), None, &[y0, -y0 * y0 - t0 / 2.0], t0, 2.0, 1e-3).unwrap();
    assert!(sup_distance(&ric, &full, 0) > 1e-2);
}

fn pv_map(cq: f64, cp: f64, v: &[f64]) -> (f64, f64) {
    let q = cq / (cq - 1.0);
    let p = -(cq - 1.0).powi(2) * cp + (v[2] - v[0]) * (cq - 1.0);
    (q, p)
}

#[test]
fn pv_systems_agree_through_the_change_of_variables() {
    let eq = EquationId::parse(FamilyId::PV, "1/10, 1/5, -1/2, 1/5").unwrap();
    let v = [0.1, 0.2, -0.5, 0.2];
    let (cq0, cp0) = (3.0, 0.1);
    let cap = integrate(&eq, &NumericAssignment::new(), Some("QP"), &[cq0, cp0], 1.0, 2.0, 1e-4).unwrap();
    let (q0, p0) = pv_map(cq0, cp0, &v);
    let small = integrate(&eq, &NumericAssignment::new(), Some("qp"), &[q0, p0], 1.0, 2.0, 1e-4).unwrap();
    assert_eq!(cap.status, TrajectoryStatus::Completed);
    assert_eq!(small.status, TrajectoryStatus::Completed);
    let mut d: f64 = 0.0;
    for (a, b) in cap.samples.iter().zip(&small.samples) {
        let (q, p) = pv_map(a.state[0], a.state[1], &v);
        d = d.max((q - b.state[0]).abs()).max((p - b.state[1]).abs());
    }
    assert!(d <= 1e-5, "sup distance {d}");
}

#[test]
fn residual_shrinks_with_step() {
    let eq = pii("1/3");
    let run = |h| integrate(&eq, &NumericAssignment::new(), None, &[0.2, -0.1], 0.0, 1.0, h).unwrap();
    let coarse = residual_norm(&run(0.02), &eq).unwrap();
    let fine = residual_norm(&run(0.01), &eq).unwrap();
    assert_eq!(coarse.discretization_order, STENCIL_ORDER);
    assert!(coarse.samples_used > 0 && fine.samples_used > 0);
    assert!(coarse.value >= 8.0 * fine.value, "{} vs {}", coarse.value, fine.value);
}

fn constant_trajectory(n: usize) -> Trajectory {
    Trajectory {
        family: Some(FamilyId::PII),
        system: "PII/scalar".into(),
        state_names: vec!["y".into(), "y'".into()],
        params: BTreeMap::from([("alpha".to_string(), 0.0)]),
        step: 0.1,
        samples: (0..n).map(|i| Sample { t: 1.0 + 0.1 * i as f64, state: vec![1.0, 0.0] }).collect(),
        status: TrajectoryStatus::Completed,
    }
}

#[test]
fn constant_trajectory_has_a_large_residual() {
    let r = residual_norm(&constant_trajectory(20), &pii("0")).unwrap();
    assert!(r.value > 1.0, "{}", r.value);
    assert!(r.warning.is_none());
}

#[test]
fn empty_trajectory_is_vacuous() {
    let r = residual_norm(&constant_trajectory(0), &pii("0")).unwrap();
    assert_eq!(r.value, 0.0);
    assert_eq!(r.samples_used, 0);
    assert!(r.warning.is_some());
    let r = residual_norm_field(&constant_trajectory(3), &riccati_field(1));
    assert!(r.warning.is_some());
}

#[test]
fn integration_is_deterministic() {
    let eq = EquationId::parse(FamilyId::PIV, "tau1, 1/3, -tau1 - 1/3").unwrap();
    let assign = NumericAssignment::new().with_atom(Atom::tau(1), 0.37);
    let a = integrate(&eq, &assign, None, &[0.1, 0.2], 0.0, 0.5, 1e-3).unwrap();
    let b = integrate(&eq, &assign, None, &[0.1, 0.2], 0.0, 0.5, 1e-3).unwrap();
    assert_eq!(a.samples.len(), b.samples.len());
    for (x, y) in a.samples.iter().zip(&b.samples) {
        assert_eq!(x.t.to_bits(), y.t.to_bits());
        assert!(x.state.iter().zip(&y.state).all(|(p, q)| p.to_bits() == q.to_bits()));
    }
}

#[test]
fn errors_and_statuses() {
    let none = NumericAssignment::new();
    let piii = EquationId::parse(FamilyId::PIII, "0, 1").unwrap();
    assert!(matches!(
        integrate(&piii, &none, None, &[1.0, 1.0], -1.0, 1.0, 1e-2),
        Err(NumIntError::SingularT { .. })
    ));
    assert!(integrate(&piii, &none, None, &[1.0, 1.0], 1.0, 1.5, 1e-2).is_ok());
    let pvi = EquationId::parse(FamilyId::PVI, "0, 0, 0, 0").unwrap();
    assert!(matches!(
        integrate(&pvi, &none, None, &[0.0, 0.0], 1.0, 2.0, 1e-2),
        Err(NumIntError::UnsupportedFamily(FamilyId::PVI))
    ));
    assert!(matches!(
        integrate(&pii("tau1"), &none, None, &[0.0, 0.0], 0.0, 1.0, 1e-2),
        Err(NumIntError::UnassignedAtom(_))
    ));
    assert!(matches!(
        integrate(&pii("0"), &none, None, &[0.0], 0.0, 1.0, 1e-2),
        Err(NumIntError::StateDimension { expected: 2, got: 1 })
    ));
    assert!(matches!(
        integrate(&pii("0"), &none, None, &[0.0, 0.0], 0.0, 1.0, 0.0),
        Err(NumIntError::BadStep(_))
    ));

    // y′ = y² from y(0) = 1 has a pole at t = 1.
    let sq = VectorField::from_exprs("square", &["y"], 1, &[DiffExpr::jet("y", 0).pow(2)], &[]).unwrap();
    let tr = integrate_field(&sq, &[1.0], 0.0, 2.0, 1e-3).unwrap();
    match tr.status {
        TrajectoryStatus::Blowup { t } => assert!((0.99..=1.01).contains(&t), "{t}"),
        other => panic!("expected blow-up, got {other:?}"),
    }
    assert!(tr.samples.iter().all(|s| s.state[0].abs() <= 1e8));
}

#[test]
fn backwards_integration_and_csv() {
    let tr = integrate_field(&exp_field(), &[1.0], 1.0, 0.0, 1e-3).unwrap();
    assert!((tr.last().unwrap().state[0] - (-1.0f64).exp()).abs() < 1e-8);
    assert!(tr.samples.windows(2).all(|w| w[1].t < w[0].t));
    assert_eq!(tr.last().unwrap().t, 0.0);
    let mut out = Vec::new();
    tr.write_csv(&mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(text.starts_with("t,y\n"));
    assert_eq!(text.lines().count(), tr.samples.len() + 1);
}
