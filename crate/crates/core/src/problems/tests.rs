use super::*;
use crate::stepcontrol::{adaptive_integrate_last, fixed_integrate, GenericErk, Options, Tolerances};
use crate::tableau::shipped_methods;
use proptest::prelude::*;

fn kernel(name: &str) -> GenericErk<f64> {
    let t = shipped_methods().into_iter().find(|t| t.name() == name).unwrap();
    GenericErk::new(&t).unwrap()
}

#[test]
fn direct_evaluations() {
    let b = evaluate_rhs(&Problem::Brusselator, 0.0, &[1.5, 3.0]).unwrap();
    assert_eq!(b, vec![1.75, -2.25]);
    let r = evaluate_rhs(&"rigid-body".parse().unwrap(), 0.0, &[0.0, 1.0, 1.0]).unwrap();
    assert_eq!(r, vec![-2.0, 0.0, 0.0]);
    let s3 = 3f64.sqrt();
    let v = evaluate_rhs(&"vdp".parse().unwrap(), 0.0, &[0.0, s3]).unwrap();
    assert_eq!(v, vec![s3, s3]);
}

#[test]
fn wrong_dimension_is_reported() {
    assert!(matches!(
        evaluate_rhs(&Problem::Brusselator, 0.0, &[1.0]),
        Err(ProblemError::Dimension {
            expected: 2,
            found: 1,
            ..
        })
    ));
}

#[test]
fn names_round_trip() {
    for name in Problem::NAMES {
        let p: Problem = name.parse().unwrap();
        assert_eq!(p.to_string(), name);
        assert_eq!(OdeProblem::<f64>::name(&p), name);
        assert_eq!(p.initial_state().len(), p.dimension());
    }
    for bad in ["", "arenstorf", "arenstorf:0", "arenstorf:4", "Vdp", "lorenz"] {
        assert!(
            matches!(bad.parse::<Problem>(), Err(ProblemError::Unknown(_))),
            "{bad}"
        );
    }
}

#[test]
fn initial_groups() {
    let (s1, p, t) = arenstorf_initials(1).unwrap();
    assert_eq!(
        (s1.p_x, s1.p_y, s1.q_x, s1.q_y),
        (0.0, -1.00758510637908238, 0.994, 0.0)
    );
    assert_eq!(t, 17.065216560157962558);
    assert_eq!(p.mu1, 0.012277471);
    assert_eq!(p.mu2, 1.0 - 0.012277471);
    let (s3, _, _) = arenstorf_initials(3).unwrap();
    assert_eq!((s3.q_x, s3.p_y), (1.2, 0.15064248999999985));
    assert!(arenstorf_initials(0).is_err());
    assert!(arenstorf_initials(4).is_err());

    let (r1, _) = s1.radii(&p);
    assert!((r1 - 0.006277471).abs() < 1e-15, "{r1}");
}

#[test]
fn hamiltonian_examples() {
    let p = ArenstorfParams::default();
    let s = ArenstorfState {
        p_x: 0.0,
        p_y: 0.0,
        q_x: p.mu2 + 1.0,
        q_y: 0.0,
    };
    let h = arenstorf_hamiltonian(&s, &p).unwrap();
    // r1 = 1, r2 = 1 + mu1 + mu2 = 2
    assert!((h + (p.mu1 + p.mu2 / 2.0)).abs() < 1e-15);

    let (s1, _, _) = arenstorf_initials(1).unwrap();
    assert!(arenstorf_hamiltonian(&s1, &p).unwrap().is_finite());

    let s = ArenstorfState {
        p_x: 0.3,
        p_y: -0.7,
        q_x: 0.2,
        q_y: 0.5,
    };
    let flipped = ArenstorfState {
        p_x: -0.3,
        p_y: 0.7,
        ..s
    };
    let lhs = arenstorf_hamiltonian(&flipped, &p).unwrap();
    let rhs = arenstorf_hamiltonian(&s, &p).unwrap() - 2.0 * (s.p_x * s.q_y - s.p_y * s.q_x);
    assert!((lhs - rhs).abs() < 1e-15);
}

#[test]
fn collisions_are_singular() {
    let p = ArenstorfParams::default();
    let prob = Problem::arenstorf(1).unwrap();
    for q in [[p.mu2, 0.0], [-p.mu1, 0.0]] {
        assert!(matches!(
            evaluate_rhs(&prob, 0.0, &[0.1, 0.2, q[0], q[1]]),
            Err(ProblemError::Singularity(_))
        ));
        let s = ArenstorfState {
            p_x: 0.0,
            p_y: 0.0,
            q_x: q[0],
            q_y: q[1],
        };
        assert!(arenstorf_hamiltonian(&s, &p).is_err());
    }
    let mut d = [0.0; 4];
    OdeProblem::<f64>::rhs(&prob, 0.0, &[0.0, 0.0, p.mu2, 0.0], &mut d);
    assert!(d.iter().all(|v| v.is_nan()));
    assert!(ArenstorfParams::new(1.5).is_err());
}

#[test]
fn closure_examples() {
    let s = [0.1, 0.2, 0.994, 0.0];
    assert_eq!(closure_error(&s, &s), 0.0);
    let e = [9.0, -9.0, 0.994 + 3e-13, 4e-13];
    assert!((closure_error(&e, &s) - 5e-13).abs() < 1e-16);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_equations_match_hamiltonian_gradient(
        p_x in -2.0f64..2.0, p_y in -2.0f64..2.0, q_x in -1.5f64..1.5, q_y in -1.5f64..1.5,
    ) {
        let params = ArenstorfParams::default();
        let s = ArenstorfState { p_x, p_y, q_x, q_y };
        let (r1, r2) = s.radii(&params);
        prop_assume!(r1 > 0.05 && r2 > 0.05);
        let h = |v: [f64; 4]| arenstorf_hamiltonian(&ArenstorfState::from_slice(&v), &params).unwrap();
        let grad = |i: usize| {
            let step = 1e-6;
            let mut up = s.to_array();
            let mut down = s.to_array();
            up[i] += step;
            down[i] -= step;
            (h(up) - h(down)) / (2.0 * step)
        };
        // Hamilton: p' = -dH/dq, q' = dH/dp
        let want = [-grad(2), -grad(3), grad(0), grad(1)];
        let got = evaluate_rhs(&Problem::arenstorf(1).unwrap(), 0.0, &s.to_array()).unwrap();
        for (g, w) in got.iter().zip(want) {
            prop_assert!((g - w).abs() <= 1e-6 * w.abs().max(1.0), "{:?} vs {:?}", got, want);
        }
    }
}

/// `I2 x1^2 - I1 x2^2` and `I3 x2^2 - I2 x3^2`, conserved since
/// `d(x1^2)/dt = 2 I1 x1 x2 x3` and `d(x2^2)/dt = 2 I2 x1 x2 x3`.
fn rigid_invariants(p: &RigidBodyParams, x: &[f64]) -> [f64; 2] {
    [
        p.i2 * x[0] * x[0] - p.i1 * x[1] * x[1],
        p.i3 * x[1] * x[1] - p.i2 * x[2] * x[2],
    ]
}

fn max_invariant_drift(method: &str, h: f64) -> f64 {
    let p = RigidBodyParams::default();
    let traj = fixed_integrate(&kernel(method), &p, h, &[0.0, 1.0, 1.0], 0.0, 12.0).unwrap();
    let q0 = rigid_invariants(&p, traj.state(0));
    traj.rows()
        .map(|(_, x)| {
            let q = rigid_invariants(&p, x);
            ((q[0] - q0[0]) / q0[0]).abs().max(((q[1] - q0[1]) / q0[1]).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn rigid_body_invariants_drift_at_method_order() {
    assert!(max_invariant_drift("DOPRI5", 1e-3) <= 1e-6);
    // At least order 4; this pair happens to conserve the invariants to order 5.
    let ratio = max_invariant_drift("ERK43b", 0.05) / max_invariant_drift("ERK43b", 0.025);
    assert!(ratio > 0.8 * 16.0, "{ratio}");
}

#[test]
fn brusselator_stays_positive() {
    let tol = Tolerances::new(1e-8, 1e-8).unwrap();
    let traj = crate::stepcontrol::adaptive_integrate(
        &kernel("DOPRI5"),
        &Problem::Brusselator,
        &tol,
        &[1.5, 3.0],
        0.0,
        20.0,
        &Options::default(),
    )
    .unwrap();
    assert!(traj.states().iter().all(|&v| v > 0.0));
}

fn closure_at(problem: Problem, t_end: f64) -> f64 {
    let y0 = problem.initial_state();
    let tol = Tolerances::new(1e-14, 0.0).unwrap();
    let (_, y) = adaptive_integrate_last(
        &kernel("DOPRI8"),
        &problem,
        &tol,
        &y0,
        0.0,
        t_end,
        &Options::default(),
    )
    .unwrap();
    closure_error(&y, &y0)
}

#[test]
fn first_two_groups_close_at_their_periods() {
    for group in 1..=2 {
        let (_, period) = Problem::arenstorf(group).unwrap().interval();
        let problem = Problem::arenstorf(group).unwrap();
        let at = closure_at(problem, period);
        assert!(at < 1e-9, "group {group}: {at:e}");
        // The closure grows linearly away from the period.
        for shift in [-1e-5, 1e-5] {
            let off = closure_at(problem, period + shift);
            assert!(
                off > 100.0 * at && off > 1e-7,
                "group {group}, shift {shift}: {off:e}"
            );
        }
    }
}

#[test]
fn third_group_closes_only_for_its_source_mass() {
    let problem = Problem::arenstorf(3).unwrap();
    let (_, period) = problem.interval();
    assert!(closure_at(problem, period) > 1e-4);
    let Problem::Arenstorf { group, .. } = problem else {
        unreachable!()
    };
    let earth_moon = Problem::Arenstorf {
        group,
        params: ArenstorfParams::new(1.0 / 82.45).unwrap(),
    };
    assert!(closure_at(earth_moon, period) < 1e-8);
}
