//! DOPRI5: Dormand-Prince RK5(4)7M, FSAL (J. R. Dormand, P. J. Prince, J. Comput. Appl. Math. 6 (1980) 19-26)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.2;
const C_2: f64 = 0.2;
const A_3_1: f64 = 0.075;
const A_3_2: f64 = 0.225;
const C_3: f64 = 0.3;
const A_4_1: f64 = 0.97777777777777778;
const A_4_2: f64 = -3.7333333333333333;
const A_4_3: f64 = 3.5555555555555555;
const C_4: f64 = 0.8;
const A_5_1: f64 = 2.9525986892242036;
const A_5_2: f64 = -11.595793324188385;
const A_5_3: f64 = 9.8228928516994361;
const A_5_4: f64 = -0.29080932784636488;
const C_5: f64 = 0.88888888888888889;
const A_6_1: f64 = 2.8462752525252525;
const A_6_2: f64 = -10.757575757575758;
const A_6_3: f64 = 8.9064227177434725;
const A_6_4: f64 = 0.27840909090909091;
const A_6_5: f64 = -0.27353130360205832;
const C_6: f64 = 1.0;
const A_7_1: f64 = 0.091145833333333333;
const A_7_3: f64 = 0.44923629829290207;
const A_7_4: f64 = 0.65104166666666667;
const A_7_5: f64 = -0.32237617924528302;
const A_7_6: f64 = 0.13095238095238095;
const C_7: f64 = 1.0;
const B_1: f64 = 0.091145833333333333;
const B_3: f64 = 0.44923629829290207;
const B_4: f64 = 0.65104166666666667;
const B_5: f64 = -0.32237617924528302;
const B_6: f64 = 0.13095238095238095;
const BH_1: f64 = 0.089913194444444444;
const BH_3: f64 = 0.45348906858340821;
const BH_4: f64 = 0.6140625;
const BH_5: f64 = -0.2715123820754717;
const BH_6: f64 = 0.089047619047619048;
const BH_7: f64 = 0.025;

/// DOPRI5, order 5(4), 7 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dopri5;

impl ErkKernel<f64> for Dopri5 {
    fn name(&self) -> &str {
        "DOPRI5"
    }

    fn stages(&self) -> usize {
        7
    }

    fn order(&self) -> u32 {
        5
    }

    fn embedded_order(&self) -> u32 {
        4
    }

    fn step<P: OdeProblem<f64> + ?Sized>(
        &self,
        problem: &P,
        t: f64,
        y: &[f64],
        h: f64,
        stages: &mut StageBuffer<f64>,
        y_next: &mut [f64],
        y_hat: &mut [f64],
    ) {
        let n = y.len();
        let StageBuffer { k, arg } = stages;
        let [k1, k2, k3, k4, k5, k6, k7] = &mut k[..] else {
            unreachable!("stage buffer must hold 7 stages")
        };
        problem.rhs(t, y, k1);
        for a in 0..n {
            arg[a] = y[a] + h * (A_2_1 * k1[a]);
        }
        problem.rhs(t + C_2 * h, arg, k2);
        for a in 0..n {
            arg[a] = y[a] + h * (A_3_1 * k1[a] + A_3_2 * k2[a]);
        }
        problem.rhs(t + C_3 * h, arg, k3);
        for a in 0..n {
            arg[a] = y[a] + h * (A_4_1 * k1[a] + A_4_2 * k2[a] + A_4_3 * k3[a]);
        }
        problem.rhs(t + C_4 * h, arg, k4);
        for a in 0..n {
            arg[a] = y[a] + h * (A_5_1 * k1[a] + A_5_2 * k2[a] + A_5_3 * k3[a] + A_5_4 * k4[a]);
        }
        problem.rhs(t + C_5 * h, arg, k5);
        for a in 0..n {
            arg[a] = y[a] + h * (A_6_1 * k1[a] + A_6_2 * k2[a] + A_6_3 * k3[a] + A_6_4 * k4[a] + A_6_5 * k5[a]);
        }
        problem.rhs(t + C_6 * h, arg, k6);
        for a in 0..n {
            arg[a] = y[a] + h * (A_7_1 * k1[a] + A_7_3 * k3[a] + A_7_4 * k4[a] + A_7_5 * k5[a] + A_7_6 * k6[a]);
        }
        problem.rhs(t + C_7 * h, arg, k7);
        for a in 0..n {
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_3 * k3[a] + B_4 * k4[a] + B_5 * k5[a] + B_6 * k6[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_3 * k3[a] + BH_4 * k4[a] + BH_5 * k5[a] + BH_6 * k6[a] + BH_7 * k7[a]);
        }
    }
}

/// Adaptive DOPRI5 integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Dopri5, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DOPRI5 integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Dopri5, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DOPRI5 integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Dopri5, problem, tol, y0, t_start, t_stop, opts)
}

/// DOPRI5 with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Dopri5, problem, h, y0, t_start, t_stop)
}

/// DOPRI5 with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Dopri5, problem, h, y0, t_start, t_stop)
}
