//! DPRK546S: Dormand-Prince RK5(4)6M, six stages (J. R. Dormand, P. J. Prince, J. Comput. Appl. Math. 6 (1980) 19-26)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.2;
const C_2: f64 = 0.2;
const A_3_1: f64 = 0.075;
const A_3_2: f64 = 0.225;
const C_3: f64 = 0.3;
const A_4_1: f64 = 0.3;
const A_4_2: f64 = -0.9;
const A_4_3: f64 = 1.2;
const C_4: f64 = 0.6;
const A_5_1: f64 = 0.31001371742112483;
const A_5_2: f64 = -0.92592592592592593;
const A_5_3: f64 = 1.2071330589849108;
const A_5_4: f64 = 0.075445816186556927;
const C_5: f64 = 0.66666666666666667;
const A_6_1: f64 = -0.67037037037037037;
const A_6_2: f64 = 2.5;
const A_6_3: f64 = -0.89562289562289562;
const A_6_4: f64 = -3.3703703703703704;
const A_6_5: f64 = 3.4363636363636364;
const C_6: f64 = 1.0;
const B_1: f64 = 0.087962962962962963;
const B_3: f64 = 0.481000481000481;
const B_4: f64 = -0.5787037037037037;
const B_5: f64 = 0.92045454545454545;
const B_6: f64 = 0.089285714285714286;
const BH_1: f64 = 0.057407407407407407;
const BH_3: f64 = 0.63973063973063973;
const BH_4: f64 = -1.3425925925925926;
const BH_5: f64 = 1.5954545454545455;
const BH_6: f64 = 0.05;

/// DPRK546S, order 5(4), 6 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dprk546s;

impl ErkKernel<f64> for Dprk546s {
    fn name(&self) -> &str {
        "DPRK546S"
    }

    fn stages(&self) -> usize {
        6
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
        let [k1, k2, k3, k4, k5, k6] = &mut k[..] else {
            unreachable!("stage buffer must hold 6 stages")
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
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_3 * k3[a] + B_4 * k4[a] + B_5 * k5[a] + B_6 * k6[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_3 * k3[a] + BH_4 * k4[a] + BH_5 * k5[a] + BH_6 * k6[a]);
        }
    }
}

/// Adaptive DPRK546S integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Dprk546s, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DPRK546S integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Dprk546s, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DPRK546S integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Dprk546s, problem, tol, y0, t_start, t_stop, opts)
}

/// DPRK546S with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Dprk546s, problem, h, y0, t_start, t_stop)
}

/// DPRK546S with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Dprk546s, problem, h, y0, t_start, t_stop)
}
