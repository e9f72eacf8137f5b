//! ERK43b: Embedded RK4(3) built on the 3/8 rule, FSAL (Hairer, Norsett, Wanner, Solving ODE I, 2nd ed., Sect. II.4, RK4(3)T)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.33333333333333333;
const C_2: f64 = 0.33333333333333333;
const A_3_1: f64 = -0.33333333333333333;
const A_3_2: f64 = 1.0;
const C_3: f64 = 0.66666666666666667;
const A_4_1: f64 = 1.0;
const A_4_2: f64 = -1.0;
const A_4_3: f64 = 1.0;
const C_4: f64 = 1.0;
const A_5_1: f64 = 0.125;
const A_5_2: f64 = 0.375;
const A_5_3: f64 = 0.375;
const A_5_4: f64 = 0.125;
const C_5: f64 = 1.0;
const B_1: f64 = 0.125;
const B_2: f64 = 0.375;
const B_3: f64 = 0.375;
const B_4: f64 = 0.125;
const BH_1: f64 = 0.083333333333333333;
const BH_2: f64 = 0.5;
const BH_3: f64 = 0.25;
const BH_5: f64 = 0.16666666666666667;

/// ERK43b, order 4(3), 5 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Erk43b;

impl ErkKernel<f64> for Erk43b {
    fn name(&self) -> &str {
        "ERK43b"
    }

    fn stages(&self) -> usize {
        5
    }

    fn order(&self) -> u32 {
        4
    }

    fn embedded_order(&self) -> u32 {
        3
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
        let [k1, k2, k3, k4, k5] = &mut k[..] else {
            unreachable!("stage buffer must hold 5 stages")
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
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_2 * k2[a] + B_3 * k3[a] + B_4 * k4[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_2 * k2[a] + BH_3 * k3[a] + BH_5 * k5[a]);
        }
    }
}

/// Adaptive ERK43b integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Erk43b, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive ERK43b integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Erk43b, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive ERK43b integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Erk43b, problem, tol, y0, t_start, t_stop, opts)
}

/// ERK43b with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Erk43b, problem, h, y0, t_start, t_stop)
}

/// ERK43b with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Erk43b, problem, h, y0, t_start, t_stop)
}
