//! Fehlberg45: Runge-Kutta-Fehlberg 4(5), propagates the order-4 solution (E. Fehlberg, NASA TR R-315, 1969; Hairer, Norsett, Wanner, Table II.5.1)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.25;
const C_2: f64 = 0.25;
const A_3_1: f64 = 0.09375;
const A_3_2: f64 = 0.28125;
const C_3: f64 = 0.375;
const A_4_1: f64 = 0.87938097405553027;
const A_4_2: f64 = -3.2771961766044607;
const A_4_3: f64 = 3.3208921256258534;
const C_4: f64 = 0.92307692307692308;
const A_5_1: f64 = 2.0324074074074074;
const A_5_2: f64 = -8.0;
const A_5_3: f64 = 7.1734892787524366;
const A_5_4: f64 = -0.20589668615984405;
const C_5: f64 = 1.0;
const A_6_1: f64 = -0.2962962962962963;
const A_6_2: f64 = 2.0;
const A_6_3: f64 = -1.3816764132553607;
const A_6_4: f64 = 0.45297270955165692;
const A_6_5: f64 = -0.275;
const C_6: f64 = 0.5;
const B_1: f64 = 0.11574074074074074;
const B_3: f64 = 0.54892787524366472;
const B_4: f64 = 0.53533138401559454;
const B_5: f64 = -0.2;
const BH_1: f64 = 0.11851851851851852;
const BH_3: f64 = 0.51898635477582846;
const BH_4: f64 = 0.50613149034201666;
const BH_5: f64 = -0.18;
const BH_6: f64 = 0.036363636363636364;

/// Fehlberg45, order 4(5), 6 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Fehlberg45;

impl ErkKernel<f64> for Fehlberg45 {
    fn name(&self) -> &str {
        "Fehlberg45"
    }

    fn stages(&self) -> usize {
        6
    }

    fn order(&self) -> u32 {
        4
    }

    fn embedded_order(&self) -> u32 {
        5
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
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_3 * k3[a] + B_4 * k4[a] + B_5 * k5[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_3 * k3[a] + BH_4 * k4[a] + BH_5 * k5[a] + BH_6 * k6[a]);
        }
    }
}

/// Adaptive Fehlberg45 integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Fehlberg45, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive Fehlberg45 integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Fehlberg45, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive Fehlberg45 integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Fehlberg45, problem, tol, y0, t_start, t_stop, opts)
}

/// Fehlberg45 with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Fehlberg45, problem, h, y0, t_start, t_stop)
}

/// Fehlberg45 with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Fehlberg45, problem, h, y0, t_start, t_stop)
}
