//! Fehlberg78B: Runge-Kutta-Fehlberg 7(8), thirteen stages, propagates the order-8 solution (E. Fehlberg, NASA TR R-287, 1968)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.074074074074074074;
const C_2: f64 = 0.074074074074074074;
const A_3_1: f64 = 0.027777777777777777;
const A_3_2: f64 = 0.083333333333333333;
const C_3: f64 = 0.11111111111111111;
const A_4_1: f64 = 0.041666666666666667;
const A_4_3: f64 = 0.125;
const C_4: f64 = 0.16666666666666667;
const A_5_1: f64 = 0.41666666666666667;
const A_5_3: f64 = -1.5625;
const A_5_4: f64 = 1.5625;
const C_5: f64 = 0.41666666666666667;
const A_6_1: f64 = 0.05;
const A_6_4: f64 = 0.25;
const A_6_5: f64 = 0.2;
const C_6: f64 = 0.5;
const A_7_1: f64 = -0.23148148148148148;
const A_7_4: f64 = 1.1574074074074074;
const A_7_5: f64 = -2.4074074074074074;
const A_7_6: f64 = 2.3148148148148148;
const C_7: f64 = 0.83333333333333333;
const A_8_1: f64 = 0.10333333333333333;
const A_8_5: f64 = 0.27111111111111111;
const A_8_6: f64 = -0.22222222222222222;
const A_8_7: f64 = 0.014444444444444444;
const C_8: f64 = 0.16666666666666667;
const A_9_1: f64 = 2.0;
const A_9_4: f64 = -8.8333333333333333;
const A_9_5: f64 = 15.644444444444444;
const A_9_6: f64 = -11.888888888888889;
const A_9_7: f64 = 0.74444444444444444;
const A_9_8: f64 = 3.0;
const C_9: f64 = 0.66666666666666667;
const A_10_1: f64 = -0.84259259259259259;
const A_10_4: f64 = 0.21296296296296296;
const A_10_5: f64 = -7.2296296296296296;
const A_10_6: f64 = 5.7592592592592593;
const A_10_7: f64 = -0.31666666666666667;
const A_10_8: f64 = 2.8333333333333333;
const A_10_9: f64 = -0.083333333333333333;
const C_10: f64 = 0.33333333333333333;
const A_11_1: f64 = 0.58121951219512195;
const A_11_4: f64 = -2.0792682926829268;
const A_11_5: f64 = 4.3863414634146341;
const A_11_6: f64 = -3.6707317073170732;
const A_11_7: f64 = 0.52024390243902439;
const A_11_8: f64 = 0.54878048780487805;
const A_11_9: f64 = 0.27439024390243902;
const A_11_10: f64 = 0.43902439024390244;
const C_11: f64 = 1.0;
const A_12_1: f64 = 0.014634146341463415;
const A_12_6: f64 = -0.14634146341463415;
const A_12_7: f64 = -0.014634146341463415;
const A_12_8: f64 = -0.073170731707317073;
const A_12_9: f64 = 0.073170731707317073;
const A_12_10: f64 = 0.14634146341463415;
const A_13_1: f64 = -0.43341463414634146;
const A_13_4: f64 = -2.0792682926829268;
const A_13_5: f64 = 4.3863414634146341;
const A_13_6: f64 = -3.524390243902439;
const A_13_7: f64 = 0.5348780487804878;
const A_13_8: f64 = 0.62195121951219512;
const A_13_9: f64 = 0.20121951219512195;
const A_13_10: f64 = 0.29268292682926829;
const A_13_12: f64 = 1.0;
const C_13: f64 = 1.0;
const B_6: f64 = 0.32380952380952381;
const B_7: f64 = 0.25714285714285714;
const B_8: f64 = 0.25714285714285714;
const B_9: f64 = 0.032142857142857143;
const B_10: f64 = 0.032142857142857143;
const B_12: f64 = 0.04880952380952381;
const B_13: f64 = 0.04880952380952381;
const BH_1: f64 = 0.04880952380952381;
const BH_6: f64 = 0.32380952380952381;
const BH_7: f64 = 0.25714285714285714;
const BH_8: f64 = 0.25714285714285714;
const BH_9: f64 = 0.032142857142857143;
const BH_10: f64 = 0.032142857142857143;
const BH_11: f64 = 0.04880952380952381;

/// Fehlberg78B, order 8(7), 13 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Fehlberg78b;

impl ErkKernel<f64> for Fehlberg78b {
    fn name(&self) -> &str {
        "Fehlberg78B"
    }

    fn stages(&self) -> usize {
        13
    }

    fn order(&self) -> u32 {
        8
    }

    fn embedded_order(&self) -> u32 {
        7
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
        let [k1, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, k13] = &mut k[..] else {
            unreachable!("stage buffer must hold 13 stages")
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
            arg[a] = y[a] + h * (A_4_1 * k1[a] + A_4_3 * k3[a]);
        }
        problem.rhs(t + C_4 * h, arg, k4);
        for a in 0..n {
            arg[a] = y[a] + h * (A_5_1 * k1[a] + A_5_3 * k3[a] + A_5_4 * k4[a]);
        }
        problem.rhs(t + C_5 * h, arg, k5);
        for a in 0..n {
            arg[a] = y[a] + h * (A_6_1 * k1[a] + A_6_4 * k4[a] + A_6_5 * k5[a]);
        }
        problem.rhs(t + C_6 * h, arg, k6);
        for a in 0..n {
            arg[a] = y[a] + h * (A_7_1 * k1[a] + A_7_4 * k4[a] + A_7_5 * k5[a] + A_7_6 * k6[a]);
        }
        problem.rhs(t + C_7 * h, arg, k7);
        for a in 0..n {
            arg[a] = y[a] + h * (A_8_1 * k1[a] + A_8_5 * k5[a] + A_8_6 * k6[a] + A_8_7 * k7[a]);
        }
        problem.rhs(t + C_8 * h, arg, k8);
        for a in 0..n {
            arg[a] = y[a] + h * (A_9_1 * k1[a] + A_9_4 * k4[a] + A_9_5 * k5[a] + A_9_6 * k6[a] + A_9_7 * k7[a] + A_9_8 * k8[a]);
        }
        problem.rhs(t + C_9 * h, arg, k9);
        for a in 0..n {
            arg[a] = y[a] + h * (A_10_1 * k1[a] + A_10_4 * k4[a] + A_10_5 * k5[a] + A_10_6 * k6[a] + A_10_7 * k7[a] + A_10_8 * k8[a] + A_10_9 * k9[a]);
        }
        problem.rhs(t + C_10 * h, arg, k10);
        for a in 0..n {
            arg[a] = y[a] + h * (A_11_1 * k1[a] + A_11_4 * k4[a] + A_11_5 * k5[a] + A_11_6 * k6[a] + A_11_7 * k7[a] + A_11_8 * k8[a] + A_11_9 * k9[a] + A_11_10 * k10[a]);
        }
        problem.rhs(t + C_11 * h, arg, k11);
        for a in 0..n {
            arg[a] = y[a] + h * (A_12_1 * k1[a] + A_12_6 * k6[a] + A_12_7 * k7[a] + A_12_8 * k8[a] + A_12_9 * k9[a] + A_12_10 * k10[a]);
        }
        problem.rhs(t, arg, k12);
        for a in 0..n {
            arg[a] = y[a] + h * (A_13_1 * k1[a] + A_13_4 * k4[a] + A_13_5 * k5[a] + A_13_6 * k6[a] + A_13_7 * k7[a] + A_13_8 * k8[a] + A_13_9 * k9[a] + A_13_10 * k10[a] + A_13_12 * k12[a]);
        }
        problem.rhs(t + C_13 * h, arg, k13);
        for a in 0..n {
            y_next[a] = y[a] + h * (B_6 * k6[a] + B_7 * k7[a] + B_8 * k8[a] + B_9 * k9[a] + B_10 * k10[a] + B_12 * k12[a] + B_13 * k13[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_6 * k6[a] + BH_7 * k7[a] + BH_8 * k8[a] + BH_9 * k9[a] + BH_10 * k10[a] + BH_11 * k11[a]);
        }
    }
}

/// Adaptive Fehlberg78B integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Fehlberg78b, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive Fehlberg78B integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Fehlberg78b, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive Fehlberg78B integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Fehlberg78b, problem, tol, y0, t_start, t_stop, opts)
}

/// Fehlberg78B with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Fehlberg78b, problem, h, y0, t_start, t_stop)
}

/// Fehlberg78B with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Fehlberg78b, problem, h, y0, t_start, t_stop)
}
