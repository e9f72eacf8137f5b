//! DPRK658M: Prince-Dormand RK6(5)8M (P. J. Prince, J. R. Dormand, J. Comput. Appl. Math. 7 (1981) 67-75)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.1;
const C_2: f64 = 0.1;
const A_3_1: f64 = -0.024691358024691358;
const A_3_2: f64 = 0.24691358024691358;
const C_3: f64 = 0.22222222222222222;
const A_4_1: f64 = 0.44825072886297376;
const A_4_2: f64 = -0.78717201166180758;
const A_4_3: f64 = 0.76749271137026239;
const C_4: f64 = 0.42857142857142857;
const A_5_1: f64 = 0.58963636363636364;
const A_5_2: f64 = -0.98181818181818182;
const A_5_3: f64 = 0.71257342657342657;
const A_5_4: f64 = 0.27960839160839161;
const C_5: f64 = 0.6;
const A_6_1: f64 = -0.71358922558922559;
const A_6_2: f64 = 1.3090909090909091;
const A_6_3: f64 = 0.12012834224598931;
const A_6_4: f64 = -0.65201346801346801;
const A_6_5: f64 = 0.73638344226579521;
const C_6: f64 = 0.8;
const A_7_1: f64 = 2.3404882154882155;
const A_7_2: f64 = -3.1818181818181818;
const A_7_3: f64 = -0.76312375407398032;
const A_7_4: f64 = 4.4826121172275018;
const A_7_5: f64 = -2.8458605664488017;
const A_7_6: f64 = 0.96770216962524655;
const C_7: f64 = 1.0;
const A_8_1: f64 = 1.7491394600769601;
const A_8_2: f64 = -2.3904220779220779;
const A_8_3: f64 = -0.39625257378368238;
const A_8_4: f64 = 3.272858329348714;
const A_8_5: f64 = -2.0635163787737317;
const A_8_6: f64 = 0.82819324105381798;
const C_8: f64 = 1.0;
const B_1: f64 = 0.070601851851851852;
const B_3: f64 = 0.30584941077022525;
const B_4: f64 = 0.11510382423843962;
const B_5: f64 = 0.18722766884531591;
const B_6: f64 = 0.25425295857988166;
const B_7: f64 = -0.033035714285714286;
const B_8: f64 = 0.1;
const BH_1: f64 = 0.076018518518518519;
const BH_3: f64 = 0.27404107205012183;
const BH_4: f64 = 0.19205895244356783;
const BH_5: f64 = 0.10757080610021786;
const BH_6: f64 = 0.29031065088757396;
const BH_7: f64 = 0.06;

/// DPRK658M, order 6(5), 8 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dprk658m;

impl ErkKernel<f64> for Dprk658m {
    fn name(&self) -> &str {
        "DPRK658M"
    }

    fn stages(&self) -> usize {
        8
    }

    fn order(&self) -> u32 {
        6
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
        let [k1, k2, k3, k4, k5, k6, k7, k8] = &mut k[..] else {
            unreachable!("stage buffer must hold 8 stages")
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
            arg[a] = y[a] + h * (A_7_1 * k1[a] + A_7_2 * k2[a] + A_7_3 * k3[a] + A_7_4 * k4[a] + A_7_5 * k5[a] + A_7_6 * k6[a]);
        }
        problem.rhs(t + C_7 * h, arg, k7);
        for a in 0..n {
            arg[a] = y[a] + h * (A_8_1 * k1[a] + A_8_2 * k2[a] + A_8_3 * k3[a] + A_8_4 * k4[a] + A_8_5 * k5[a] + A_8_6 * k6[a]);
        }
        problem.rhs(t + C_8 * h, arg, k8);
        for a in 0..n {
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_3 * k3[a] + B_4 * k4[a] + B_5 * k5[a] + B_6 * k6[a] + B_7 * k7[a] + B_8 * k8[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_3 * k3[a] + BH_4 * k4[a] + BH_5 * k5[a] + BH_6 * k6[a] + BH_7 * k7[a]);
        }
    }
}

/// Adaptive DPRK658M integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Dprk658m, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DPRK658M integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Dprk658m, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DPRK658M integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Dprk658m, problem, tol, y0, t_start, t_stop, opts)
}

/// DPRK658M with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Dprk658m, problem, h, y0, t_start, t_stop)
}

/// DPRK658M with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Dprk658m, problem, h, y0, t_start, t_stop)
}
