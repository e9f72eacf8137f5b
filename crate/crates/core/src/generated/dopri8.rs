//! DOPRI8: Prince-Dormand RK8(7)13M, rational coefficient approximations (P. J. Prince, J. R. Dormand, J. Comput. Appl. Math. 7 (1981) 67-75); last nonzero weight of each row corrected by its residual (about 1e-18) so that each weight row sums to exactly one
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.055555555555555555;
const C_2: f64 = 0.055555555555555555;
const A_3_1: f64 = 0.020833333333333333;
const A_3_2: f64 = 0.0625;
const C_3: f64 = 0.083333333333333333;
const A_4_1: f64 = 0.03125;
const A_4_3: f64 = 0.09375;
const C_4: f64 = 0.125;
const A_5_1: f64 = 0.3125;
const A_5_3: f64 = -1.171875;
const A_5_4: f64 = 1.171875;
const C_5: f64 = 0.3125;
const A_6_1: f64 = 0.0375;
const A_6_4: f64 = 0.1875;
const A_6_5: f64 = 0.15;
const C_6: f64 = 0.375;
const A_7_1: f64 = 0.04791013711111111;
const A_7_4: f64 = 0.11224871277777778;
const A_7_5: f64 = -0.025505673777777778;
const A_7_6: f64 = 0.012846823888888888;
const C_7: f64 = 0.1475;
const A_8_1: f64 = 0.016917989787292281;
const A_8_4: f64 = 0.38784827848604317;
const A_8_5: f64 = 0.035977369851500328;
const A_8_6: f64 = 0.19697021421566606;
const A_8_7: f64 = -0.17271385234050184;
const C_8: f64 = 0.465;
const A_9_1: f64 = 0.069095753359192301;
const A_9_4: f64 = -0.63424797672885415;
const A_9_5: f64 = -0.16119757522460408;
const A_9_6: f64 = 0.13865030945882525;
const A_9_7: f64 = 0.94092861403575627;
const A_9_8: f64 = 0.21163632648194398;
const C_9: f64 = 0.56486545138225957;
const A_10_1: f64 = 0.18355699683904539;
const A_10_4: f64 = -2.4687680843155924;
const A_10_5: f64 = -0.29128688781630046;
const A_10_6: f64 = -0.026473020233117376;
const A_10_7: f64 = 2.8478387641928004;
const A_10_8: f64 = 0.28138733146984979;
const A_10_9: f64 = 0.12374489986331466;
const C_10: f64 = 0.65;
const A_11_1: f64 = -1.2154248173958881;
const A_11_4: f64 = 16.672608665945772;
const A_11_5: f64 = 0.91574182841681796;
const A_11_6: f64 = -6.0566058043574709;
const A_11_7: f64 = -16.003573594156178;
const A_11_8: f64 = 14.849303086297663;
const A_11_9: f64 = -13.371575735289849;
const A_11_10: f64 = 5.1341826481796379;
const C_11: f64 = 0.92465627764050443;
const A_12_1: f64 = 0.25886091643826428;
const A_12_4: f64 = -4.7744857854892051;
const A_12_5: f64 = -0.43509301377703251;
const A_12_6: f64 = -3.0494833320722415;
const A_12_7: f64 = 5.5779200399360991;
const A_12_8: f64 = 6.1558315898610401;
const A_12_9: f64 = -5.0621045867369384;
const A_12_10: f64 = 2.1939261731806791;
const A_12_11: f64 = 0.13462799865933494;
const C_12: f64 = 1.0;
const A_13_1: f64 = 0.82242759962650748;
const A_13_4: f64 = -11.658673257277664;
const A_13_5: f64 = -0.75762211669093619;
const A_13_6: f64 = 0.71397358815958153;
const A_13_7: f64 = 12.075774986890057;
const A_13_8: f64 = -2.1276591139204027;
const A_13_9: f64 = 1.9901662070489554;
const A_13_10: f64 = -0.23428647154404029;
const A_13_11: f64 = 0.17589857770794226;
const C_13: f64 = 1.0;
const B_1: f64 = 0.041747491141530246;
const B_6: f64 = -0.055452328611239309;
const B_7: f64 = 0.2393128072011801;
const B_8: f64 = 0.70351066940344302;
const B_9: f64 = -0.75975961381446093;
const B_10: f64 = 0.66056303092228634;
const B_11: f64 = 0.15818748251012333;
const B_12: f64 = -0.2381095387528628;
const B_13: f64 = 0.25;
const BH_1: f64 = 0.029553213676353498;
const BH_6: f64 = -0.82860627648779704;
const BH_7: f64 = 0.31124090005111833;
const BH_8: f64 = 2.467345190599887;
const BH_9: f64 = -2.5469416518419087;
const BH_10: f64 = 1.4435485836767752;
const BH_11: f64 = 0.079415595881127286;
const BH_12: f64 = 0.044444444444444444;

/// DOPRI8, order 8(7), 13 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dopri8;

impl ErkKernel<f64> for Dopri8 {
    fn name(&self) -> &str {
        "DOPRI8"
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
            arg[a] = y[a] + h * (A_8_1 * k1[a] + A_8_4 * k4[a] + A_8_5 * k5[a] + A_8_6 * k6[a] + A_8_7 * k7[a]);
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
            arg[a] = y[a] + h * (A_12_1 * k1[a] + A_12_4 * k4[a] + A_12_5 * k5[a] + A_12_6 * k6[a] + A_12_7 * k7[a] + A_12_8 * k8[a] + A_12_9 * k9[a] + A_12_10 * k10[a] + A_12_11 * k11[a]);
        }
        problem.rhs(t + C_12 * h, arg, k12);
        for a in 0..n {
            arg[a] = y[a] + h * (A_13_1 * k1[a] + A_13_4 * k4[a] + A_13_5 * k5[a] + A_13_6 * k6[a] + A_13_7 * k7[a] + A_13_8 * k8[a] + A_13_9 * k9[a] + A_13_10 * k10[a] + A_13_11 * k11[a]);
        }
        problem.rhs(t + C_13 * h, arg, k13);
        for a in 0..n {
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_6 * k6[a] + B_7 * k7[a] + B_8 * k8[a] + B_9 * k9[a] + B_10 * k10[a] + B_11 * k11[a] + B_12 * k12[a] + B_13 * k13[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_6 * k6[a] + BH_7 * k7[a] + BH_8 * k8[a] + BH_9 * k9[a] + BH_10 * k10[a] + BH_11 * k11[a] + BH_12 * k12[a]);
        }
    }
}

/// Adaptive DOPRI8 integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Dopri8, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DOPRI8 integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Dopri8, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DOPRI8 integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Dopri8, problem, tol, y0, t_start, t_stop, opts)
}

/// DOPRI8 with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Dopri8, problem, h, y0, t_start, t_stop)
}

/// DOPRI8 with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Dopri8, problem, h, y0, t_start, t_stop)
}
