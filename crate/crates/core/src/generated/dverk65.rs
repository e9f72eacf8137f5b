//! DVERK65: Verner 6(5) pair as used in DVERK (J. H. Verner, SIAM J. Numer. Anal. 15 (1978); Hull, Enright, Jackson, DVERK, 1976)
//!
//! Generated by `forge generate` from the method file. Do not edit.

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

const A_2_1: f64 = 0.16666666666666667;
const C_2: f64 = 0.16666666666666667;
const A_3_1: f64 = 0.053333333333333334;
const A_3_2: f64 = 0.21333333333333334;
const C_3: f64 = 0.26666666666666667;
const A_4_1: f64 = 0.83333333333333333;
const A_4_2: f64 = -2.6666666666666667;
const A_4_3: f64 = 2.5;
const C_4: f64 = 0.66666666666666667;
const A_5_1: f64 = -2.578125;
const A_5_2: f64 = 9.1666666666666667;
const A_5_3: f64 = -6.640625;
const A_5_4: f64 = 0.88541666666666667;
const C_5: f64 = 0.83333333333333333;
const A_6_1: f64 = 2.4;
const A_6_2: f64 = -8.0;
const A_6_3: f64 = 6.5604575163398693;
const A_6_4: f64 = -0.30555555555555556;
const A_6_5: f64 = 0.34509803921568627;
const C_6: f64 = 1.0;
const A_7_1: f64 = -0.55086666666666667;
const A_7_2: f64 = 1.6533333333333333;
const A_7_3: f64 = -0.94558823529411765;
const A_7_4: f64 = -0.324;
const A_7_5: f64 = 0.23378823529411765;
const C_7: f64 = 0.066666666666666667;
const A_8_1: f64 = 2.0354651162790698;
const A_8_2: f64 = -6.9767441860465116;
const A_8_3: f64 = 5.6481798145614835;
const A_8_4: f64 = -0.13738156761412575;
const A_8_5: f64 = 0.2863022661036103;
const A_8_7: f64 = 0.1441785567164738;
const C_8: f64 = 1.0;
const B_1: f64 = 0.075;
const B_3: f64 = 0.38992869875222816;
const B_4: f64 = 0.31944444444444444;
const B_5: f64 = 0.1350383631713555;
const B_7: f64 = 0.010783298826777088;
const B_8: f64 = 0.069805194805194805;
const BH_1: f64 = 0.08125;
const BH_3: f64 = 0.39689171122994652;
const BH_4: f64 = 0.3125;
const BH_5: f64 = 0.14117647058823529;
const BH_6: f64 = 0.068181818181818182;

/// DVERK65, order 6(5), 8 stages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dverk65;

impl ErkKernel<f64> for Dverk65 {
    fn name(&self) -> &str {
        "DVERK65"
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
            arg[a] = y[a] + h * (A_7_1 * k1[a] + A_7_2 * k2[a] + A_7_3 * k3[a] + A_7_4 * k4[a] + A_7_5 * k5[a]);
        }
        problem.rhs(t + C_7 * h, arg, k7);
        for a in 0..n {
            arg[a] = y[a] + h * (A_8_1 * k1[a] + A_8_2 * k2[a] + A_8_3 * k3[a] + A_8_4 * k4[a] + A_8_5 * k5[a] + A_8_7 * k7[a]);
        }
        problem.rhs(t + C_8 * h, arg, k8);
        for a in 0..n {
            y_next[a] = y[a] + h * (B_1 * k1[a] + B_3 * k3[a] + B_4 * k4[a] + B_5 * k5[a] + B_7 * k7[a] + B_8 * k8[a]);
            y_hat[a] = y[a] + h * (BH_1 * k1[a] + BH_3 * k3[a] + BH_4 * k4[a] + BH_5 * k5[a] + BH_6 * k6[a]);
        }
    }
}

/// Adaptive DVERK65 integration returning every accepted point.
pub fn solve<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate(&Dverk65, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DVERK65 integration returning `(t_stop, y(t_stop))`.
pub fn solve_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::adaptive_integrate_last(&Dverk65, problem, tol, y0, t_start, t_stop, opts)
}

/// Adaptive DVERK65 integration returning the accepted and rejected steps.
pub fn solve_info<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    tol: &crate::stepcontrol::Tolerances,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
    opts: &crate::stepcontrol::Options,
) -> Result<crate::stepcontrol::StepLog, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::integrate_info(&Dverk65, problem, tol, y0, t_start, t_stop, opts)
}

/// DVERK65 with constant step `h`, returning every grid point.
pub fn solve_fixed<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<crate::stepcontrol::Trajectory<f64>, crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate(&Dverk65, problem, h, y0, t_start, t_stop)
}

/// DVERK65 with constant step `h`, returning `(t_stop, y(t_stop))`.
pub fn solve_fixed_last<P: OdeProblem<f64> + ?Sized>(
    problem: &P,
    h: f64,
    y0: &[f64],
    t_start: f64,
    t_stop: f64,
) -> Result<(f64, Vec<f64>), crate::stepcontrol::IntegrationError> {
    crate::stepcontrol::fixed_integrate_last(&Dverk65, problem, h, y0, t_start, t_stop)
}
