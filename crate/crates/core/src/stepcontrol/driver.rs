use super::{
    error_norm, retry_divisor, step_divisor, ControllerParams, ErkKernel, OdeProblem, Real, StageBuffer,
    StepLog, Tolerances, Trajectory,
};

/// Which of the two solutions is carried to the next step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Propagation {
    #[default]
    Main,
    Embedded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    /// Initial step; `(t_stop - t_start) / 100` when unset.
    pub h0: Option<f64>,
    /// Limit on attempted (accepted plus rejected) steps.
    pub max_steps: usize,
    /// Smallest admissible step; `1e4 * eps * max(|t_start|, |t_stop|, 1)` when unset.
    pub h_min: Option<f64>,
    pub propagation: Propagation,
    /// Controller settings; the defaults for the kernel's main order when unset.
    pub controller: Option<ControllerParams>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            h0: None,
            max_steps: 1_000_000,
            h_min: None,
            propagation: Propagation::Main,
            controller: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IntegrationError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no convergence: {max_steps} steps attempted, stopped at t = {t}")]
    NonConvergence {
        max_steps: usize,
        t: f64,
        log: Box<StepLog>,
    },
    #[error("step size {h:e} fell below the minimum {h_min:e} at t = {t} (stiffness or roundoff)")]
    StepUnderflow { t: f64, h: f64, h_min: f64 },
    #[error("non-finite state in the step from t = {t}")]
    Divergence { t: f64, y: Vec<f64> },
}

fn check_common<T: Real, P: OdeProblem<T> + ?Sized>(
    problem: &P,
    y0: &[T],
    t_start: T,
    t_stop: T,
) -> Result<(), IntegrationError> {
    if y0.len() != problem.dimension() || y0.is_empty() {
        return Err(IntegrationError::InvalidInput(format!(
            "initial state has {} components, problem `{}` has dimension {}",
            y0.len(),
            problem.name(),
            problem.dimension()
        )));
    }
    if !(t_start.is_finite() && t_stop.is_finite() && t_stop > t_start) {
        return Err(IntegrationError::InvalidInput(format!(
            "interval [{t_start:?}, {t_stop:?}] is empty or not finite"
        )));
    }
    if y0.iter().any(|v| !v.is_finite()) {
        return Err(IntegrationError::InvalidInput(
            "initial state is not finite".into(),
        ));
    }
    Ok(())
}

fn divergence<T: Real>(t: T, y: &[T]) -> IntegrationError {
    IntegrationError::Divergence {
        t: t.approx(),
        y: y.iter().map(|v| v.approx()).collect(),
    }
}

/// The adaptive stepping loop shared by every adaptive entry point.
/// `on_accept` sees the initial point and every accepted point.
#[allow(clippy::too_many_arguments)]
fn run_adaptive<T, K, P, F>(
    kernel: &K,
    problem: &P,
    tol: &Tolerances,
    y0: &[T],
    t_start: T,
    t_stop: T,
    opts: &Options,
    log: &mut StepLog,
    mut on_accept: F,
) -> Result<(T, Vec<T>), IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
    F: FnMut(T, &[T]),
{
    check_common(problem, y0, t_start, t_stop)?;
    tol.check()?;
    let cp = opts
        .controller
        .unwrap_or_else(|| ControllerParams::for_order(kernel.order()));
    cp.check()?;

    let span = (t_stop - t_start).approx();
    let h_min = opts
        .h_min
        .unwrap_or_else(|| 1e4 * f64::EPSILON * t_start.approx().abs().max(t_stop.approx().abs()).max(1.0));
    let mut h = T::lit(opts.h0.unwrap_or(span / 100.0));
    if !(h > T::zero() && h.is_finite()) {
        return Err(IntegrationError::InvalidInput(format!(
            "initial step {h:?} must be positive"
        )));
    }

    let n = y0.len();
    let mut stages = StageBuffer::new(kernel.stages(), n);
    let mut y = y0.to_vec();
    let mut y_next = vec![T::zero(); n];
    let mut y_hat = vec![T::zero(); n];
    let mut t = t_start;
    let mut e_prev = 1.0;
    let mut attempts = 0usize;
    on_accept(t, &y);

    while t < t_stop {
        if attempts >= opts.max_steps {
            return Err(IntegrationError::NonConvergence {
                max_steps: opts.max_steps,
                t: t.approx(),
                log: Box::new(std::mem::take(log)),
            });
        }
        if h.approx() < h_min {
            return Err(IntegrationError::StepUnderflow {
                t: t.approx(),
                h: h.approx(),
                h_min,
            });
        }
        let last = t + h >= t_stop;
        let h_step = if last { t_stop - t } else { h };
        attempts += 1;

        kernel.step(problem, t, &y, h_step, &mut stages, &mut y_next, &mut y_hat);
        if y_next.iter().chain(&y_hat).any(|v| !v.is_finite()) {
            return Err(divergence(t, &y));
        }
        let e = error_norm(&y_next, &y_hat, tol);

        if e <= 1.0 {
            log.accepted_t.push(t.approx());
            log.accepted_h.push(h_step.approx());
            log.errors.push(e);
            t = if last { t_stop } else { t + h_step };
            match opts.propagation {
                Propagation::Main => std::mem::swap(&mut y, &mut y_next),
                Propagation::Embedded => std::mem::swap(&mut y, &mut y_hat),
            }
            on_accept(t, &y);
            h = h_step / T::lit(step_divisor(e, e_prev, &cp));
            // Floor as in Hairer's DOPRI5 code keeps E_prev^-b finite.
            e_prev = e.max(1e-4);
        } else {
            log.rejected_t.push(t.approx());
            log.rejected_h.push(h_step.approx());
            h = h_step / T::lit(retry_divisor(e, &cp));
        }
    }
    Ok((t, y))
}

/// Adaptive integration returning every accepted grid point.
pub fn adaptive_integrate<T, K, P>(
    kernel: &K,
    problem: &P,
    tol: &Tolerances,
    y0: &[T],
    t_start: T,
    t_stop: T,
    opts: &Options,
) -> Result<Trajectory<T>, IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
{
    let mut traj = Trajectory::new(y0.len());
    let mut log = StepLog::default();
    run_adaptive(
        kernel,
        problem,
        tol,
        y0,
        t_start,
        t_stop,
        opts,
        &mut log,
        |t, y| traj.push(t, y),
    )?;
    Ok(traj)
}

/// Adaptive integration returning only the final point `(t_stop, y_n)`.
pub fn adaptive_integrate_last<T, K, P>(
    kernel: &K,
    problem: &P,
    tol: &Tolerances,
    y0: &[T],
    t_start: T,
    t_stop: T,
    opts: &Options,
) -> Result<(T, Vec<T>), IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
{
    let mut log = StepLog::default();
    run_adaptive(
        kernel,
        problem,
        tol,
        y0,
        t_start,
        t_stop,
        opts,
        &mut log,
        |_, _| {},
    )
}

/// Adaptive integration returning the accepted and rejected step records.
pub fn integrate_info<T, K, P>(
    kernel: &K,
    problem: &P,
    tol: &Tolerances,
    y0: &[T],
    t_start: T,
    t_stop: T,
    opts: &Options,
) -> Result<StepLog, IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
{
    let mut log = StepLog::default();
    run_adaptive(
        kernel,
        problem,
        tol,
        y0,
        t_start,
        t_stop,
        opts,
        &mut log,
        |_, _| {},
    )?;
    Ok(log)
}

/// Number of steps of size `h` covering `span`. A ratio within rounding
/// noise of an integer counts as that integer, so 12 / 0.01 gives 1200.
pub fn fixed_step_count(span: f64, h: f64) -> usize {
    let ratio = span / h;
    let nearest = ratio.round();
    let n = if (ratio - nearest).abs() <= 1e-9 * ratio.max(1.0) {
        nearest
    } else {
        ratio.ceil()
    };
    (n as usize).max(1)
}

fn run_fixed<T, K, P, F>(
    kernel: &K,
    problem: &P,
    h: T,
    y0: &[T],
    t_start: T,
    t_stop: T,
    mut on_point: F,
) -> Result<(T, Vec<T>), IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
    F: FnMut(T, &[T]),
{
    check_common(problem, y0, t_start, t_stop)?;
    if !(h > T::zero() && h.is_finite()) {
        return Err(IntegrationError::InvalidInput(format!(
            "step size {h:?} must be positive"
        )));
    }
    let steps = fixed_step_count((t_stop - t_start).approx(), h.approx());
    if steps >= usize::MAX / 2 {
        return Err(IntegrationError::InvalidInput(
            "step size too small for the interval".into(),
        ));
    }
    let n = y0.len();
    let mut stages = StageBuffer::new(kernel.stages(), n);
    let mut y = y0.to_vec();
    let mut y_next = vec![T::zero(); n];
    let mut y_hat = vec![T::zero(); n];
    let mut t = t_start;
    on_point(t, &y);
    for k in 1..=steps {
        let t_next = if k == steps {
            t_stop
        } else {
            t_start + T::lit(k as f64) * h
        };
        kernel.step(problem, t, &y, t_next - t, &mut stages, &mut y_next, &mut y_hat);
        if y_next.iter().any(|v| !v.is_finite()) {
            return Err(divergence(t, &y));
        }
        std::mem::swap(&mut y, &mut y_next);
        t = t_next;
        on_point(t, &y);
    }
    Ok((t, y))
}

/// Uniform steps of size `h`, the last one truncated onto `t_stop`.
pub fn fixed_integrate<T, K, P>(
    kernel: &K,
    problem: &P,
    h: T,
    y0: &[T],
    t_start: T,
    t_stop: T,
) -> Result<Trajectory<T>, IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
{
    let mut traj = Trajectory::new(y0.len());
    run_fixed(kernel, problem, h, y0, t_start, t_stop, |t, y| traj.push(t, y))?;
    Ok(traj)
}

pub fn fixed_integrate_last<T, K, P>(
    kernel: &K,
    problem: &P,
    h: T,
    y0: &[T],
    t_start: T,
    t_stop: T,
) -> Result<(T, Vec<T>), IntegrationError>
where
    T: Real,
    K: ErkKernel<T> + ?Sized,
    P: OdeProblem<T> + ?Sized,
{
    run_fixed(kernel, problem, h, y0, t_start, t_stop, |_, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stepcontrol::{FnProblem, GenericErk};
    use crate::tableau::{sample_tableau, shipped_methods, ButcherTableau};

    fn method(name: &str) -> ButcherTableau {
        shipped_methods().into_iter().find(|t| t.name() == name).unwrap()
    }

    fn exp_problem() -> FnProblem<impl Fn(f64, &[f64]) -> Vec<f64>> {
        FnProblem::new("exp", 1, |_t: f64, y: &[f64]| vec![y[0]])
    }

    #[test]
    fn constant_solution_is_exact() {
        let k = GenericErk::<f64>::new(&method("DOPRI5")).unwrap();
        let p = FnProblem::new("zero", 2, |_t: f64, _y: &[f64]| vec![0.0, 0.0]);
        let tol = Tolerances::new(1e-6, 1e-6).unwrap();
        let traj = adaptive_integrate(&k, &p, &tol, &[1.5, -2.0], 0.0, 3.0, &Options::default()).unwrap();
        assert_eq!(traj.last().unwrap(), (3.0, &[1.5, -2.0][..]));
        let log = integrate_info(&k, &p, &tol, &[1.5, -2.0], 0.0, 3.0, &Options::default()).unwrap();
        assert_eq!(log.rejected(), 0);
        assert!(log.errors.iter().all(|&e| e == 0.0));
    }

    #[test]
    fn exponential_with_dopri5() {
        let k = GenericErk::<f64>::new(&method("DOPRI5")).unwrap();
        let tol = Tolerances::new(1e-10, 1e-10).unwrap();
        let (t, y) =
            adaptive_integrate_last(&k, &exp_problem(), &tol, &[1.0], 0.0, 1.0, &Options::default()).unwrap();
        assert_eq!(t, 1.0);
        assert!((y[0] - std::f64::consts::E).abs() < 1e-8, "{}", y[0]);
    }

    #[test]
    fn trajectory_grid_invariants() {
        let k = GenericErk::<f64>::new(&method("Fehlberg45")).unwrap();
        let p = FnProblem::new("osc", 2, |_t: f64, y: &[f64]| vec![y[1], -y[0]]);
        let tol = Tolerances::new(1e-8, 1e-8).unwrap();
        let traj = adaptive_integrate(&k, &p, &tol, &[1.0, 0.0], 0.5, 7.0, &Options::default()).unwrap();
        assert_eq!(traj.times()[0], 0.5);
        assert_eq!(*traj.times().last().unwrap(), 7.0);
        assert!(traj.times().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(traj.states().len(), traj.len() * 2);
    }

    #[test]
    fn step_log_partition_and_telescoping() {
        let k = GenericErk::<f64>::new(&method("ERK43b")).unwrap();
        let p = FnProblem::new("stiffish", 1, |t: f64, y: &[f64]| vec![-50.0 * (y[0] - t.cos())]);
        let tol = Tolerances::new(1e-6, 1e-6).unwrap();
        let opts = Options {
            h0: Some(0.5),
            ..Options::default()
        };
        let log = integrate_info(&k, &p, &tol, &[0.0], 0.0, 2.0, &opts).unwrap();
        assert!(log.rejected() > 0);
        assert_eq!(log.accepted_t.len(), log.accepted_h.len());
        assert_eq!(log.accepted_t.len(), log.errors.len());
        assert_eq!(log.rejected_t.len(), log.rejected_h.len());
        assert!(log.errors.iter().all(|&e| e <= 1.0));
        assert!(log.accepted_h.iter().chain(&log.rejected_h).all(|&h| h > 0.0));
        let total: f64 = log.accepted_h.iter().sum();
        assert!(((total - 2.0) / 2.0).abs() < 1e-12);
        // Each rejected start time is also the start of the accepted retry.
        for t in &log.rejected_t {
            assert!(log.accepted_t.contains(t));
        }
    }

    #[test]
    fn max_steps_and_underflow_are_errors() {
        let k = GenericErk::<f64>::new(&method("DOPRI5")).unwrap();
        let tol = Tolerances::new(1e-12, 1e-12).unwrap();
        let opts = Options {
            max_steps: 5,
            ..Options::default()
        };
        match adaptive_integrate(&k, &exp_problem(), &tol, &[1.0], 0.0, 10.0, &opts) {
            Err(IntegrationError::NonConvergence {
                max_steps: 5, log, ..
            }) => {
                assert_eq!(log.accepted() + log.rejected(), 5)
            }
            other => panic!("{other:?}"),
        }
        let opts = Options {
            h_min: Some(1.0),
            ..Options::default()
        };
        assert!(matches!(
            adaptive_integrate(&k, &exp_problem(), &tol, &[1.0], 0.0, 10.0, &opts),
            Err(IntegrationError::StepUnderflow { .. })
        ));
    }

    #[test]
    fn blow_up_is_divergence() {
        let k = GenericErk::<f64>::new(&sample_tableau()).unwrap();
        let p = FnProblem::new("blow", 1, |_t: f64, y: &[f64]| vec![y[0] * y[0]]);
        match fixed_integrate(&k, &p, 0.1, &[1.0], 0.0, 2.0) {
            Err(IntegrationError::Divergence { t, y }) => {
                assert!(t < 2.0 && y[0].is_finite());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fixed_point_counts() {
        let k = GenericErk::<f64>::new(&method("ERK43b")).unwrap();
        let p = FnProblem::new("zero", 1, |_t: f64, _y: &[f64]| vec![0.0]);
        let traj = fixed_integrate(&k, &p, 0.3, &[2.0], 0.0, 1.0).unwrap();
        assert_eq!(traj.len(), (1.0f64 / 0.3).ceil() as usize + 1);
        assert!(traj.states().iter().all(|&v| v == 2.0));
        assert_eq!(*traj.times().last().unwrap(), 1.0);
        assert_eq!(fixed_step_count(12.0, 0.01), 1200);
        assert_eq!(fixed_step_count(1.0, 0.1), 10);
    }

    #[test]
    fn fixed_order_four_halving() {
        let k = GenericErk::<f64>::new(&method("ERK43b")).unwrap();
        let err = |h: f64| {
            let (_, y) = fixed_integrate_last(&k, &exp_problem(), h, &[1.0], 0.0, 1.0).unwrap();
            (y[0] - std::f64::consts::E).abs()
        };
        let ratio = err(0.1) / err(0.05);
        assert!((ratio - 16.0).abs() < 2.0, "{ratio}");
    }

    #[test]
    fn embedded_propagation_differs() {
        let k = GenericErk::<f64>::new(&method("DOPRI5")).unwrap();
        let tol = Tolerances::new(1e-6, 1e-6).unwrap();
        let main =
            adaptive_integrate_last(&k, &exp_problem(), &tol, &[1.0], 0.0, 1.0, &Options::default()).unwrap();
        let opts = Options {
            propagation: Propagation::Embedded,
            ..Options::default()
        };
        let emb = adaptive_integrate_last(&k, &exp_problem(), &tol, &[1.0], 0.0, 1.0, &opts).unwrap();
        assert_ne!(main.1, emb.1);
        assert!((emb.1[0] - std::f64::consts::E).abs() < 1e-4);
    }

    #[test]
    fn invalid_inputs() {
        let k = GenericErk::<f64>::new(&method("DOPRI5")).unwrap();
        let tol = Tolerances::new(1e-6, 1e-6).unwrap();
        let o = Options::default();
        assert!(adaptive_integrate(&k, &exp_problem(), &tol, &[1.0], 1.0, 1.0, &o).is_err());
        assert!(adaptive_integrate(&k, &exp_problem(), &tol, &[1.0, 2.0], 0.0, 1.0, &o).is_err());
        assert!(adaptive_integrate(&k, &exp_problem(), &tol, &[f64::NAN], 0.0, 1.0, &o).is_err());
        assert!(fixed_integrate(&k, &exp_problem(), -0.1, &[1.0], 0.0, 1.0).is_err());
    }
}
