use std::time::{Duration, Instant};

use crate::generated::GeneratedMethod;
use crate::problems::{closure_error, Brusselator, Exponential, Problem};
use crate::stepcontrol::{
    adaptive_integrate_last, fixed_integrate_last, ErkKernel, GenericErk, IntegrationError, Options, Real,
    Tolerances,
};
use crate::tableau::ButcherTableau;

/// Step sizes of the fixed-step order study.
pub const CONVERGENCE_STEPS: [f64; 4] = [0.1, 0.05, 0.025, 0.0125];

/// Least-squares slope of `log(err)` against `log(h)`.
pub fn loglog_slope(h: &[f64], err: &[f64]) -> f64 {
    let xs: Vec<f64> = h.iter().map(|v| v.ln()).collect();
    let ys: Vec<f64> = err.iter().map(|v| v.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub method: String,
    pub order: u32,
    pub steps: Vec<f64>,
    /// Global errors at `t = 1` in double-double arithmetic.
    pub errors: Vec<f64>,
    pub slope: f64,
    /// The same study in binary64, where roundoff limits high orders.
    pub errors_binary64: Vec<f64>,
    pub slope_binary64: f64,
}

impl ConvergenceRow {
    pub fn meets_order(&self) -> bool {
        self.slope >= f64::from(self.order) - 0.3
    }
}

fn exp_errors<T: Real>(
    tableau: &ButcherTableau,
    steps: &[f64],
    exact: T,
) -> Result<Vec<f64>, IntegrationError> {
    let kernel = GenericErk::<T>::new(tableau)?;
    steps
        .iter()
        .map(|&h| {
            let (_, y) =
                fixed_integrate_last(&kernel, &Exponential, T::lit(h), &[T::one()], T::zero(), T::one())?;
            Ok((y[0] - exact).abs().approx())
        })
        .collect()
}

/// Fixed-step global error of `y' = y` on `[0, 1]` for each step size.
pub fn convergence_study(
    tableau: &ButcherTableau,
    steps: &[f64],
) -> Result<ConvergenceRow, IntegrationError> {
    let errors = exp_errors(tableau, steps, twofloat::consts::E)?;
    let errors_binary64 = exp_errors(tableau, steps, std::f64::consts::E)?;
    Ok(ConvergenceRow {
        method: tableau.name().to_string(),
        order: tableau.order(),
        steps: steps.to_vec(),
        slope: loglog_slope(steps, &errors),
        slope_binary64: loglog_slope(steps, &errors_binary64),
        errors,
        errors_binary64,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum RowStatus {
    Ok,
    Failed(String),
    Missing,
}

impl RowStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Failed(_) => "failed",
            RowStatus::Missing => "missing",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosureRow {
    pub method: String,
    pub closure_error: Option<f64>,
    pub status: RowStatus,
}

/// Closure error after one period of an Arenstorf orbit.
pub fn arenstorf_closure<K: ErkKernel<f64> + ?Sized>(
    kernel: &K,
    group: u8,
    tol: &Tolerances,
    opts: &Options,
) -> Result<f64, IntegrationError> {
    let problem = Problem::arenstorf(group).map_err(|e| IntegrationError::InvalidInput(e.to_string()))?;
    let y0 = problem.initial_state();
    let (t0, t1) = problem.interval();
    let (_, y) = adaptive_integrate_last(kernel, &problem, tol, &y0, t0, t1, opts)?;
    Ok(closure_error(&y, &y0))
}

/// One row per requested method, integrated concurrently and ordered by
/// method name. Names without a generated solver yield `missing` rows.
pub fn arenstorf_table(methods: &[String], group: u8, tol: &Tolerances, opts: &Options) -> Vec<ClosureRow> {
    let mut rows: Vec<ClosureRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = methods
            .iter()
            .map(|name| {
                scope.spawn(move || match GeneratedMethod::by_name(name) {
                    None => ClosureRow {
                        method: name.clone(),
                        closure_error: None,
                        status: RowStatus::Missing,
                    },
                    Some(kernel) => match arenstorf_closure(&kernel, group, tol, opts) {
                        Ok(e) => ClosureRow {
                            method: name.clone(),
                            closure_error: Some(e),
                            status: RowStatus::Ok,
                        },
                        Err(e) => ClosureRow {
                            method: name.clone(),
                            closure_error: None,
                            status: RowStatus::Failed(e.to_string()),
                        },
                    },
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("report row panicked"))
            .collect()
    });
    rows.sort_by(|a, b| a.method.cmp(&b.method));
    rows
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub method: String,
    pub steps: usize,
    pub generated: Duration,
    pub generic: Duration,
    /// Largest componentwise difference of the two final states.
    pub max_difference: f64,
}

impl BenchResult {
    /// Throughput of the generated kernel relative to the interpreter.
    pub fn ratio(&self) -> f64 {
        self.generic.as_secs_f64() / self.generated.as_secs_f64()
    }
}

fn best_of<F: FnMut() -> Vec<f64>>(runs: usize, mut f: F) -> (Duration, Vec<f64>) {
    let mut best = Duration::MAX;
    let mut out = Vec::new();
    for _ in 0..runs {
        let start = Instant::now();
        out = std::hint::black_box(f());
        best = best.min(start.elapsed());
    }
    (best, out)
}

/// Times `steps` fixed Brusselator steps on `[0, 20]` with the generated
/// kernel and with the interpreter for the same tableau, best of `runs`.
pub fn bench_kernels(
    method: GeneratedMethod,
    tableau: &ButcherTableau,
    steps: usize,
    runs: usize,
) -> Result<BenchResult, IntegrationError> {
    let generic = GenericErk::<f64>::new(tableau)?;
    let h = 20.0 / steps as f64;
    let y0 = [1.5, 3.0];
    let gen_once = || fixed_integrate_last(&method, &Brusselator, h, &y0, 0.0, 20.0);
    let int_once = || fixed_integrate_last(&generic, &Brusselator, h, &y0, 0.0, 20.0);
    gen_once()?;
    int_once()?;
    let (t_gen, y_gen) = best_of(runs, || gen_once().expect("checked above").1);
    let (t_int, y_int) = best_of(runs, || int_once().expect("checked above").1);
    let max_difference = y_gen
        .iter()
        .zip(&y_int)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(BenchResult {
        method: method.method_name().to_string(),
        steps,
        generated: t_gen,
        generic: t_int,
        max_difference,
    })
}

/// Convergence rows for the named methods, computed concurrently and
/// ordered by name.
pub fn convergence_table(
    methods: &[String],
    tableaus: &[ButcherTableau],
) -> Vec<(String, Result<ConvergenceRow, RowStatus>)> {
    let mut rows: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = methods
            .iter()
            .map(|name| {
                scope.spawn(move || {
                    let row = match tableaus.iter().find(|t| t.name() == name) {
                        None => Err(RowStatus::Missing),
                        Some(t) => convergence_study(t, &CONVERGENCE_STEPS)
                            .map_err(|e| RowStatus::Failed(e.to_string())),
                    };
                    (name.clone(), row)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("report row panicked"))
            .collect::<Vec<_>>()
    });
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    rows
}
