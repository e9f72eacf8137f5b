use super::{IntegrationError, OdeProblem, Real};
use crate::tableau::{validate_tableau, ButcherTableau};

/// Reusable storage for the stage derivatives `k` and the stage argument.
#[derive(Debug, Clone)]
pub struct StageBuffer<T> {
    pub k: Vec<Vec<T>>,
    pub arg: Vec<T>,
}

impl<T: Real> StageBuffer<T> {
    pub fn new(stages: usize, dimension: usize) -> Self {
        StageBuffer {
            k: vec![vec![T::zero(); dimension]; stages],
            arg: vec![T::zero(); dimension],
        }
    }

    pub fn dimension(&self) -> usize {
        self.arg.len()
    }
}

/// One step of an embedded explicit Runge–Kutta pair.
///
/// `step` writes the main solution into `y_next` and the embedded one into
/// `y_hat`. Both the generic interpreter and the generated kernels implement
/// this contract, so the drivers accept either.
pub trait ErkKernel<T: Real> {
    fn name(&self) -> &str;
    fn stages(&self) -> usize;
    fn order(&self) -> u32;
    fn embedded_order(&self) -> u32;

    #[allow(clippy::too_many_arguments)]
    fn step<P: OdeProblem<T> + ?Sized>(
        &self,
        problem: &P,
        t: T,
        y: &[T],
        h: T,
        stages: &mut StageBuffer<T>,
        y_next: &mut [T],
        y_hat: &mut [T],
    );
}

impl<T: Real, K: ErkKernel<T> + ?Sized> ErkKernel<T> for &K {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn stages(&self) -> usize {
        (**self).stages()
    }
    fn order(&self) -> u32 {
        (**self).order()
    }
    fn embedded_order(&self) -> u32 {
        (**self).embedded_order()
    }
    fn step<P: OdeProblem<T> + ?Sized>(
        &self,
        problem: &P,
        t: T,
        y: &[T],
        h: T,
        stages: &mut StageBuffer<T>,
        y_next: &mut [T],
        y_hat: &mut [T],
    ) {
        (**self).step(problem, t, y, h, stages, y_next, y_hat)
    }
}

/// Array-driven interpreter of a Butcher tableau.
#[derive(Debug, Clone)]
pub struct GenericErk<T> {
    name: String,
    order: u32,
    embedded_order: u32,
    a: Vec<Vec<T>>,
    b: Vec<T>,
    b_hat: Vec<T>,
    c: Vec<T>,
}

impl<T: Real> GenericErk<T> {
    /// Coefficients are rounded to the nearest `T`, which for `f64` matches
    /// the literals in generated kernels.
    pub fn new(tableau: &ButcherTableau) -> Result<Self, IntegrationError> {
        let report = validate_tableau(tableau);
        if !report.is_ok() {
            return Err(IntegrationError::InvalidInput(report.to_string()));
        }
        let conv = |row: &[crate::tableau::Rational]| row.iter().map(T::from_rational).collect();
        Ok(GenericErk {
            name: tableau.name().to_string(),
            order: tableau.order(),
            embedded_order: tableau.embedded_order(),
            a: tableau.a().iter().map(|r| conv(r)).collect(),
            b: conv(tableau.b()),
            b_hat: conv(tableau.b_hat()),
            c: conv(tableau.c()),
        })
    }
}

impl<T: Real> ErkKernel<T> for GenericErk<T> {
    fn name(&self) -> &str {
        &self.name
    }
    fn stages(&self) -> usize {
        self.b.len()
    }
    fn order(&self) -> u32 {
        self.order
    }
    fn embedded_order(&self) -> u32 {
        self.embedded_order
    }

    fn step<P: OdeProblem<T> + ?Sized>(
        &self,
        problem: &P,
        t: T,
        y: &[T],
        h: T,
        stages: &mut StageBuffer<T>,
        y_next: &mut [T],
        y_hat: &mut [T],
    ) {
        let n = y.len();
        let StageBuffer { k, arg } = stages;
        for i in 0..self.b.len() {
            let (done, rest) = k.split_at_mut(i);
            for a in 0..n {
                let mut sum = T::zero();
                for (j, kj) in done.iter().enumerate() {
                    sum = sum + self.a[i][j] * kj[a];
                }
                arg[a] = y[a] + h * sum;
            }
            problem.rhs(t + self.c[i] * h, arg, &mut rest[0]);
        }
        for a in 0..n {
            let mut main = T::zero();
            let mut embedded = T::zero();
            for (j, kj) in k.iter().enumerate() {
                main = main + self.b[j] * kj[a];
                embedded = embedded + self.b_hat[j] * kj[a];
            }
            y_next[a] = y[a] + h * main;
            y_hat[a] = y[a] + h * embedded;
        }
    }
}

/// Stage derivatives `k^i` of one step, one row per stage.
#[derive(Debug, Clone, PartialEq)]
pub struct StageValues<T = f64> {
    pub k: Vec<Vec<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutput<T = f64> {
    pub y_next: Vec<T>,
    pub y_hat_next: Vec<T>,
    pub stages: StageValues<T>,
}

/// Single step of the generic interpreter with freshly allocated buffers.
pub fn erk_step_generic<T: Real, P: OdeProblem<T> + ?Sized>(
    tableau: &ButcherTableau,
    problem: &P,
    t: T,
    y: &[T],
    h: T,
) -> Result<StepOutput<T>, IntegrationError> {
    if h.is_nan() || h <= T::zero() {
        return Err(IntegrationError::InvalidInput(format!(
            "step size must be positive, got {h:?}"
        )));
    }
    if y.len() != problem.dimension() {
        return Err(IntegrationError::InvalidInput(format!(
            "state has {} components, problem `{}` has dimension {}",
            y.len(),
            problem.name(),
            problem.dimension()
        )));
    }
    let kernel = GenericErk::new(tableau)?;
    let mut stages = StageBuffer::new(kernel.stages(), y.len());
    let mut y_next = vec![T::zero(); y.len()];
    let mut y_hat_next = vec![T::zero(); y.len()];
    kernel.step(problem, t, y, h, &mut stages, &mut y_next, &mut y_hat_next);
    Ok(StepOutput {
        y_next,
        y_hat_next,
        stages: StageValues { k: stages.k },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stepcontrol::FnProblem;
    use crate::tableau::sample_tableau;

    #[test]
    fn sample_step_on_exponential() {
        // Hand evaluation: k1 = 1, k2 = 1 + 0.1 = 1.1, k3 = 1 + 0.1*(1 + 1.1)/4 = 1.0525.
        let p = FnProblem::new("exp", 1, |_t: f64, y: &[f64]| vec![y[0]]);
        let out = erk_step_generic(&sample_tableau(), &p, 0.0, &[1.0], 0.1).unwrap();
        let k: Vec<f64> = out.stages.k.iter().map(|r| r[0]).collect();
        for (got, want) in k.iter().zip([1.0, 1.1, 1.0525]) {
            assert!((got - want).abs() < 1e-15, "{k:?}");
        }
        assert!((out.y_next[0] - 1.105).abs() < 1e-15);
        // 1 + 0.1 * (1/6 + 1.1/6 + 2*1.0525/3)
        assert!((out.y_hat_next[0] - 1.1051666666666666).abs() < 1e-15);
    }

    #[test]
    fn identical_weight_rows_give_identical_outputs() {
        let t = sample_tableau();
        let t = t.clone().with_b_hat(t.b().to_vec());
        let p = FnProblem::new("osc", 2, |t: f64, y: &[f64]| vec![y[1], -y[0] + t.sin()]);
        let out = erk_step_generic(&t, &p, 0.3, &[0.2, -1.0], 0.05).unwrap();
        assert_eq!(out.y_next, out.y_hat_next);
    }

    #[test]
    fn zero_field_leaves_state_unchanged() {
        let p = FnProblem::new("zero", 2, |_t: f64, _y: &[f64]| vec![0.0, 0.0]);
        let out = erk_step_generic(&sample_tableau(), &p, 1.0, &[3.0, -4.0], 0.5).unwrap();
        assert_eq!(out.y_next, vec![3.0, -4.0]);
        assert_eq!(out.y_hat_next, vec![3.0, -4.0]);
        assert!(out.stages.k.iter().flatten().all(|&k| k == 0.0));
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = FnProblem::new("exp", 1, |_t: f64, y: &[f64]| vec![y[0]]);
        assert!(erk_step_generic(&sample_tableau(), &p, 0.0, &[1.0], 0.0).is_err());
        assert!(erk_step_generic(&sample_tableau(), &p, 0.0, &[1.0, 2.0], 0.1).is_err());
        let bad = sample_tableau().with_c(2, crate::tableau::Rational::ratio(1, 3));
        assert!(erk_step_generic(&bad, &p, 0.0, &[1.0], 0.1).is_err());
    }

    #[test]
    #[should_panic(expected = "returned 2 components")]
    fn wrong_rhs_length_is_a_contract_violation() {
        let p = FnProblem::new("bad", 1, |_t: f64, y: &[f64]| vec![y[0], 0.0]);
        let _ = erk_step_generic(&sample_tableau(), &p, 0.0, &[1.0], 0.1);
    }
}
