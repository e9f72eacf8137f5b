use super::Real;

/// Right-hand side of `y' = f(t, y)` for a fixed dimension.
///
/// Implementations must be deterministic and free of side effects; the
/// drivers may call `rhs` any number of times and from several threads.
pub trait OdeProblem<T: Real = f64> {
    fn dimension(&self) -> usize;

    /// Writes `f(t, y)` into `dydt`; both slices have length `dimension()`.
    fn rhs(&self, t: T, y: &[T], dydt: &mut [T]);

    fn name(&self) -> &str {
        "anonymous"
    }
}

impl<T: Real, P: OdeProblem<T> + ?Sized> OdeProblem<T> for &P {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }

    fn rhs(&self, t: T, y: &[T], dydt: &mut [T]) {
        (**self).rhs(t, y, dydt)
    }

    fn name(&self) -> &str {
        (**self).name()
    }
}

/// Problem backed by a closure that returns the derivative as a vector.
pub struct FnProblem<F> {
    name: String,
    dimension: usize,
    f: F,
}

impl<F> FnProblem<F> {
    pub fn new(name: impl Into<String>, dimension: usize, f: F) -> Self {
        FnProblem {
            name: name.into(),
            dimension,
            f,
        }
    }
}

impl<T: Real, F: Fn(T, &[T]) -> Vec<T>> OdeProblem<T> for FnProblem<F> {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn rhs(&self, t: T, y: &[T], dydt: &mut [T]) {
        let out = (self.f)(t, y);
        assert_eq!(
            out.len(),
            self.dimension,
            "right-hand side of `{}` returned {} components, expected {}",
            self.name,
            out.len(),
            self.dimension
        );
        dydt.copy_from_slice(&out);
    }

    fn name(&self) -> &str {
        &self.name
    }
}

/// Accepted grid points and the solution at each of them.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T = f64> {
    dimension: usize,
    times: Vec<T>,
    states: Vec<T>,
}

impl<T: Real> Trajectory<T> {
    pub(crate) fn new(dimension: usize) -> Self {
        Trajectory {
            dimension,
            times: Vec::new(),
            states: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, t: T, y: &[T]) {
        debug_assert_eq!(y.len(), self.dimension);
        self.times.push(t);
        self.states.extend_from_slice(y);
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    /// Row-major states, `len() * dimension()` values.
    pub fn states(&self) -> &[T] {
        &self.states
    }

    pub fn state(&self, k: usize) -> &[T] {
        &self.states[k * self.dimension..(k + 1) * self.dimension]
    }

    pub fn rows(&self) -> impl Iterator<Item = (T, &[T])> + '_ {
        self.times
            .iter()
            .copied()
            .zip(self.states.chunks_exact(self.dimension.max(1)))
    }

    pub fn last(&self) -> Option<(T, &[T])> {
        let k = self.len().checked_sub(1)?;
        Some((self.times[k], self.state(k)))
    }
}

/// Accepted and rejected step records of one adaptive run.
///
/// Times are the start of the attempted step; `errors[k]` is the local error
/// norm of accepted step `k`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StepLog {
    pub accepted_t: Vec<f64>,
    pub accepted_h: Vec<f64>,
    pub rejected_t: Vec<f64>,
    pub rejected_h: Vec<f64>,
    pub errors: Vec<f64>,
}

impl StepLog {
    pub fn accepted(&self) -> usize {
        self.accepted_t.len()
    }

    pub fn rejected(&self) -> usize {
        self.rejected_t.len()
    }
}
