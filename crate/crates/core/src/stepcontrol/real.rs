use std::fmt::Debug;

use num_traits::Float;
use twofloat::TwoFloat;

use crate::tableau::Rational;

/// Floating-point scalar the kernels and drivers are generic over.
pub trait Real: Float + Debug + Send + Sync + 'static {
    fn lit(x: f64) -> Self;

    /// Nearest representable value of an exact coefficient.
    fn from_rational(r: &Rational) -> Self;

    fn approx(self) -> f64;
}

impl Real for f64 {
    fn lit(x: f64) -> Self {
        x
    }

    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }

    fn approx(self) -> f64 {
        self
    }
}

/// Double-double arithmetic (about 106 bits), used to measure convergence
/// below binary64 roundoff.
impl Real for TwoFloat {
    fn lit(x: f64) -> Self {
        TwoFloat::from(x)
    }

    fn from_rational(r: &Rational) -> Self {
        let hi = r.to_f64();
        let rest = r - &Rational::from_f64_exact(hi).expect("finite coefficient");
        TwoFloat::new_add(hi, rest.to_f64())
    }

    fn approx(self) -> f64 {
        self.hi() + self.lo()
    }
}
