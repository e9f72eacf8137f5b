use crate::stepcontrol::{OdeProblem, Real};

/// Van der Pol oscillator `x1' = x2`, `x2' = mu (1 - x1^2) x2 - x1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VdpParams {
    pub mu: f64,
}

impl Default for VdpParams {
    fn default() -> Self {
        VdpParams { mu: 1.0 }
    }
}

impl<T: Real> OdeProblem<T> for VdpParams {
    fn dimension(&self) -> usize {
        2
    }

    fn rhs(&self, _t: T, y: &[T], dydt: &mut [T]) {
        let mu = T::lit(self.mu);
        dydt[0] = y[1];
        dydt[1] = mu * (T::one() - y[0] * y[0]) * y[1] - y[0];
    }

    fn name(&self) -> &str {
        "vdp"
    }
}

/// Euler's equations of a free rigid body, `x1' = I1 x2 x3` and cyclic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidBodyParams {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
}

impl Default for RigidBodyParams {
    fn default() -> Self {
        RigidBodyParams {
            i1: -2.0,
            i2: 1.25,
            i3: -0.5,
        }
    }
}

impl<T: Real> OdeProblem<T> for RigidBodyParams {
    fn dimension(&self) -> usize {
        3
    }

    fn rhs(&self, _t: T, y: &[T], dydt: &mut [T]) {
        dydt[0] = T::lit(self.i1) * y[1] * y[2];
        dydt[1] = T::lit(self.i2) * y[0] * y[2];
        dydt[2] = T::lit(self.i3) * y[0] * y[1];
    }

    fn name(&self) -> &str {
        "rigid-body"
    }
}

/// Brusselator `x1' = 1 + x1^2 x2 - 4 x1`, `x2' = 3 x1 - x1^2 x2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Brusselator;

impl<T: Real> OdeProblem<T> for Brusselator {
    fn dimension(&self) -> usize {
        2
    }

    fn rhs(&self, _t: T, y: &[T], dydt: &mut [T]) {
        let x1sq_x2 = y[0] * y[0] * y[1];
        dydt[0] = T::one() + x1sq_x2 - T::lit(4.0) * y[0];
        dydt[1] = T::lit(3.0) * y[0] - x1sq_x2;
    }

    fn name(&self) -> &str {
        "brusselator"
    }
}

/// `y' = y`, solved by `e^t`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Exponential;

impl<T: Real> OdeProblem<T> for Exponential {
    fn dimension(&self) -> usize {
        1
    }

    fn rhs(&self, _t: T, y: &[T], dydt: &mut [T]) {
        dydt[0] = y[0];
    }

    fn name(&self) -> &str {
        "exponential"
    }
}
