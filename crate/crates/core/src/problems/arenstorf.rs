use crate::stepcontrol::{OdeProblem, Real};

use super::ProblemError;

/// Period of the orbit through the first initial-value group.
pub const ARENSTORF_PERIOD: f64 = 17.065216560157962558;
const PERIOD_GROUP_2: f64 = 11.124340337266085135;
/// Period of the third orbit for mass ratio `mu1 = 1/82.45`. With the
/// default `mu1` this orbit does not close; its nearest return is about 3e-4.
const PERIOD_GROUP_3: f64 = 6.1921693313196397067;

/// Mass parameters of the restricted three-body problem in synodic
/// coordinates. The medium body sits at `(mu2, 0)`, the large one at `(-mu1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArenstorfParams {
    pub mu1: f64,
    pub mu2: f64,
}

impl ArenstorfParams {
    pub fn new(mu1: f64) -> Result<Self, ProblemError> {
        if !(mu1 > 0.0 && mu1 < 1.0) {
            return Err(ProblemError::Domain(format!("mu1 = {mu1} must lie in (0, 1)")));
        }
        Ok(ArenstorfParams { mu1, mu2: 1.0 - mu1 })
    }
}

impl Default for ArenstorfParams {
    fn default() -> Self {
        ArenstorfParams::new(0.012277471).expect("valid default mass")
    }
}

/// Phase-space point, stored as `[p_x, p_y, q_x, q_y]` when flattened.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArenstorfState {
    pub p_x: f64,
    pub p_y: f64,
    pub q_x: f64,
    pub q_y: f64,
}

impl ArenstorfState {
    pub fn from_slice(y: &[f64]) -> Self {
        ArenstorfState {
            p_x: y[0],
            p_y: y[1],
            q_x: y[2],
            q_y: y[3],
        }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.p_x, self.p_y, self.q_x, self.q_y]
    }

    /// Distances to the medium and the large body.
    pub fn radii(&self, params: &ArenstorfParams) -> (f64, f64) {
        let r1 = (self.q_x - params.mu2).hypot(self.q_y);
        let r2 = (self.q_x + params.mu1).hypot(self.q_y);
        (r1, r2)
    }
}

/// Initial state, masses and orbital period of group 1, 2 or 3.
pub fn arenstorf_initials(group: u8) -> Result<(ArenstorfState, ArenstorfParams, f64), ProblemError> {
    let (p_y, q_x, period) = match group {
        1 => (-1.00758510637908238, 0.994, ARENSTORF_PERIOD),
        2 => (-1.03773262955733680, 0.994, PERIOD_GROUP_2),
        3 => (0.15064248999999985, 1.2, PERIOD_GROUP_3),
        _ => {
            return Err(ProblemError::Domain(format!(
                "Arenstorf group {group} does not exist (expected 1, 2 or 3)"
            )))
        }
    };
    let state = ArenstorfState {
        p_x: 0.0,
        p_y,
        q_x,
        q_y: 0.0,
    };
    Ok((state, ArenstorfParams::default(), period))
}

fn radii_checked<T: Real>(q_x: T, q_y: T, params: &ArenstorfParams) -> Option<(T, T)> {
    let r1 = (q_x - T::lit(params.mu2)).hypot(q_y);
    let r2 = (q_x + T::lit(params.mu1)).hypot(q_y);
    (r1 > T::zero() && r2 > T::zero()).then_some((r1, r2))
}

fn collision(q_x: f64, q_y: f64) -> ProblemError {
    ProblemError::Singularity(format!("collision at (q_x, q_y) = ({q_x}, {q_y})"))
}

/// `H = (p_x^2 + p_y^2)/2 + p_x q_y - p_y q_x - mu1/r1 - mu2/r2`.
pub fn arenstorf_hamiltonian(s: &ArenstorfState, params: &ArenstorfParams) -> Result<f64, ProblemError> {
    let (r1, r2) = radii_checked(s.q_x, s.q_y, params).ok_or_else(|| collision(s.q_x, s.q_y))?;
    let f = params.mu1 / r1 + params.mu2 / r2;
    Ok(0.5 * (s.p_x * s.p_x + s.p_y * s.p_y) + s.p_x * s.q_y - s.p_y * s.q_x - f)
}

/// Distance between the positions of two states; momenta are ignored.
pub fn closure_error(end: &[f64], start: &[f64]) -> f64 {
    assert!(
        end.len() == 4 && start.len() == 4,
        "Arenstorf states have four components"
    );
    (end[2] - start[2]).hypot(end[3] - start[3])
}

/// The canonical equations, or `None` at a collision.
pub(crate) fn arenstorf_rhs<T: Real>(params: &ArenstorfParams, y: &[T]) -> Option<[T; 4]> {
    let (p_x, p_y, q_x, q_y) = (y[0], y[1], y[2], y[3]);
    let (r1, r2) = radii_checked(q_x, q_y, params)?;
    let mu1 = T::lit(params.mu1);
    let mu2 = T::lit(params.mu2);
    let r1c = r1 * r1 * r1;
    let r2c = r2 * r2 * r2;
    let df_dqx = -mu1 * (q_x - mu2) / r1c - mu2 * (q_x + mu1) / r2c;
    let df_dqy = -mu1 * q_y / r1c - mu2 * q_y / r2c;
    Some([p_y + df_dqx, -p_x + df_dqy, p_x + q_y, p_y - q_x])
}

/// Arenstorf problem in canonical form. A collision yields a NaN
/// derivative, which the drivers report as divergence.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Arenstorf {
    pub params: ArenstorfParams,
}

impl<T: Real> OdeProblem<T> for Arenstorf {
    fn dimension(&self) -> usize {
        4
    }

    fn rhs(&self, _t: T, y: &[T], dydt: &mut [T]) {
        match arenstorf_rhs(&self.params, y) {
            Some(d) => dydt.copy_from_slice(&d),
            None => dydt.fill(T::nan()),
        }
    }

    fn name(&self) -> &str {
        "arenstorf"
    }
}

pub(crate) fn singular_error(y: &[f64]) -> ProblemError {
    collision(y[2], y[3])
}
