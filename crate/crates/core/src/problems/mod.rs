//! Benchmark systems: van der Pol, rigid body, Brusselator and the
//! Arenstorf orbits of the restricted three-body problem.

mod arenstorf;
mod classic;

use std::fmt;
use std::str::FromStr;

pub use arenstorf::{
    arenstorf_hamiltonian, arenstorf_initials, closure_error, Arenstorf, ArenstorfParams, ArenstorfState,
    ARENSTORF_PERIOD,
};
pub use classic::{Brusselator, Exponential, RigidBodyParams, VdpParams};

use crate::stepcontrol::{OdeProblem, Real};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProblemError {
    #[error("{0}")]
    Domain(String),
    #[error("singular point: {0}")]
    Singularity(String),
    #[error("unknown problem `{0}` (expected vdp, rigid-body, brusselator or arenstorf:1|2|3)")]
    Unknown(String),
    #[error("state has {found} components, `{problem}` needs {expected}")]
    Dimension {
        problem: String,
        expected: usize,
        found: usize,
    },
}

/// One of the named benchmark problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem {
    Vdp(VdpParams),
    RigidBody(RigidBodyParams),
    Brusselator,
    Arenstorf { group: u8, params: ArenstorfParams },
}

impl Problem {
    pub const NAMES: [&'static str; 6] = [
        "vdp",
        "rigid-body",
        "brusselator",
        "arenstorf:1",
        "arenstorf:2",
        "arenstorf:3",
    ];

    pub fn arenstorf(group: u8) -> Result<Self, ProblemError> {
        let (_, params, _) = arenstorf_initials(group)?;
        Ok(Problem::Arenstorf { group, params })
    }

    pub fn dimension(&self) -> usize {
        match self {
            Problem::Vdp(_) | Problem::Brusselator => 2,
            Problem::RigidBody(_) => 3,
            Problem::Arenstorf { .. } => 4,
        }
    }

    /// Initial state of the benchmark.
    pub fn initial_state(&self) -> Vec<f64> {
        match self {
            Problem::Vdp(_) => vec![0.0, 3f64.sqrt()],
            Problem::RigidBody(_) => vec![0.0, 1.0, 1.0],
            Problem::Brusselator => vec![1.5, 3.0],
            Problem::Arenstorf { group, .. } => arenstorf_initials(*group)
                .expect("group checked at construction")
                .0
                .to_array()
                .to_vec(),
        }
    }

    /// Integration interval of the benchmark; one period for Arenstorf.
    pub fn interval(&self) -> (f64, f64) {
        match self {
            Problem::Vdp(_) | Problem::RigidBody(_) => (0.0, 12.0),
            Problem::Brusselator => (0.0, 20.0),
            Problem::Arenstorf { group, .. } => (
                0.0,
                arenstorf_initials(*group)
                    .expect("group checked at construction")
                    .2,
            ),
        }
    }
}

impl FromStr for Problem {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vdp" => Ok(Problem::Vdp(VdpParams::default())),
            "rigid-body" => Ok(Problem::RigidBody(RigidBodyParams::default())),
            "brusselator" => Ok(Problem::Brusselator),
            _ => match s.strip_prefix("arenstorf:").map(str::parse::<u8>) {
                Some(Ok(g @ 1..=3)) => Problem::arenstorf(g),
                _ => Err(ProblemError::Unknown(s.to_string())),
            },
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Vdp(_) => f.write_str("vdp"),
            Problem::RigidBody(_) => f.write_str("rigid-body"),
            Problem::Brusselator => f.write_str("brusselator"),
            Problem::Arenstorf { group, .. } => write!(f, "arenstorf:{group}"),
        }
    }
}

impl<T: Real> OdeProblem<T> for Problem {
    fn dimension(&self) -> usize {
        Problem::dimension(self)
    }

    fn rhs(&self, t: T, y: &[T], dydt: &mut [T]) {
        match self {
            Problem::Vdp(p) => p.rhs(t, y, dydt),
            Problem::RigidBody(p) => p.rhs(t, y, dydt),
            Problem::Brusselator => Brusselator.rhs(t, y, dydt),
            Problem::Arenstorf { params, .. } => Arenstorf { params: *params }.rhs(t, y, dydt),
        }
    }

    fn name(&self) -> &str {
        match self {
            Problem::Vdp(_) => "vdp",
            Problem::RigidBody(_) => "rigid-body",
            Problem::Brusselator => "brusselator",
            Problem::Arenstorf { group: 1, .. } => "arenstorf:1",
            Problem::Arenstorf { group: 2, .. } => "arenstorf:2",
            Problem::Arenstorf { .. } => "arenstorf:3",
        }
    }
}

/// Checked right-hand side evaluation.
pub fn evaluate_rhs(problem: &Problem, t: f64, y: &[f64]) -> Result<Vec<f64>, ProblemError> {
    if y.len() != problem.dimension() {
        return Err(ProblemError::Dimension {
            problem: problem.to_string(),
            expected: problem.dimension(),
            found: y.len(),
        });
    }
    if let Problem::Arenstorf { params, .. } = problem {
        return arenstorf::arenstorf_rhs(params, y)
            .map(|d| d.to_vec())
            .ok_or_else(|| arenstorf::singular_error(y));
    }
    let mut out = vec![0.0; y.len()];
    OdeProblem::<f64>::rhs(problem, t, y, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests;
