//! Step kernels, the step-size controller and the integration drivers.

mod controller;
mod driver;
mod kernel;
mod problem;
mod real;

pub use controller::{
    error_norm, propose_step_size, rescale_rejected, retry_divisor, step_divisor, ControllerParams,
    Tolerances,
};
pub use driver::{
    adaptive_integrate, adaptive_integrate_last, fixed_integrate, fixed_integrate_last, fixed_step_count,
    integrate_info, IntegrationError, Options, Propagation,
};
pub use kernel::{erk_step_generic, ErkKernel, GenericErk, StageBuffer, StageValues, StepOutput};
pub use problem::{FnProblem, OdeProblem, StepLog, Trajectory};
pub use real::Real;
