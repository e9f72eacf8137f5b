//! Embedded explicit Runge–Kutta methods: exact tableaus, specialized solver
//! generation, adaptive step-size control and benchmark problems.

#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod codegen;
#[rustfmt::skip]
pub mod generated;
pub mod problems;
pub mod stepcontrol;
pub mod tableau;
