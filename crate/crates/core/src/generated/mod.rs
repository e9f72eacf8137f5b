//! Index of the generated solvers.
//!
//! Generated by `forge generate` from the method file. Do not edit.

pub mod erk43b;
pub mod fehlberg45;
pub mod dverk65;
pub mod dopri5;
pub mod dprk546s;
pub mod dprk547s;
pub mod dprk658m;
pub mod fehlberg78b;
pub mod dopri8;

use crate::stepcontrol::{ErkKernel, OdeProblem, StageBuffer};

/// Every generated kernel, in method-file order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratedMethod {
    Erk43b,
    Fehlberg45,
    Dverk65,
    Dopri5,
    Dprk546s,
    Dprk547s,
    Dprk658m,
    Fehlberg78b,
    Dopri8,
}

impl GeneratedMethod {
    pub const ALL: [GeneratedMethod; 9] = [
        GeneratedMethod::Erk43b,
        GeneratedMethod::Fehlberg45,
        GeneratedMethod::Dverk65,
        GeneratedMethod::Dopri5,
        GeneratedMethod::Dprk546s,
        GeneratedMethod::Dprk547s,
        GeneratedMethod::Dprk658m,
        GeneratedMethod::Fehlberg78b,
        GeneratedMethod::Dopri8,
    ];

    pub fn by_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.method_name() == name)
    }

    pub fn method_name(self) -> &'static str {
        match self {
            GeneratedMethod::Erk43b => "ERK43b",
            GeneratedMethod::Fehlberg45 => "Fehlberg45",
            GeneratedMethod::Dverk65 => "DVERK65",
            GeneratedMethod::Dopri5 => "DOPRI5",
            GeneratedMethod::Dprk546s => "DPRK546S",
            GeneratedMethod::Dprk547s => "DPRK547S",
            GeneratedMethod::Dprk658m => "DPRK658M",
            GeneratedMethod::Fehlberg78b => "Fehlberg78B",
            GeneratedMethod::Dopri8 => "DOPRI8",
        }
    }
}

impl ErkKernel<f64> for GeneratedMethod {
    fn name(&self) -> &str {
        match self {
            GeneratedMethod::Erk43b => erk43b::Erk43b.name(),
            GeneratedMethod::Fehlberg45 => fehlberg45::Fehlberg45.name(),
            GeneratedMethod::Dverk65 => dverk65::Dverk65.name(),
            GeneratedMethod::Dopri5 => dopri5::Dopri5.name(),
            GeneratedMethod::Dprk546s => dprk546s::Dprk546s.name(),
            GeneratedMethod::Dprk547s => dprk547s::Dprk547s.name(),
            GeneratedMethod::Dprk658m => dprk658m::Dprk658m.name(),
            GeneratedMethod::Fehlberg78b => fehlberg78b::Fehlberg78b.name(),
            GeneratedMethod::Dopri8 => dopri8::Dopri8.name(),
        }
    }

    fn stages(&self) -> usize {
        match self {
            GeneratedMethod::Erk43b => erk43b::Erk43b.stages(),
            GeneratedMethod::Fehlberg45 => fehlberg45::Fehlberg45.stages(),
            GeneratedMethod::Dverk65 => dverk65::Dverk65.stages(),
            GeneratedMethod::Dopri5 => dopri5::Dopri5.stages(),
            GeneratedMethod::Dprk546s => dprk546s::Dprk546s.stages(),
            GeneratedMethod::Dprk547s => dprk547s::Dprk547s.stages(),
            GeneratedMethod::Dprk658m => dprk658m::Dprk658m.stages(),
            GeneratedMethod::Fehlberg78b => fehlberg78b::Fehlberg78b.stages(),
            GeneratedMethod::Dopri8 => dopri8::Dopri8.stages(),
        }
    }

    fn order(&self) -> u32 {
        match self {
            GeneratedMethod::Erk43b => erk43b::Erk43b.order(),
            GeneratedMethod::Fehlberg45 => fehlberg45::Fehlberg45.order(),
            GeneratedMethod::Dverk65 => dverk65::Dverk65.order(),
            GeneratedMethod::Dopri5 => dopri5::Dopri5.order(),
            GeneratedMethod::Dprk546s => dprk546s::Dprk546s.order(),
            GeneratedMethod::Dprk547s => dprk547s::Dprk547s.order(),
            GeneratedMethod::Dprk658m => dprk658m::Dprk658m.order(),
            GeneratedMethod::Fehlberg78b => fehlberg78b::Fehlberg78b.order(),
            GeneratedMethod::Dopri8 => dopri8::Dopri8.order(),
        }
    }

    fn embedded_order(&self) -> u32 {
        match self {
            GeneratedMethod::Erk43b => erk43b::Erk43b.embedded_order(),
            GeneratedMethod::Fehlberg45 => fehlberg45::Fehlberg45.embedded_order(),
            GeneratedMethod::Dverk65 => dverk65::Dverk65.embedded_order(),
            GeneratedMethod::Dopri5 => dopri5::Dopri5.embedded_order(),
            GeneratedMethod::Dprk546s => dprk546s::Dprk546s.embedded_order(),
            GeneratedMethod::Dprk547s => dprk547s::Dprk547s.embedded_order(),
            GeneratedMethod::Dprk658m => dprk658m::Dprk658m.embedded_order(),
            GeneratedMethod::Fehlberg78b => fehlberg78b::Fehlberg78b.embedded_order(),
            GeneratedMethod::Dopri8 => dopri8::Dopri8.embedded_order(),
        }
    }

    fn step<P: OdeProblem<f64> + ?Sized>(
        &self,
        problem: &P,
        t: f64,
        y: &[f64],
        h: f64,
        stages: &mut StageBuffer<f64>,
        y_next: &mut [f64],
        y_hat: &mut [f64],
    ) {
        match self {
            GeneratedMethod::Erk43b => erk43b::Erk43b.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Fehlberg45 => fehlberg45::Fehlberg45.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dverk65 => dverk65::Dverk65.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dopri5 => dopri5::Dopri5.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dprk546s => dprk546s::Dprk546s.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dprk547s => dprk547s::Dprk547s.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dprk658m => dprk658m::Dprk658m.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Fehlberg78b => fehlberg78b::Fehlberg78b.step(problem, t, y, h, stages, y_next, y_hat),
            GeneratedMethod::Dopri8 => dopri8::Dopri8.step(problem, t, y, h, stages, y_next, y_hat),
        }
    }
}
