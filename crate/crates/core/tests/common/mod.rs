#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rkforge::generated::GeneratedMethod;
use rkforge::stepcontrol::{ErkKernel, FnProblem, GenericErk, OdeProblem, StageBuffer};
use rkforge::tableau::{shipped_methods, ButcherTableau};

pub fn shipped(name: &str) -> ButcherTableau {
    shipped_methods()
        .into_iter()
        .find(|t| t.name() == name)
        .unwrap_or_else(|| panic!("no shipped method {name}"))
}

/// Nonautonomous, nonlinear field with all components coupled.
pub fn coupled_field() -> impl OdeProblem {
    FnProblem::new("coupled", 3, |t: f64, y: &[f64]| {
        vec![
            y[1] * t.cos() - 0.5 * y[0] * y[2],
            -y[0] + 0.1 * y[1] * y[1] + t,
            (y[0] - y[2]).sin() + 0.3 * y[1],
        ]
    })
}

fn run_step<K: ErkKernel<f64>, P: OdeProblem>(
    k: &K,
    p: &P,
    t: f64,
    y: &[f64],
    h: f64,
) -> (Vec<f64>, Vec<f64>) {
    let mut buf = StageBuffer::new(k.stages(), y.len());
    let mut y_next = vec![0.0; y.len()];
    let mut y_hat = vec![0.0; y.len()];
    k.step(p, t, y, h, &mut buf, &mut y_next, &mut y_hat);
    (y_next, y_hat)
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Largest componentwise relative difference between the generated kernel
/// and the interpreter over `trials` random single steps.
pub fn kernel_gap(method: GeneratedMethod, trials: usize, seed: u64) -> f64 {
    let generic = GenericErk::<f64>::new(&shipped(method.method_name())).unwrap();
    let field = coupled_field();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let t = rng.gen_range(-5.0..5.0);
        let h = rng.gen_range(1e-3..0.5);
        let y: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let (g, gh) = run_step(&method, &field, t, &y, h);
        let (r, rh) = run_step(&generic, &field, t, &y, h);
        for i in 0..3 {
            worst = worst
                .max(relative_gap(g[i], r[i]))
                .max(relative_gap(gh[i], rh[i]));
        }
    }
    worst
}
