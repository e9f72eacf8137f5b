mod common;

use rkforge::generated::GeneratedMethod;
use rkforge::stepcontrol::ErkKernel;
use rkforge::tableau::shipped_methods;

#[test]
fn every_shipped_method_is_generated() {
    let names: Vec<String> = shipped_methods().iter().map(|t| t.name().to_string()).collect();
    let generated: Vec<String> = GeneratedMethod::ALL
        .iter()
        .map(|m| m.method_name().to_string())
        .collect();
    assert_eq!(names, generated);
}

#[test]
fn generated_metadata_matches_tableaus() {
    for m in GeneratedMethod::ALL {
        let t = common::shipped(m.method_name());
        assert_eq!(m.stages(), t.stages());
        assert_eq!(m.order(), t.order());
        assert_eq!(m.embedded_order(), t.embedded_order());
        assert_eq!(ErkKernel::<f64>::name(&m), t.name());
    }
}

#[test]
fn generated_steps_match_interpreter() {
    for (i, m) in GeneratedMethod::ALL.into_iter().enumerate() {
        let gap = common::kernel_gap(m, 100, 1000 + i as u64);
        assert!(gap <= 1e-12, "{}: relative gap {gap:e}", m.method_name());
    }
}

#[test]
fn concrete_types_agree_with_enum_dispatch() {
    use rkforge::generated::{dopri5::Dopri5, erk43b::Erk43b};
    use rkforge::problems::Brusselator;
    use rkforge::stepcontrol::fixed_integrate_last;
    let y0 = [1.5, 3.0];
    let a = fixed_integrate_last(&Dopri5, &Brusselator, 0.01, &y0, 0.0, 2.0).unwrap();
    let b = fixed_integrate_last(&GeneratedMethod::Dopri5, &Brusselator, 0.01, &y0, 0.0, 2.0).unwrap();
    assert_eq!(a, b);
    let c = rkforge::generated::erk43b::solve_fixed_last(&Brusselator, 0.01, &y0, 0.0, 2.0).unwrap();
    let d = fixed_integrate_last(&Erk43b, &Brusselator, 0.01, &y0, 0.0, 2.0).unwrap();
    assert_eq!(c, d);
}
