use std::ffi::{c_char, c_void, CStr};
use std::ptr;

use rkforge_ffi::*;

unsafe extern "C" fn decay(_: *mut c_void, _t: f64, y: *const f64, dydt: *mut f64, dim: usize) {
    for i in 0..dim {
        *dydt.add(i) = -*y.add(i);
    }
}

unsafe extern "C" fn scaled(user: *mut c_void, _t: f64, y: *const f64, dydt: *mut f64, _dim: usize) {
    *dydt = *(user as *const f64) * *y;
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    let n = unsafe { rkf_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let text = unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_string();
    assert_eq!(text.len(), n.min(255));
    text
}

#[test]
fn methods_are_listed() {
    assert_eq!(rkf_method_count(), 9);
    let names: Vec<&str> = (0..rkf_method_count())
        .map(|i| unsafe { CStr::from_ptr(rkf_method_name(i)) }.to_str().unwrap())
        .collect();
    assert!(names.contains(&"DOPRI5") && names.contains(&"ERK43b"));
    assert!(rkf_method_name(9).is_null());
}

#[test]
fn adaptive_callback_solution() {
    let y0 = [1.0, 2.0];
    let mut traj = ptr::null_mut();
    let status = unsafe {
        rkf_solve_adaptive(
            c"DOPRI5".as_ptr(),
            Some(decay),
            ptr::null_mut(),
            2,
            y0.as_ptr(),
            0.0,
            1.0,
            1e-10,
            1e-10,
            &mut traj,
        )
    };
    assert_eq!(status, RkfStatus::Ok);
    unsafe {
        let n = rkf_trajectory_len(traj);
        assert_eq!(rkf_trajectory_dimension(traj), 2);
        let times = std::slice::from_raw_parts(rkf_trajectory_times(traj), n);
        let states = std::slice::from_raw_parts(rkf_trajectory_states(traj), 2 * n);
        assert_eq!(times[0], 0.0);
        assert_eq!(times[n - 1], 1.0);
        assert!((states[2 * n - 2] - (-1f64).exp()).abs() < 1e-9);
        assert!((states[2 * n - 1] - 2.0 * (-1f64).exp()).abs() < 1e-9);
        rkf_trajectory_free(traj);
    }
}

#[test]
fn fixed_callback_uses_user_data() {
    let mut rate = 0.5f64;
    let y0 = [1.0];
    let mut traj = ptr::null_mut();
    let status = unsafe {
        rkf_solve_fixed(
            c"ERK43b".as_ptr(),
            Some(scaled),
            (&mut rate as *mut f64).cast(),
            1,
            y0.as_ptr(),
            0.0,
            2.0,
            0.01,
            &mut traj,
        )
    };
    assert_eq!(status, RkfStatus::Ok);
    unsafe {
        assert_eq!(rkf_trajectory_len(traj), 201);
        let end = *rkf_trajectory_states(traj).add(200);
        assert!((end - 1f64.exp()).abs() < 1e-9);
        rkf_trajectory_free(traj);
    }
}

#[test]
fn builtin_problem_closes_its_orbit() {
    let mut traj = ptr::null_mut();
    let status =
        unsafe { rkf_solve_problem(c"DOPRI8".as_ptr(), c"arenstorf:1".as_ptr(), 1e-13, 0.0, &mut traj) };
    assert_eq!(status, RkfStatus::Ok);
    unsafe {
        let n = rkf_trajectory_len(traj);
        let s = std::slice::from_raw_parts(rkf_trajectory_states(traj), 4 * n);
        let gap = (s[4 * n - 2] - s[2]).hypot(s[4 * n - 1] - s[3]);
        assert!(gap <= 1e-9, "{gap}");
        rkf_trajectory_free(traj);
    }
}

#[test]
fn errors_set_status_and_message() {
    let y0 = [1.0];
    let mut traj = ptr::null_mut();
    unsafe {
        let s = rkf_solve_problem(c"RK4".as_ptr(), c"vdp".as_ptr(), 1e-6, 1e-6, &mut traj);
        assert_eq!(s, RkfStatus::UnknownMethod);
        assert!(last_error().contains("RK4"));
        assert!(traj.is_null());
        let s = rkf_solve_problem(c"DOPRI5".as_ptr(), c"lorenz".as_ptr(), 1e-6, 1e-6, &mut traj);
        assert_eq!(s, RkfStatus::UnknownProblem);
        let s = rkf_solve_problem(c"DOPRI5".as_ptr(), c"vdp".as_ptr(), 0.0, 0.0, &mut traj);
        assert_eq!(s, RkfStatus::InvalidArgument);
        let s = rkf_solve_problem(ptr::null(), c"vdp".as_ptr(), 1e-6, 1e-6, &mut traj);
        assert_eq!(s, RkfStatus::NullPointer);
        let s = rkf_solve_problem(c"DOPRI5".as_ptr(), c"vdp".as_ptr(), 1e-6, 1e-6, ptr::null_mut());
        assert_eq!(s, RkfStatus::NullPointer);
        let s = rkf_solve_fixed(
            c"DOPRI5".as_ptr(),
            None,
            ptr::null_mut(),
            1,
            y0.as_ptr(),
            0.0,
            1.0,
            0.1,
            &mut traj,
        );
        assert_eq!(s, RkfStatus::NullPointer);
        let s = rkf_solve_fixed(
            c"DOPRI5".as_ptr(),
            Some(decay),
            ptr::null_mut(),
            1,
            y0.as_ptr(),
            0.0,
            1.0,
            -0.1,
            &mut traj,
        );
        assert_eq!(s, RkfStatus::InvalidArgument);
        let s = rkf_solve_adaptive(
            c"DOPRI5".as_ptr(),
            Some(decay),
            ptr::null_mut(),
            1,
            y0.as_ptr(),
            0.0,
            1.0,
            1e-6,
            0.0,
            &mut traj,
        );
        assert_eq!(s, RkfStatus::Ok);
        assert!(last_error().is_empty());
        rkf_trajectory_free(traj);
        rkf_trajectory_free(ptr::null_mut());
        assert_eq!(rkf_trajectory_len(ptr::null()), 0);
    }
}

#[test]
fn integration_failure_is_reported() {
    unsafe extern "C" fn blow_up(_: *mut c_void, _t: f64, y: *const f64, dydt: *mut f64, _dim: usize) {
        *dydt = *y * *y;
    }
    let y0 = [1.0];
    let mut traj = ptr::null_mut();
    let s = unsafe {
        rkf_solve_adaptive(
            c"DOPRI5".as_ptr(),
            Some(blow_up),
            ptr::null_mut(),
            1,
            y0.as_ptr(),
            0.0,
            2.0,
            1e-8,
            1e-8,
            &mut traj,
        )
    };
    assert_eq!(s, RkfStatus::IntegrationError);
    assert!(traj.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn method_file_validation() {
    let shipped = std::fs::read(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/methods/erk_methods.json"
    ))
    .unwrap();
    let mut bad = usize::MAX;
    let s = unsafe { rkf_validate_methods_json(shipped.as_ptr().cast(), shipped.len(), &mut bad) };
    assert_eq!((s, bad), (RkfStatus::Ok, 0));
    let broken = b"[{";
    let s = unsafe { rkf_validate_methods_json(broken.as_ptr().cast(), broken.len(), &mut bad) };
    assert_eq!(s, RkfStatus::ParseError);
    let invalid = br#"[{"name":"Bad","description":"","stage":2,"order":1,"extrapolation_order":1,
        "a":[["0","0"],["1/3","0"]],"b":["1/2","1/2"],"b_hat":["1","0"],"c":["0","1/2"]}]"#;
    let s = unsafe { rkf_validate_methods_json(invalid.as_ptr().cast(), invalid.len(), &mut bad) };
    assert_eq!((s, bad), (RkfStatus::ValidationError, 1));
    assert!(last_error().contains("row-sum"));
}

#[test]
fn coefficient_literals() {
    let mut buf = [0 as c_char; 32];
    let mut n = 0;
    let s = unsafe { rkf_render_coefficient_literal(2, 3, buf.as_mut_ptr(), buf.len(), &mut n) };
    assert_eq!(s, RkfStatus::Ok);
    assert_eq!(
        unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(),
        "0.66666666666666667"
    );
    assert_eq!(n, 19);
    let s = unsafe { rkf_render_coefficient_literal(-3, 1, buf.as_mut_ptr(), buf.len(), &mut n) };
    assert_eq!(s, RkfStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "-3.0");
    let s = unsafe { rkf_render_coefficient_literal(2, 3, buf.as_mut_ptr(), 8, &mut n) };
    assert_eq!((s, n), (RkfStatus::BufferTooSmall, 19));
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_bytes().len(), 7);
    let s = unsafe { rkf_render_coefficient_literal(1, 0, buf.as_mut_ptr(), buf.len(), &mut n) };
    assert_eq!(s, RkfStatus::InvalidArgument);
}
