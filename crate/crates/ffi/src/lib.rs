//! C interface to the rkforge solvers.
//!
//! Every function returns an [`RkfStatus`]; on failure the message is kept
//! per thread and read with [`rkf_last_error_message`]. Trajectories are
//! opaque handles released with [`rkf_trajectory_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_void, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use rkforge::generated::GeneratedMethod;
use rkforge::problems::Problem;
use rkforge::stepcontrol::{
    adaptive_integrate, fixed_integrate, IntegrationError, OdeProblem, Options, Tolerances, Trajectory,
};
use rkforge::tableau::{parse_method_file, render_coefficient_literal, validate_tableau, Rational};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownMethod = 3,
    UnknownProblem = 4,
    ParseError = 5,
    ValidationError = 6,
    IntegrationError = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Right-hand side callback: writes `f(t, y)` into `dydt`, both of length `dim`.
pub type RkfRhs =
    Option<unsafe extern "C" fn(user_data: *mut c_void, t: f64, y: *const f64, dydt: *mut f64, dim: usize)>;

/// Times and row-major states of an integration.
pub struct RkfTrajectory {
    inner: Trajectory<f64>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
}

fn fail(status: RkfStatus, message: impl Into<String>) -> RkfStatus {
    set_error(message);
    status
}

fn guard<F: FnOnce() -> RkfStatus>(f: F) -> RkfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == RkfStatus::Ok {
                set_error("");
            }
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            fail(RkfStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, RkfStatus> {
    if p.is_null() {
        return Err(fail(RkfStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RkfStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn method(name: &str) -> Result<GeneratedMethod, RkfStatus> {
    GeneratedMethod::by_name(name)
        .ok_or_else(|| fail(RkfStatus::UnknownMethod, format!("unknown method `{name}`")))
}

fn integration_status(e: IntegrationError) -> RkfStatus {
    match e {
        IntegrationError::InvalidInput(m) => fail(RkfStatus::InvalidArgument, m),
        e => fail(RkfStatus::IntegrationError, e.to_string()),
    }
}

fn store(out: *mut *mut RkfTrajectory, traj: Trajectory<f64>) -> RkfStatus {
    // SAFETY: callers check `out` for null before integrating.
    unsafe { *out = Box::into_raw(Box::new(RkfTrajectory { inner: traj })) };
    RkfStatus::Ok
}

struct Callback {
    f: unsafe extern "C" fn(*mut c_void, f64, *const f64, *mut f64, usize),
    user_data: *mut c_void,
    dim: usize,
}

impl OdeProblem for Callback {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn rhs(&self, t: f64, y: &[f64], dydt: &mut [f64]) {
        // SAFETY: the caller guarantees the callback accepts `dim`-length buffers.
        unsafe { (self.f)(self.user_data, t, y.as_ptr(), dydt.as_mut_ptr(), self.dim) }
    }

    fn name(&self) -> &str {
        "callback"
    }
}

unsafe fn callback_problem(
    rhs: RkfRhs,
    user_data: *mut c_void,
    dim: usize,
    y0: *const f64,
    out: *mut *mut RkfTrajectory,
) -> Result<(Callback, Vec<f64>), RkfStatus> {
    if out.is_null() {
        return Err(fail(RkfStatus::NullPointer, "out is null"));
    }
    *out = ptr::null_mut();
    let f = rhs.ok_or_else(|| fail(RkfStatus::NullPointer, "rhs is null"))?;
    if dim == 0 {
        return Err(fail(RkfStatus::InvalidArgument, "dimension must be positive"));
    }
    if y0.is_null() {
        return Err(fail(RkfStatus::NullPointer, "y0 is null"));
    }
    let y0 = std::slice::from_raw_parts(y0, dim).to_vec();
    Ok((Callback { f, user_data, dim }, y0))
}

fn method_names() -> &'static [CString] {
    static NAMES: OnceLock<Vec<CString>> = OnceLock::new();
    NAMES.get_or_init(|| {
        GeneratedMethod::ALL
            .iter()
            .map(|m| CString::new(m.method_name()).expect("method names have no NUL"))
            .collect()
    })
}

/// Number of generated methods.
#[no_mangle]
pub extern "C" fn rkf_method_count() -> usize {
    GeneratedMethod::ALL.len()
}

/// Name of method `index`, or null when out of range. The string is static.
#[no_mangle]
pub extern "C" fn rkf_method_name(index: usize) -> *const c_char {
    method_names().get(index).map_or(ptr::null(), |s| s.as_ptr())
}

/// Adaptive integration of a user right-hand side from `t0` to `t1`.
///
/// # Safety
/// `method_name` must be a NUL-terminated string, `y0` must point to `dim`
/// doubles and `out` must be writable. `rhs` must not unwind.
#[no_mangle]
pub unsafe extern "C" fn rkf_solve_adaptive(
    method_name: *const c_char,
    rhs: RkfRhs,
    user_data: *mut c_void,
    dim: usize,
    y0: *const f64,
    t0: f64,
    t1: f64,
    atol: f64,
    rtol: f64,
    out: *mut *mut RkfTrajectory,
) -> RkfStatus {
    guard(|| {
        let run = || -> Result<RkfStatus, RkfStatus> {
            let (problem, y0) = callback_problem(rhs, user_data, dim, y0, out)?;
            let kernel = method(c_str(method_name, "method")?)?;
            let tol = Tolerances::new(atol, rtol).map_err(integration_status)?;
            let traj = adaptive_integrate(&kernel, &problem, &tol, &y0, t0, t1, &Options::default())
                .map_err(integration_status)?;
            Ok(store(out, traj))
        };
        run().unwrap_or_else(|s| s)
    })
}

/// Fixed-step integration of a user right-hand side with step `h`.
///
/// # Safety
/// As for [`rkf_solve_adaptive`].
#[no_mangle]
pub unsafe extern "C" fn rkf_solve_fixed(
    method_name: *const c_char,
    rhs: RkfRhs,
    user_data: *mut c_void,
    dim: usize,
    y0: *const f64,
    t0: f64,
    t1: f64,
    h: f64,
    out: *mut *mut RkfTrajectory,
) -> RkfStatus {
    guard(|| {
        let run = || -> Result<RkfStatus, RkfStatus> {
            let (problem, y0) = callback_problem(rhs, user_data, dim, y0, out)?;
            let kernel = method(c_str(method_name, "method")?)?;
            let traj = fixed_integrate(&kernel, &problem, h, &y0, t0, t1).map_err(integration_status)?;
            Ok(store(out, traj))
        };
        run().unwrap_or_else(|s| s)
    })
}

/// Adaptive integration of a built-in problem (`vdp`, `rigid-body`,
/// `brusselator`, `arenstorf:1..3`) over its default interval.
///
/// # Safety
/// `method_name` and `problem` must be NUL-terminated strings and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn rkf_solve_problem(
    method_name: *const c_char,
    problem: *const c_char,
    atol: f64,
    rtol: f64,
    out: *mut *mut RkfTrajectory,
) -> RkfStatus {
    guard(|| {
        let run = || -> Result<RkfStatus, RkfStatus> {
            if out.is_null() {
                return Err(fail(RkfStatus::NullPointer, "out is null"));
            }
            *out = ptr::null_mut();
            let kernel = method(c_str(method_name, "method")?)?;
            let problem: Problem = c_str(problem, "problem")?
                .parse()
                .map_err(|e| fail(RkfStatus::UnknownProblem, format!("{e}")))?;
            let tol = Tolerances::new(atol, rtol).map_err(integration_status)?;
            let (t0, t1) = problem.interval();
            let traj = adaptive_integrate(
                &kernel,
                &problem,
                &tol,
                &problem.initial_state(),
                t0,
                t1,
                &Options::default(),
            )
            .map_err(integration_status)?;
            Ok(store(out, traj))
        };
        run().unwrap_or_else(|s| s)
    })
}

/// Number of stored points; 0 for a null handle.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rkf_trajectory_len(traj: *const RkfTrajectory) -> usize {
    traj.as_ref().map_or(0, |t| t.inner.len())
}

/// State dimension; 0 for a null handle.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rkf_trajectory_dimension(traj: *const RkfTrajectory) -> usize {
    traj.as_ref().map_or(0, |t| t.inner.dimension())
}

/// `len` times, valid until the handle is freed.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rkf_trajectory_times(traj: *const RkfTrajectory) -> *const f64 {
    traj.as_ref().map_or(ptr::null(), |t| t.inner.times().as_ptr())
}

/// `len * dimension` states in row-major order, valid until the handle is freed.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rkf_trajectory_states(traj: *const RkfTrajectory) -> *const f64 {
    traj.as_ref().map_or(ptr::null(), |t| t.inner.states().as_ptr())
}

/// Releases a trajectory. Null is ignored.
///
/// # Safety
/// `traj` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rkf_trajectory_free(traj: *mut RkfTrajectory) {
    if !traj.is_null() {
        drop(Box::from_raw(traj));
    }
}

unsafe fn copy_out(text: &str, buf: *mut c_char, cap: usize) -> usize {
    if !buf.is_null() && cap > 0 {
        let n = text.len().min(cap - 1);
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, n);
        *buf.add(n) = 0;
    }
    text.len()
}

/// Copies the calling thread's last error message into `buf`, truncated
/// and NUL-terminated, and returns its full length without the NUL.
/// Pass a null `buf` to query the length.
///
/// # Safety
/// `buf` must be null or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rkf_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| copy_out(&e.borrow(), buf, cap))
}

/// Parses and validates a method file held in memory. `invalid_count`,
/// when not null, receives the number of tableaus with violations.
///
/// # Safety
/// `json` must point to `len` readable bytes.
#[no_mangle]
pub unsafe extern "C" fn rkf_validate_methods_json(
    json: *const c_char,
    len: usize,
    invalid_count: *mut usize,
) -> RkfStatus {
    guard(|| {
        if json.is_null() {
            return fail(RkfStatus::NullPointer, "json is null");
        }
        let bytes = std::slice::from_raw_parts(json.cast::<u8>(), len);
        let methods = match parse_method_file(bytes) {
            Ok(m) => m,
            Err(e) => return fail(RkfStatus::ParseError, e.to_string()),
        };
        let bad: Vec<String> = methods
            .iter()
            .map(validate_tableau)
            .filter(|r| !r.is_ok())
            .map(|r| r.to_string())
            .collect();
        if !invalid_count.is_null() {
            *invalid_count = bad.len();
        }
        if bad.is_empty() {
            RkfStatus::Ok
        } else {
            fail(RkfStatus::ValidationError, bad.join("\n"))
        }
    })
}

/// Writes the 17-significant-digit literal of `numer/denom` into `buf`.
/// `written`, when not null, receives the literal's length without the NUL;
/// a buffer shorter than that plus one gives `BufferTooSmall`.
///
/// # Safety
/// `buf` must be null or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rkf_render_coefficient_literal(
    numer: i64,
    denom: i64,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> RkfStatus {
    guard(|| {
        if denom == 0 {
            return fail(RkfStatus::InvalidArgument, "denominator is zero");
        }
        let text = render_coefficient_literal(&Rational::ratio(numer, denom));
        if !written.is_null() {
            *written = text.len();
        }
        if buf.is_null() {
            return fail(RkfStatus::NullPointer, "buf is null");
        }
        if cap <= text.len() {
            copy_out(&text, buf, cap);
            return fail(
                RkfStatus::BufferTooSmall,
                format!("literal needs {} bytes", text.len() + 1),
            );
        }
        copy_out(&text, buf, cap);
        RkfStatus::Ok
    })
}
