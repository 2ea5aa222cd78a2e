//! C ABI over the greenbridges solvers: opaque instance/solution handles,
//! integer status codes, and a thread-local last-error message.
//!
//! Every function is null-safe: passing a null handle yields
//! `GBP_STATUS_INVALID_ARGUMENT` (or 0 for plain getters). Handles returned
//! through out-pointers are owned by the caller and must be released with the
//! matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::time::Duration;

use greenbridges::bench::{run_solver, SolverKind};
use greenbridges::error::Error;
use greenbridges::graph::{verify_solution, Instance, Solution};
use greenbridges::io;
use greenbridges::solvers::SolveStatus;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GbpStatus {
    /// Success.
    Ok = 0,
    /// A null pointer, invalid UTF-8, or an argument violating a precondition.
    InvalidArgument = 1,
    /// The file could not be read or written.
    IoError = 2,
    /// The file contents are malformed.
    ParseError = 3,
    /// Some habitat cannot be connected; no solution exists.
    Infeasible = 4,
    /// The requested solver does not apply to the instance.
    Unsupported = 5,
    /// The time limit expired without a feasible incumbent.
    Timeout = 6,
}

/// Opaque problem instance handle.
pub struct GbpInstance(Instance);

/// Opaque solution handle.
pub struct GbpSolution(Solution);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: GbpStatus, message: &str) -> GbpStatus {
    set_error(message);
    status
}

fn fail_with(err: &Error) -> GbpStatus {
    let status = match err {
        Error::Io(_) => GbpStatus::IoError,
        Error::Parse { .. } => GbpStatus::ParseError,
        _ => GbpStatus::InvalidArgument,
    };
    fail(status, &err.to_string())
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gbp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

/// Parses an instance file. On success writes a new handle to `out`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_parse(
    path: *const c_char,
    out: *mut *mut GbpInstance,
) -> GbpStatus {
    let (Some(path), false) = (cstr(path), out.is_null()) else {
        return fail(GbpStatus::InvalidArgument, "null or non-UTF-8 argument");
    };
    match io::parse_instance(path) {
        Ok((inst, _)) => {
            *out = Box::into_raw(Box::new(GbpInstance(inst)));
            GbpStatus::Ok
        }
        Err(err) => fail_with(&err),
    }
}

/// Parses an instance from an in-memory string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_from_string(
    text: *const c_char,
    out: *mut *mut GbpInstance,
) -> GbpStatus {
    let (Some(text), false) = (cstr(text), out.is_null()) else {
        return fail(GbpStatus::InvalidArgument, "null or non-UTF-8 argument");
    };
    match io::parse_instance_str(text) {
        Ok((inst, _)) => {
            *out = Box::into_raw(Box::new(GbpInstance(inst)));
            GbpStatus::Ok
        }
        Err(err) => fail_with(&err),
    }
}

/// Releases an instance handle. Null is ignored.
///
/// # Safety
/// `inst` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_free(inst: *mut GbpInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_vertex_count(inst: *const GbpInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.graph.vertex_count())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_edge_count(inst: *const GbpInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.graph.edge_count())
}

/// Number of habitats; 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gbp_instance_habitat_count(inst: *const GbpInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.habitats.len())
}

/// Solves an instance. `solver` is one of "mwm", "mwhm", "generic", "apx",
/// "brute", "auto"; `time_limit_ms` of 0 means no limit. On success writes a
/// new solution handle to `out`.
///
/// # Safety
/// `inst` must be a live handle, `solver` a NUL-terminated string, and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbp_solve(
    inst: *const GbpInstance,
    solver: *const c_char,
    time_limit_ms: u64,
    out: *mut *mut GbpSolution,
) -> GbpStatus {
    let (Some(inst), Some(solver), false) = (inst.as_ref(), cstr(solver), out.is_null()) else {
        return fail(GbpStatus::InvalidArgument, "null or non-UTF-8 argument");
    };
    let Some(kind) = SolverKind::parse(solver) else {
        return fail(
            GbpStatus::InvalidArgument,
            &format!("unknown solver {solver:?}"),
        );
    };
    let limit = (time_limit_ms > 0).then(|| Duration::from_millis(time_limit_ms));
    let res = run_solver(kind, &inst.0, limit);
    match (res.solution, res.status) {
        (Some(sol), _) => {
            *out = Box::into_raw(Box::new(GbpSolution(sol)));
            GbpStatus::Ok
        }
        (None, SolveStatus::InfeasibleInput) => {
            fail(GbpStatus::Infeasible, "some habitat cannot be connected")
        }
        (None, SolveStatus::UnsupportedHabitats) => fail(
            GbpStatus::Unsupported,
            "solver does not apply to this instance",
        ),
        (None, _) => fail(
            GbpStatus::Timeout,
            "time limit expired without an incumbent",
        ),
    }
}

/// Releases a solution handle. Null is ignored.
///
/// # Safety
/// `sol` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn gbp_solution_free(sol: *mut GbpSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// Total cost of a solution; 0 for a null handle.
///
/// # Safety
/// `sol` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gbp_solution_cost(sol: *const GbpSolution) -> u64 {
    sol.as_ref().map_or(0, |s| s.0.total_cost)
}

/// Number of edges in a solution; 0 for a null handle.
///
/// # Safety
/// `sol` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gbp_solution_edge_count(sol: *const GbpSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.0.edge_indices.len())
}

/// Copies the solution's edge indices (ascending) into `buffer`, up to
/// `capacity` entries; returns the number written.
///
/// # Safety
/// `sol` must be null or a live handle; `buffer` must point to at least
/// `capacity` writable entries.
#[no_mangle]
pub unsafe extern "C" fn gbp_solution_edges(
    sol: *const GbpSolution,
    buffer: *mut usize,
    capacity: usize,
) -> usize {
    let Some(sol) = sol.as_ref() else { return 0 };
    if buffer.is_null() {
        return 0;
    }
    let mut written = 0;
    for &e in sol.0.edge_indices.iter().take(capacity) {
        *buffer.add(written) = e;
        written += 1;
    }
    written
}

/// Checks a solution against an instance; writes 1 to `out_feasible` when
/// every habitat is connected (and the budget, if any, respected), else 0.
///
/// # Safety
/// `inst` and `sol` must be live handles and `out_feasible` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbp_verify(
    inst: *const GbpInstance,
    sol: *const GbpSolution,
    out_feasible: *mut i32,
) -> GbpStatus {
    let (Some(inst), Some(sol), false) = (inst.as_ref(), sol.as_ref(), out_feasible.is_null())
    else {
        return fail(GbpStatus::InvalidArgument, "null argument");
    };
    match verify_solution(&inst.0, &sol.0) {
        Ok(verdict) => {
            *out_feasible = i32::from(verdict.feasible && verdict.within_budget);
            GbpStatus::Ok
        }
        Err(err) => fail_with(&err),
    }
}
