//! Exercises the C ABI the way a C caller would: through raw pointers and
//! status codes.

use std::ffi::{CStr, CString};
use std::ptr;

use greenbridges_capi::*;

const TWO_TRIANGLES: &str = "V 4\nE 5\n0 1 1\n0 2 1\n1 2 1\n0 3 1\n1 3 1\nH 2\n3 0 1 2\n3 0 1 3\n";

fn parse(text: &str) -> *mut GbpInstance {
    let c = CString::new(text).unwrap();
    let mut handle = ptr::null_mut();
    let status = unsafe { gbp_instance_from_string(c.as_ptr(), &mut handle) };
    assert_eq!(status, GbpStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn parse_solve_verify_round_trip() {
    let inst = parse(TWO_TRIANGLES);
    unsafe {
        assert_eq!(gbp_instance_vertex_count(inst), 4);
        assert_eq!(gbp_instance_edge_count(inst), 5);
        assert_eq!(gbp_instance_habitat_count(inst), 2);

        let solver = CString::new("auto").unwrap();
        let mut sol = ptr::null_mut();
        assert_eq!(gbp_solve(inst, solver.as_ptr(), 0, &mut sol), GbpStatus::Ok);
        assert_eq!(gbp_solution_cost(sol), 3);
        assert_eq!(gbp_solution_edge_count(sol), 3);

        let mut edges = [usize::MAX; 8];
        let written = gbp_solution_edges(sol, edges.as_mut_ptr(), edges.len());
        assert_eq!(written, 3);
        assert!(edges[..3].windows(2).all(|w| w[0] < w[1]));

        let mut feasible = -1;
        assert_eq!(gbp_verify(inst, sol, &mut feasible), GbpStatus::Ok);
        assert_eq!(feasible, 1);

        gbp_solution_free(sol);
        gbp_instance_free(inst);
    }
}

#[test]
fn null_arguments_are_rejected_with_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            gbp_instance_from_string(ptr::null(), &mut out),
            GbpStatus::InvalidArgument
        );
        let msg = CStr::from_ptr(gbp_last_error_message()).to_str().unwrap();
        assert!(!msg.is_empty());

        assert_eq!(gbp_instance_vertex_count(ptr::null()), 0);
        assert_eq!(gbp_solution_cost(ptr::null()), 0);
        gbp_instance_free(ptr::null_mut());
        gbp_solution_free(ptr::null_mut());
    }
}

#[test]
fn parse_and_solver_errors_map_to_status_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let garbage = CString::new("V x\n").unwrap();
        assert_eq!(
            gbp_instance_from_string(garbage.as_ptr(), &mut out),
            GbpStatus::ParseError
        );
        let msg = CStr::from_ptr(gbp_last_error_message()).to_str().unwrap();
        assert!(msg.contains("line 1"), "unexpected message {msg:?}");

        let path = CString::new("/nonexistent/instance.gbp").unwrap();
        assert_eq!(
            gbp_instance_parse(path.as_ptr(), &mut out),
            GbpStatus::IoError
        );

        // A habitat that cannot be connected.
        let inst = parse("V 4\nE 2\n0 1 1\n2 3 1\nH 1\n2 0 2\n");
        let solver = CString::new("generic").unwrap();
        let mut sol = ptr::null_mut();
        assert_eq!(
            gbp_solve(inst, solver.as_ptr(), 0, &mut sol),
            GbpStatus::Infeasible
        );

        // A solver that does not apply: mwm needs cycle habitats.
        let tree = parse("V 3\nE 2\n0 1 1\n1 2 1\nH 1\n3 0 1 2\n");
        assert_eq!(gbp_solve(tree, solver.as_ptr(), 0, &mut sol), GbpStatus::Ok);
        gbp_solution_free(sol);
        let mwm = CString::new("mwm").unwrap();
        let mut sol2 = ptr::null_mut();
        assert_eq!(
            gbp_solve(tree, mwm.as_ptr(), 0, &mut sol2),
            GbpStatus::Unsupported
        );

        let bogus = CString::new("simplex").unwrap();
        assert_eq!(
            gbp_solve(tree, bogus.as_ptr(), 0, &mut sol2),
            GbpStatus::InvalidArgument
        );

        gbp_instance_free(inst);
        gbp_instance_free(tree);
    }
}

#[test]
fn generated_header_declares_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/greenbridges.h");
    let text = std::fs::read_to_string(&header).expect("cbindgen header present");
    for symbol in [
        "gbp_instance_parse",
        "gbp_instance_from_string",
        "gbp_instance_free",
        "gbp_solve",
        "gbp_solution_free",
        "gbp_solution_edges",
        "gbp_verify",
        "gbp_last_error_message",
        "GbpStatus",
        "GREENBRIDGES_H",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }
}
