use std::ffi::{CStr, CString};
use std::ptr;

use stableshell_ffi::*;

unsafe fn text(p: *const SsPolynomial) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(ss_poly_to_string(p, &mut s), SsStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ss_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let m = ss_last_error_message();
    assert!(!m.is_null());
    CStr::from_ptr(m).to_string_lossy().into_owned()
}

#[test]
fn eulerian_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ss_colored_eulerian(2, 1, 2, &mut p), SsStatus::Ok);
        assert_eq!(text(p), "6x+2x^2");
        let mut deg = 0;
        assert_eq!(ss_poly_degree(p, &mut deg), SsStatus::Ok);
        assert_eq!(deg, 2);
        let mut c = 0;
        assert_eq!(ss_poly_coeff(p, 1, &mut c), SsStatus::Ok);
        assert_eq!(c, 6);
        let mut rr = false;
        assert_eq!(ss_poly_is_real_rooted(p, &mut rr), SsStatus::Ok);
        assert!(rr);
        ss_poly_free(p);
    }
}

#[test]
fn interlacing_of_handles() {
    unsafe {
        let (mut p, mut q) = (ptr::null_mut(), ptr::null_mut());
        // roots -1 and -2, -1/2
        assert_eq!(ss_poly_new([1i64, 1].as_ptr(), 2, &mut p), SsStatus::Ok);
        assert_eq!(ss_poly_new([1i64, 3, 2].as_ptr(), 3, &mut q), SsStatus::Ok);
        let mut yes = false;
        assert_eq!(ss_poly_interlaces(p, q, &mut yes), SsStatus::Ok);
        assert!(yes);
        let mut zero = ptr::null_mut();
        assert_eq!(ss_poly_new(ptr::null(), 0, &mut zero), SsStatus::Ok);
        let mut deg = 0;
        ss_poly_degree(zero, &mut deg);
        assert_eq!(deg, -1);
        ss_poly_free(p);
        ss_poly_free(q);
        ss_poly_free(zero);
    }
}

#[test]
fn scenarios() {
    unsafe {
        let name = CString::new("cube").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(ss_scenario_construct(name.as_ptr(), [2usize].as_ptr(), 1, &mut s), SsStatus::Ok);
        let mut n = 0;
        ss_scenario_cell_count(s, &mut n);
        assert_eq!(n, 4);
        let (mut sh, mut st) = (false, false);
        assert_eq!(ss_scenario_check(s, &mut sh, &mut st), SsStatus::Ok);
        assert!(sh && st);
        let mut h = ptr::null_mut();
        assert_eq!(ss_scenario_subdivided_h(s, SsSubdivision::Barycentric, 0, &mut h), SsStatus::Ok);
        assert_eq!(text(h), "1+6x+x^2");
        ss_poly_free(h);
        ss_scenario_free(s);

        let pile = CString::new("pile-nonstable").unwrap();
        assert_eq!(ss_scenario_construct(pile.as_ptr(), ptr::null(), 0, &mut s), SsStatus::Ok);
        ss_scenario_check(s, &mut sh, &mut st);
        assert!(sh && !st);
        ss_scenario_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ss_colored_eulerian(0, 0, 2, &mut p), SsStatus::OutOfRange);
        assert!(p.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(ss_colored_eulerian(1, 0, 1, ptr::null_mut()), SsStatus::NullArgument);
        assert_eq!(last_error(), "out is null");

        let bad = CString::new("{not json").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(ss_scenario_from_json(bad.as_ptr(), &mut s), SsStatus::Parse);
        let name = CString::new("no-such-thing").unwrap();
        assert_ne!(ss_scenario_construct(name.as_ptr(), ptr::null(), 0, &mut s), SsStatus::Ok);

        let mut big = ptr::null_mut();
        ss_colored_eulerian(20, 0, 3, &mut big);
        let mut c = 0;
        assert_eq!(ss_poly_coeff(big, 10, &mut c), SsStatus::OutOfRange);
        ss_poly_free(big);

        let mut ok = ptr::null_mut();
        ss_colored_eulerian(1, 0, 1, &mut ok);
        assert!(ss_last_error_message().is_null());
        ss_poly_free(ok);
    }
}

#[test]
fn verify_suite_by_id() {
    unsafe {
        let id = CString::new("eulerian-3way").unwrap();
        let mut passed = false;
        assert_eq!(ss_verify_suite(id.as_ptr(), 2024, &mut passed), SsStatus::Ok);
        assert!(passed);
        let bogus = CString::new("nope").unwrap();
        assert_ne!(ss_verify_suite(bogus.as_ptr(), 2024, &mut passed), SsStatus::Ok);
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/stableshell.h")).unwrap();
    for sym in ["ss_poly_new", "ss_scenario_subdivided_h", "ss_verify_suite", "SS_STATUS_OK", "typedef struct SsPolynomial SsPolynomial"] {
        assert!(h.contains(sym), "{sym}");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join("stableshell_header_check.c");
    std::fs::write(
        &src,
        "#include \"stableshell.h\"\nint main(void) { SsPolynomial *p = 0; return ss_poly_new(0, 0, &p) == SS_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = match std::process::Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", dir]).arg(&src).status() {
        Ok(s) => s,
        Err(_) => return,
    };
    assert!(status.success());
}
