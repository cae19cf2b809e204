//! C interface to `stableshell`.
//!
//! Every fallible function returns an [`SsStatus`]; results go through out
//! pointers. On failure the message is available from
//! [`ss_last_error_message`] on the same thread. Handles returned through out
//! pointers are owned by the caller and released with the matching `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stableshell::constructions::{by_name, NamedScenario, ScenarioJson};
use stableshell::eulerian::colored_eulerian;
use stableshell::polyreal::{interlaces, is_real_rooted};
use stableshell::shelling::{is_shelling, is_stable_shelling};
use stableshell::subdivision::{subdivide, Subdivision};
use stableshell::verify::{run_suite, Settings};
use stableshell::{Error, IntPolynomial};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    BudgetExceeded = 4,
    InvalidComplex = 5,
    Parse = 6,
    Unsupported = 7,
    Panic = 8,
}

/// Subdivision selector for [`ss_scenario_subdivided_h`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsSubdivision {
    Trivial = 0,
    Barycentric = 1,
    Edgewise = 2,
}

/// Opaque polynomial with integer coefficients.
pub struct SsPolynomial(IntPolynomial);

/// Opaque cell complex with a shelling order.
pub struct SsScenario(NamedScenario);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SsStatus {
    match e {
        Error::InvalidDimension(_) | Error::InvalidDegree(_) | Error::Genericity(_) => SsStatus::InvalidArgument,
        Error::Range(_) => SsStatus::OutOfRange,
        Error::BudgetExceeded(_) => SsStatus::BudgetExceeded,
        Error::InvalidComplex(_) | Error::InvalidPolytope(_) => SsStatus::InvalidComplex,
        Error::Parse(_) => SsStatus::Parse,
        Error::UndefinedIsolation | Error::UnsupportedInput(_) => SsStatus::Unsupported,
    }
}

/// Runs `f`, recording errors and catching panics.
fn guard(f: impl FnOnce() -> Result<(), (SsStatus, String)>) -> SsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SsStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SsStatus::Panic
        }
    }
}

fn lib<T>(r: stableshell::Result<T>) -> Result<T, (SsStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(name: &str) -> (SsStatus, String) {
    (SsStatus::NullArgument, format!("{name} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, (SsStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SsStatus::InvalidArgument, format!("{name} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, (SsStatus, String)> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, (SsStatus, String)> {
    p.as_mut().ok_or_else(|| null(name))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on this thread.
#[no_mangle]
pub extern "C" fn ss_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn ss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a polynomial from `len` coefficients, constant term first.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_new(coeffs: *const i64, len: usize, out: *mut *mut SsPolynomial) -> SsStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let c: &[i64] = if len == 0 {
            &[]
        } else if coeffs.is_null() {
            return Err(null("coeffs"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        *out = Box::into_raw(Box::new(SsPolynomial(IntPolynomial::from_i64(c))));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_free(p: *mut SsPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`; -1 for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_degree(p: *const SsPolynomial, out: *mut i64) -> SsStatus {
    guard(|| {
        let p = ref_arg(p, "p")?;
        *out_arg(out, "out")? = p.0.degree().map_or(-1, |d| d as i64);
        Ok(())
    })
}

/// Coefficient of `x^k`; `OutOfRange` if it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_coeff(p: *const SsPolynomial, k: usize, out: *mut i64) -> SsStatus {
    guard(|| {
        let p = ref_arg(p, "p")?;
        let out = out_arg(out, "out")?;
        *out = i64::try_from(p.0.coeff(k))
            .map_err(|_| (SsStatus::OutOfRange, format!("coefficient of x^{k} exceeds 64 bits")))?;
        Ok(())
    })
}

/// Renders `p` as text, e.g. `6x+2x^2`. Free with [`ss_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_to_string(p: *const SsPolynomial, out: *mut *mut c_char) -> SsStatus {
    guard(|| {
        let p = ref_arg(p, "p")?;
        let out = out_arg(out, "out")?;
        *out = CString::new(p.0.to_string()).unwrap_or_default().into_raw();
        Ok(())
    })
}

/// Whether all roots of `p` are real. The zero polynomial counts as real-rooted.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_is_real_rooted(p: *const SsPolynomial, out: *mut bool) -> SsStatus {
    guard(|| {
        let p = ref_arg(p, "p")?;
        *out_arg(out, "out")? = is_real_rooted(&p.0);
        Ok(())
    })
}

/// Whether `p` interlaces `q` (`q` has the larger roots).
///
/// # Safety
/// `p` and `q` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_poly_interlaces(p: *const SsPolynomial, q: *const SsPolynomial, out: *mut bool) -> SsStatus {
    guard(|| {
        let p = ref_arg(p, "p")?;
        let q = ref_arg(q, "q")?;
        let out = out_arg(out, "out")?;
        *out = lib(interlaces(&p.0, &q.0))?;
        Ok(())
    })
}

/// The colored Eulerian polynomial `A^(r)_(d,l)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_colored_eulerian(d: usize, l: usize, r: usize, out: *mut *mut SsPolynomial) -> SsStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let p = lib(colored_eulerian(d, l, r))?;
        *out = Box::into_raw(Box::new(SsPolynomial(p)));
        Ok(())
    })
}

/// Builds a named construction, e.g. `"pile"` with parameters `[2, 1]`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `params` must point to `len`
/// values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_construct(
    name: *const c_char,
    params: *const usize,
    len: usize,
    out: *mut *mut SsScenario,
) -> SsStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out, "out")?;
        let params: &[usize] = if len == 0 {
            &[]
        } else if params.is_null() {
            return Err(null("params"));
        } else {
            std::slice::from_raw_parts(params, len)
        };
        let s = lib(by_name(name, params))?;
        *out = Box::into_raw(Box::new(SsScenario(s)));
        Ok(())
    })
}

/// Parses a scenario from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_from_json(json: *const c_char, out: *mut *mut SsScenario) -> SsStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let sj: ScenarioJson = serde_json::from_str(json).map_err(|e| (SsStatus::Parse, e.to_string()))?;
        let s = lib(sj.to_scenario())?;
        *out = Box::into_raw(Box::new(SsScenario(s)));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_free(s: *mut SsScenario) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of maximal cells.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_cell_count(s: *const SsScenario, out: *mut usize) -> SsStatus {
    guard(|| {
        let s = ref_arg(s, "s")?;
        *out_arg(out, "out")? = s.0.complex.len();
        Ok(())
    })
}

/// Whether the scenario's order is a shelling and whether it is stable.
///
/// # Safety
/// `s` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_check(s: *const SsScenario, is_shelling_out: *mut bool, is_stable_out: *mut bool) -> SsStatus {
    guard(|| {
        let s = ref_arg(s, "s")?;
        let sh = out_arg(is_shelling_out, "is_shelling_out")?;
        let st = out_arg(is_stable_out, "is_stable_out")?;
        *sh = lib(is_shelling(&s.0.complex, &s.0.order))?.ok;
        *st = lib(is_stable_shelling(&s.0.complex, &s.0.order))?.ok;
        Ok(())
    })
}

/// h-polynomial of the subdivided complex. `r` is used only for `Edgewise`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_scenario_subdivided_h(
    s: *const SsScenario,
    kind: SsSubdivision,
    r: usize,
    out: *mut *mut SsPolynomial,
) -> SsStatus {
    guard(|| {
        let s = ref_arg(s, "s")?;
        let out = out_arg(out, "out")?;
        let sub = match kind {
            SsSubdivision::Trivial => Subdivision::Trivial,
            SsSubdivision::Barycentric => Subdivision::Barycentric,
            SsSubdivision::Edgewise => Subdivision::Edgewise(r),
        };
        let h = lib(subdivide(&s.0.complex, sub))?.complex.h_polynomial();
        *out = Box::into_raw(Box::new(SsPolynomial(h)));
        Ok(())
    })
}

/// Runs a verification suite by id and reports whether all its checks passed.
///
/// # Safety
/// `id` must be a NUL-terminated string; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_verify_suite(id: *const c_char, seed: u64, passed: *mut bool) -> SsStatus {
    guard(|| {
        let id = str_arg(id, "id")?;
        let passed = out_arg(passed, "passed")?;
        let settings = Settings { seed, ..Settings::default() };
        *passed = lib(run_suite(id, settings))?.passed;
        Ok(())
    })
}
