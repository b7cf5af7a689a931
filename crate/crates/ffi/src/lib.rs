//! C ABI over `affcat`: opaque handles for affine permutations, Hecke elements and verification
//! reports, integer status codes, and a thread-local message for the last error.
//!
//! Every handle returned through an out-pointer must be released with its `_free` function, and
//! every string with [`affcat_string_free`]. Functions never unwind across the boundary: a panic is
//! reported as [`AffcatStatus::Panic`].

use affcat::hecke::{kl_basis, parse_hecke, HeckeElement, KlTable};
use affcat::report::Outcome;
use affcat::suites::{run_suite, SuiteParams};
use affcat::weyl::{parse_word, AffinePermutation};
use affcat::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffcatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParams = 4,
    RankMismatch = 5,
    IndexOutOfRange = 6,
    BudgetExceeded = 7,
    Mismatch = 8,
    Unknown = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// An element of the extended affine Weyl group.
pub struct AffcatPerm(AffinePermutation);

/// An element of the extended affine Hecke algebra.
pub struct AffcatHecke(HeckeElement);

/// The outcome lines of a verification suite.
pub struct AffcatReport(Vec<Outcome>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AffcatStatus {
    match e {
        Error::IndexOutOfRange { .. } => AffcatStatus::IndexOutOfRange,
        Error::RankMismatch(..) => AffcatStatus::RankMismatch,
        Error::BudgetExceeded { .. } => AffcatStatus::BudgetExceeded,
        Error::Parse { .. } => AffcatStatus::Parse,
        Error::Mismatch(_) => AffcatStatus::Mismatch,
        Error::InvalidParams(_) => AffcatStatus::InvalidParams,
        Error::Unknown { .. } => AffcatStatus::Unknown,
    }
}

struct Fail(AffcatStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AffcatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AffcatStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            AffcatStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(AffcatStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(AffcatStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(AffcatStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AffcatStatus::NullPointer, "null out-pointer".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer stays valid until the
/// next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn affcat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer returned by an `affcat_*_to_string` function, freed only once.
#[no_mangle]
pub unsafe extern "C" fn affcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word such as `rho s1 t2^-1` at rank `r`.
///
/// # Safety
/// `word` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_from_word(r: usize, word: *const c_char, out: *mut *mut AffcatPerm) -> AffcatStatus {
    guard(|| {
        let w = parse_word(r, text(word)?)?;
        put(out, AffcatPerm(AffinePermutation::from_word(r, &w)?))
    })
}

/// Composition `a b` (apply `b` first).
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_compose(a: *const AffcatPerm, b: *const AffcatPerm, out: *mut *mut AffcatPerm) -> AffcatStatus {
    guard(|| {
        let c = handle(a)?.0.compose(&handle(b)?.0)?;
        put(out, AffcatPerm(c))
    })
}

/// Coxeter length; 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_length(p: *const AffcatPerm) -> usize {
    p.as_ref().map_or(0, |p| p.0.length())
}

/// The power `k` of `rho` in `rho^k w'`; 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_rho_power(p: *const AffcatPerm) -> i64 {
    p.as_ref().map_or(0, |p| p.0.rho_power())
}

/// Copies the window `[f(1), ..., f(r)]` into `buf` of capacity `cap`; `len` receives `r`.
///
/// # Safety
/// `p` must be a live handle, `buf` valid for `cap` writes and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_window(p: *const AffcatPerm, buf: *mut i64, cap: usize, len: *mut usize) -> AffcatStatus {
    guard(|| {
        let w = handle(p)?.0.window();
        if len.is_null() {
            return Err(Fail(AffcatStatus::NullPointer, "null length pointer".into()));
        }
        *len = w.len();
        if cap < w.len() || buf.is_null() {
            return Err(Fail(AffcatStatus::BufferTooSmall, format!("window needs {} entries", w.len())));
        }
        ptr::copy_nonoverlapping(w.as_ptr(), buf, w.len());
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn affcat_perm_free(p: *mut AffcatPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses an element such as `T[s1 rho] + q^2*T[e]` or `b[1]*C[s2 s1]` at rank `r`.
///
/// # Safety
/// `s` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_parse(r: usize, s: *const c_char, out: *mut *mut AffcatHecke) -> AffcatStatus {
    guard(|| {
        let h = parse_hecke(r, text(s)?, &mut KlTable::new())?;
        put(out, AffcatHecke(h))
    })
}

/// Product `a b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_mul(a: *const AffcatHecke, b: *const AffcatHecke, out: *mut *mut AffcatHecke) -> AffcatStatus {
    guard(|| {
        let c = handle(a)?.0.mul(&handle(b)?.0)?;
        put(out, AffcatHecke(c))
    })
}

/// Bar involution.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_bar(a: *const AffcatHecke, out: *mut *mut AffcatHecke) -> AffcatStatus {
    guard(|| {
        let c = handle(a)?.0.bar();
        put(out, AffcatHecke(c))
    })
}

/// The KL element `T_rho^k C'_{w'}` of `w = rho^k w'`, for `l(w) <= budget`.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_kl(w: *const AffcatPerm, budget: usize, out: *mut *mut AffcatHecke) -> AffcatStatus {
    guard(|| {
        let c = kl_basis(&handle(w)?.0, budget, &mut KlTable::new())?;
        put(out, AffcatHecke(c))
    })
}

/// Writes whether `a == b` to `out`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_equal(a: *const AffcatHecke, b: *const AffcatHecke, out: *mut bool) -> AffcatStatus {
    guard(|| {
        let eq = handle(a)?.0 == handle(b)?.0;
        if out.is_null() {
            return Err(Fail(AffcatStatus::NullPointer, "null out-pointer".into()));
        }
        *out = eq;
        Ok(())
    })
}

/// The element in the input syntax; free with [`affcat_string_free`]. Null for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_to_string(a: *const AffcatHecke) -> *mut c_char {
    a.as_ref().map_or(ptr::null_mut(), |h| owned_string(h.0.to_string()))
}

/// # Safety
/// `p` must be null or a handle from this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn affcat_hecke_free(p: *mut AffcatHecke) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs a verification suite (`weyl`, `hecke`, `schur`, `soergel`, `rouquier`, `singular`, `all`).
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_verify(suite: *const c_char, r: usize, n: usize, out: *mut *mut AffcatReport) -> AffcatStatus {
    guard(|| {
        let p = SuiteParams { r, n, ..SuiteParams::default() };
        put(out, AffcatReport(run_suite(text(suite)?, &p)?))
    })
}

/// Number of cases; 0 for a null handle.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_report_len(rep: *const AffcatReport) -> usize {
    rep.as_ref().map_or(0, |r| r.0.len())
}

/// Number of failing cases; 0 for a null handle.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_report_failures(rep: *const AffcatReport) -> usize {
    rep.as_ref().map_or(0, |r| r.0.iter().filter(|o| !o.pass).count())
}

/// Line `i` as `CASE-ID PASS|FAIL [witness]`; null if out of range. Free with [`affcat_string_free`].
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn affcat_report_line(rep: *const AffcatReport, i: usize) -> *mut c_char {
    match rep.as_ref().and_then(|r| r.0.get(i)) {
        Some(o) => owned_string(o.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `p` must be null or a handle from this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn affcat_report_free(p: *mut AffcatReport) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes whether the shifted elementary identity holds for `(n, k, s)`, `s = +-1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn affcat_shifted_elementary(n: usize, k: usize, s: i64, out: *mut bool) -> AffcatStatus {
    guard(|| {
        let ok = affcat::singular::shifted_elementary_identity(n, k, s)?;
        if out.is_null() {
            return Err(Fail(AffcatStatus::NullPointer, "null out-pointer".into()));
        }
        *out = ok;
        Ok(())
    })
}
