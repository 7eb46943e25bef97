//! C ABI over `trirec`.
//!
//! Handles are opaque and owned by the caller, who frees them with the matching
//! `*_free`. Every fallible call returns a [`TrirecStatus`]; on failure a
//! message for the current thread is available from [`trirec_last_error`].
//!
//! Text results use caller buffers: `len` is the capacity in bytes, `needed`
//! (nullable) receives the size including the terminating NUL, and
//! `TRIREC_STATUS_BUFFER_TOO_SMALL` is returned when `len < needed`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use trirec::algebra::{fmt_rational, is_log_concave, BigRational};
use trirec::combinat::{eulerian_polynomial, lambda_inverse, lambda_map, Permutation, SubexceedantFunction};
use trirec::conditions::{check_kurtz, check_main, check_sagan, scan_log_concavity, ScanRegion};
use trirec::recurrence::{
    build_array, catalog_lookup, parse_inline_spec, power_lift, CatalogParams, Cell, RecurrenceError,
    RecurrenceSpec, RowView, TriangularArray, WeightSpec,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrirecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownName = 3,
    Parse = 4,
    NegativeWeight = 5,
    OutOfRange = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrirecCondition {
    Kurtz = 0,
    Sagan = 1,
    Main = 2,
    /// Direct row scan.
    RowScan = 3,
}

/// Weights plus anchor.
pub struct TrirecSpec(RecurrenceSpec);

/// Rows `n0..=max_n` of a built array.
pub struct TrirecArray(TriangularArray);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: TrirecStatus, msg: impl Into<String>) -> TrirecStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
    status
}

fn from_recurrence(e: RecurrenceError) -> TrirecStatus {
    let status = match e {
        RecurrenceError::UnknownName(_) => TrirecStatus::UnknownName,
        RecurrenceError::Parse { .. } => TrirecStatus::Parse,
        RecurrenceError::NegativeWeight { .. } => TrirecStatus::NegativeWeight,
        RecurrenceError::BadRange { .. } | RecurrenceError::RowNotBuilt(_) => TrirecStatus::OutOfRange,
        RecurrenceError::BadParameter(_) => TrirecStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> TrirecStatus) -> TrirecStatus {
    LAST_ERROR.with(|e| e.borrow_mut().clear());
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TrirecStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, TrirecStatus> {
    if p.is_null() {
        return Err(fail(TrirecStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(TrirecStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> TrirecStatus {
    let size = s.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || len < size {
        return fail(TrirecStatus::BufferTooSmall, format!("need {size} bytes"));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    TrirecStatus::Ok
}

unsafe fn put_spec(spec: RecurrenceSpec, out: *mut *mut TrirecSpec) -> TrirecStatus {
    *out = Box::into_raw(Box::new(TrirecSpec(spec)));
    TrirecStatus::Ok
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn trirec_status_message(status: TrirecStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TrirecStatus::Ok => c"ok",
        TrirecStatus::NullPointer => c"null pointer",
        TrirecStatus::InvalidArgument => c"invalid argument",
        TrirecStatus::UnknownName => c"unknown catalog name",
        TrirecStatus::Parse => c"cannot parse weight expression",
        TrirecStatus::NegativeWeight => c"negative weight at a visited cell",
        TrirecStatus::OutOfRange => c"index out of range",
        TrirecStatus::BufferTooSmall => c"buffer too small",
        TrirecStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failed call on this thread (empty after a success).
///
/// # Safety
/// `buf` must be writable for `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn trirec_last_error(buf: *mut c_char, len: usize, needed: *mut usize) -> TrirecStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    let size = msg.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || len < size {
        return TrirecStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), msg.len());
    *buf.add(msg.len()) = 0;
    TrirecStatus::Ok
}

/// Catalog family `name` with exponent `l` and shift `r`; other parameters take their defaults.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_from_catalog(
    name: *const c_char,
    l: u32,
    r: u32,
    out: *mut *mut TrirecSpec,
) -> TrirecStatus {
    guard(|| {
        if out.is_null() {
            return fail(TrirecStatus::NullPointer, "out is null");
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let params = CatalogParams { l, r, ..CatalogParams::default() };
        match catalog_lookup(name, &params) {
            Ok(spec) => put_spec(spec, out),
            Err(e) => from_recurrence(e),
        }
    })
}

/// `c=EXPR;d=EXPR` raised to the power `l`, anchored at `(n0, k0)`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_from_inline(
    src: *const c_char,
    l: u32,
    n0: i64,
    k0: i64,
    out: *mut *mut TrirecSpec,
) -> TrirecStatus {
    guard(|| {
        if out.is_null() {
            return fail(TrirecStatus::NullPointer, "out is null");
        }
        if l == 0 {
            return fail(TrirecStatus::InvalidArgument, "l must be at least 1");
        }
        let src = match read_str(src) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match parse_inline_spec(src) {
            Ok(w) => put_spec(power_lift(&RecurrenceSpec::new(w, Cell::new(n0, k0)), l), out),
            Err(e) => from_recurrence(e),
        }
    })
}

/// `c = (p0 n + p1 k + p2)^l`, `d = (p3 n + p4 k + p5)^l`, anchored at `(n0, k0)`.
///
/// # Safety
/// `params` must point to six integers and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_from_affine(
    params: *const i64,
    l: u32,
    n0: i64,
    k0: i64,
    out: *mut *mut TrirecSpec,
) -> TrirecStatus {
    guard(|| {
        if params.is_null() || out.is_null() {
            return fail(TrirecStatus::NullPointer, "params or out is null");
        }
        if l == 0 {
            return fail(TrirecStatus::InvalidArgument, "l must be at least 1");
        }
        let p: [i64; 6] = std::slice::from_raw_parts(params, 6).try_into().unwrap();
        put_spec(RecurrenceSpec::new(WeightSpec::affine(p, l), Cell::new(n0, k0)), out)
    })
}

/// # Safety
/// `spec` must come from a `trirec_spec_from_*` call and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_free(spec: *mut TrirecSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// # Safety
/// `spec` must be a live handle; `buf` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_description(
    spec: *const TrirecSpec,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TrirecStatus {
    guard(|| match spec.as_ref() {
        None => fail(TrirecStatus::NullPointer, "spec is null"),
        Some(s) => write_str(&s.0.description(), buf, len, needed),
    })
}

/// # Safety
/// `spec` must be a live handle and `n0`, `k0` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn trirec_spec_anchor(spec: *const TrirecSpec, n0: *mut i64, k0: *mut i64) -> TrirecStatus {
    match spec.as_ref() {
        Some(s) if !n0.is_null() && !k0.is_null() => {
            *n0 = s.0.anchor.n;
            *k0 = s.0.anchor.k;
            TrirecStatus::Ok
        }
        _ => fail(TrirecStatus::NullPointer, "null argument"),
    }
}

/// Runs a sufficient-condition checker (or the row scan) up to row `max_n`.
/// `which` is a [`TrirecCondition`] value.
///
/// # Safety
/// `spec` must be a live handle and `holds` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trirec_check(
    spec: *const TrirecSpec,
    which: u32,
    max_n: i64,
    holds: *mut bool,
) -> TrirecStatus {
    guard(|| {
        let Some(s) = spec.as_ref() else {
            return fail(TrirecStatus::NullPointer, "spec is null");
        };
        if holds.is_null() {
            return fail(TrirecStatus::NullPointer, "holds is null");
        }
        let which = match which {
            0 => TrirecCondition::Kurtz,
            1 => TrirecCondition::Sagan,
            2 => TrirecCondition::Main,
            3 => TrirecCondition::RowScan,
            other => return fail(TrirecStatus::InvalidArgument, format!("unknown condition {other}")),
        };
        let rep = match which {
            TrirecCondition::Kurtz => check_kurtz(&s.0, max_n, ScanRegion::Structural),
            TrirecCondition::Sagan => check_sagan(&s.0, max_n, ScanRegion::Structural),
            TrirecCondition::Main => check_main(&s.0, max_n, ScanRegion::Structural),
            TrirecCondition::RowScan => match scan_log_concavity(&s.0, max_n) {
                Ok(r) => r,
                Err(e) => return from_recurrence(e),
            },
        };
        *holds = rep.holds();
        TrirecStatus::Ok
    })
}

/// Builds rows `n0..=max_n`.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_build(
    spec: *const TrirecSpec,
    max_n: i64,
    out: *mut *mut TrirecArray,
) -> TrirecStatus {
    guard(|| {
        let Some(s) = spec.as_ref() else {
            return fail(TrirecStatus::NullPointer, "spec is null");
        };
        if out.is_null() {
            return fail(TrirecStatus::NullPointer, "out is null");
        }
        match build_array(&s.0, max_n) {
            Ok(a) => {
                *out = Box::into_raw(Box::new(TrirecArray(a)));
                TrirecStatus::Ok
            }
            Err(e) => from_recurrence(e),
        }
    })
}

/// # Safety
/// `array` must come from [`trirec_array_build`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_free(array: *mut TrirecArray) {
    if !array.is_null() {
        drop(Box::from_raw(array));
    }
}

/// Last built row, or -1 for a null handle.
///
/// # Safety
/// `array` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_max_n(array: *const TrirecArray) -> i64 {
    array.as_ref().map_or(-1, |a| a.0.max_n())
}

/// `T(n,k)` as a decimal string; zero outside the triangle.
///
/// # Safety
/// `array` must be a live handle; `buf` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_get(
    array: *const TrirecArray,
    n: i64,
    k: i64,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TrirecStatus {
    guard(|| {
        let Some(a) = array.as_ref() else {
            return fail(TrirecStatus::NullPointer, "array is null");
        };
        if n > a.0.max_n() {
            return fail(TrirecStatus::OutOfRange, format!("row {n} has not been built"));
        }
        write_str(&fmt_rational(&a.0.get(n, k)), buf, len, needed)
    })
}

/// Row `n` (structural columns) as comma-separated decimals.
///
/// # Safety
/// `array` must be a live handle; `buf` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_row(
    array: *const TrirecArray,
    n: i64,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TrirecStatus {
    guard(|| {
        let Some(a) = array.as_ref() else {
            return fail(TrirecStatus::NullPointer, "array is null");
        };
        match a.0.row(n, RowView::Padded) {
            Ok(row) => {
                let s: Vec<String> = row.iter().map(fmt_rational).collect();
                write_str(&s.join(","), buf, len, needed)
            }
            Err(e) => from_recurrence(e),
        }
    })
}

/// Whether row `n` is log-concave.
///
/// # Safety
/// `array` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trirec_array_row_log_concave(
    array: *const TrirecArray,
    n: i64,
    out: *mut bool,
) -> TrirecStatus {
    guard(|| {
        let Some(a) = array.as_ref() else {
            return fail(TrirecStatus::NullPointer, "array is null");
        };
        if out.is_null() {
            return fail(TrirecStatus::NullPointer, "out is null");
        }
        match a.0.row(n, RowView::Trimmed) {
            Ok(row) => {
                *out = is_log_concave::<BigRational>(&row);
                TrirecStatus::Ok
            }
            Err(e) => from_recurrence(e),
        }
    })
}

/// Coefficients of the `(l)`-Eulerian polynomial of row `n`, comma-separated.
///
/// # Safety
/// `buf` must be writable for `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn trirec_eulerian_row(
    n: u32,
    l: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TrirecStatus {
    guard(|| {
        if n == 0 || l == 0 {
            return fail(TrirecStatus::InvalidArgument, "need n >= 1 and l >= 1");
        }
        let p = eulerian_polynomial(n as usize, l);
        let s: Vec<String> = (0..n as usize).map(|k| fmt_rational(&p.coeff(k))).collect();
        write_str(&s.join(","), buf, len, needed)
    })
}

/// Maps a subexceedant function to a permutation, or back when `inverse` is set.
/// Words use one-line digits, comma-separated beyond 9.
///
/// # Safety
/// `word` must be a NUL-terminated string; `buf` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn trirec_lambda(
    word: *const c_char,
    inverse: bool,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TrirecStatus {
    guard(|| {
        let word = match read_str(word) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let out = if inverse {
            word.parse::<Permutation>().map(|p| lambda_inverse(&p).to_string())
        } else {
            word.parse::<SubexceedantFunction>().map(|f| lambda_map(&f).to_string())
        };
        match out {
            Ok(s) => write_str(&s, buf, len, needed),
            Err(e) => fail(TrirecStatus::Parse, e.to_string()),
        }
    })
}

/// Library version, NUL-terminated.
#[no_mangle]
pub extern "C" fn trirec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
