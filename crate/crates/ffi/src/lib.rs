//! C ABI over the `twistrim` library.
//!
//! Knots are opaque `TrKnot` handles created by [`twistrim_knot_parse`] and
//! released with [`twistrim_knot_free`]. Every fallible function returns a
//! [`TrStatus`]; on failure a message is available from
//! [`twistrim_last_error_message`] until the next call on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`twistrim_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twistrim::{
    alexander_polynomial, branched_cover_order, classify, knot_group, parse_knot, CoverOrder,
    Error, KnotError, KnotExpr, SurgeryParams,
};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The knot expression did not parse or describe a knot.
    Parse = 3,
    /// Parameters such as `d` or `m` were rejected.
    InvalidArgument = 4,
    /// The computation failed for a reason other than bad input.
    Computation = 5,
    /// The result does not fit in the requested output type.
    Overflow = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// Opaque knot handle.
pub struct TrKnot {
    expr: KnotExpr,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    let c = CString::new(text).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> TrStatus {
    match e {
        Error::Knot(_) => TrStatus::Parse,
        Error::BadDegree(_) | Error::InvalidParams(_) => TrStatus::InvalidArgument,
        Error::NotAKnotGroup(_) | Error::InvalidPresentation(_) => TrStatus::Computation,
    }
}

/// Runs `f` with panics and errors converted to status codes.
fn guard(f: impl FnOnce() -> Result<(), (TrStatus, String)>) -> TrStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TrStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TrStatus, String) {
    (status_of(&e), e.to_string())
}

fn param_err(e: KnotError) -> (TrStatus, String) {
    (TrStatus::InvalidArgument, e.to_string())
}

unsafe fn knot_ref<'a>(knot: *const TrKnot) -> Result<&'a TrKnot, (TrStatus, String)> {
    knot.as_ref()
        .ok_or((TrStatus::NullPointer, "knot handle is null".into()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (TrStatus, String)> {
    if out.is_null() {
        return Err((TrStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| (TrStatus::Computation, "output contains nul".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Parses a knot expression such as `T(2,3)#mirror(T(2,3))` into a new handle
/// stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_parse(
    text: *const c_char,
    out: *mut *mut TrKnot,
) -> TrStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err((TrStatus::NullPointer, "null argument".into()));
        }
        *out = ptr::null_mut();
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (TrStatus::InvalidUtf8, e.to_string()))?;
        let expr = parse_knot(s).map_err(|e| (TrStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(TrKnot { expr }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `knot` must be null or a handle from [`twistrim_knot_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_free(knot: *mut TrKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// Canonical text form of the knot expression.
///
/// # Safety
/// `knot` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_to_string(
    knot: *const TrKnot,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        write_string(out, k.expr.to_string())
    })
}

/// Alexander polynomial as text, e.g. `t^2 - t + 1`.
///
/// # Safety
/// `knot` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_alexander(
    knot: *const TrKnot,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        let delta = knot_group(&k.expr)
            .and_then(|g| alexander_polynomial(&g))
            .map_err(lib_err)?;
        write_string(out, delta.to_string())
    })
}

/// Wirtinger presentation as JSON `{generators, relators, meridian}`.
///
/// # Safety
/// `knot` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_presentation_json(
    knot: *const TrKnot,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        let p = knot_group(&k.expr).map_err(lib_err)?;
        write_string(out, p.to_json())
    })
}

/// Order of `H_1` of the `d`-fold cyclic branched cover. Sets `*infinite`
/// and leaves `*order` at 0 when the group is infinite. Returns
/// `Overflow` when the order exceeds 64 bits.
///
/// # Safety
/// `knot` must be a live handle; `order` and `infinite` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn twistrim_knot_branched_cover_order(
    knot: *const TrKnot,
    d: i64,
    order: *mut u64,
    infinite: *mut bool,
) -> TrStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        if order.is_null() || infinite.is_null() {
            return Err((TrStatus::NullPointer, "output pointer is null".into()));
        }
        let delta = knot_group(&k.expr)
            .and_then(|g| alexander_polynomial(&g))
            .map_err(lib_err)?;
        match branched_cover_order(&delta, d).map_err(lib_err)? {
            CoverOrder::Infinite => {
                *order = 0;
                *infinite = true;
            }
            CoverOrder::Finite(n) => {
                *order = u64::try_from(&n)
                    .map_err(|_| (TrStatus::Overflow, format!("order {n} exceeds 64 bits")))?;
                *infinite = false;
            }
        }
        Ok(())
    })
}

/// Full surgery report as JSON. `cp2` implies `sw`. A `budget` of 0 selects
/// the library default.
///
/// # Safety
/// `knot` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn twistrim_classify_json(
    knot: *const TrKnot,
    d: u64,
    m: i64,
    sw: bool,
    cp2: bool,
    budget: usize,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        let mut params = SurgeryParams::new(d, m).map_err(param_err)?.with_sw(sw);
        if cp2 {
            params = params.with_cp2().map_err(param_err)?;
        }
        let budget = if budget == 0 {
            twistrim::DEFAULT_COSET_BUDGET
        } else {
            budget
        };
        let report = classify(&k.expr, &params, budget).map_err(lib_err)?;
        write_string(out, report.to_json())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twistrim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// is valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn twistrim_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
