//! C ABI over `quiverspec`.
//!
//! Quivers are opaque handles created by [`qs_quiver_parse`] and released with
//! [`qs_quiver_free`]. Every fallible call returns a [`QsStatus`]; on failure
//! [`qs_last_error`] describes the problem until the next call on the same
//! thread. Strings handed out by the library are released with
//! [`qs_string_free`]. Vertex numbers are 1-based, as in the text format.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_rational::BigRational;
use quiverspec::explorer::{classify_two_maximal, ClassLimits, TwoMaximalType, TwoMaximalVerdict};
use quiverspec::spectral::exchange_polynomial;
use quiverspec::{mutate, parse_quiver, radius_cmp, QuiverError, ValuedQuiver};

/// Opaque quiver handle.
pub struct QsQuiver {
    inner: ValuedQuiver,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed text or a quiver with no positive symmetrizer.
    InvalidQuiver = 3,
    OutOfRange = 4,
    /// Zero denominator.
    BadThreshold = 5,
    /// The input is valid but the operation does not apply to it.
    Unsupported = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsClassKind {
    TwoMaximal = 0,
    NotTwoMaximal = 1,
    /// Search limits were reached first.
    Undecided = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsFamily {
    None = 0,
    /// Two vertices joined by a double arrow.
    X2 = 1,
    A = 2,
}

/// Result of [`qs_classify_two_maximal`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QsClassification {
    pub kind: QsClassKind,
    /// Set when `kind` is `TwoMaximal`.
    pub family: QsFamily,
    /// Vertex count of the named representative, else 0.
    pub rank: usize,
    /// Radius of the witness when `kind` is `NotTwoMaximal`, else 0.
    pub witness_radius: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &QuiverError) -> QsStatus {
    match e {
        QuiverError::VertexOutOfRange { .. } | QuiverError::ArrowOutOfRange { .. } => {
            QsStatus::OutOfRange
        }
        QuiverError::Disconnected | QuiverError::NotSkewSymmetric => QsStatus::Unsupported,
        _ => QsStatus::InvalidQuiver,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (QsStatus, String)>) -> QsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QsStatus::Panic
        }
    }
}

fn fail(e: QuiverError) -> (QsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (QsStatus, String) {
    (QsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn quiver<'a>(q: *const QsQuiver) -> Result<&'a ValuedQuiver, (QsStatus, String)> {
    q.as_ref().map(|h| &h.inner).ok_or_else(|| null("quiver"))
}

fn boxed(q: ValuedQuiver) -> *mut QsQuiver {
    Box::into_raw(Box::new(QsQuiver { inner: q }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library strings contain no nul")
        .into_raw()
}

/// Parses the quiver text format and validates the result.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qs_quiver_parse(text: *const c_char, out: *mut *mut QsQuiver) -> QsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (QsStatus::InvalidUtf8, e.to_string()))?;
        let q = parse_quiver(s).map_err(fail)?;
        q.validate().map_err(fail)?;
        *out = boxed(q);
        Ok(())
    })
}

/// # Safety
/// `q` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qs_quiver_free(q: *mut QsQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `q` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_quiver_order(q: *const QsQuiver) -> usize {
    q.as_ref().map_or(0, |h| h.inner.order())
}

/// Mutates at vertex `k` (1-based) into a new handle.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qs_quiver_mutate(
    q: *const QsQuiver,
    k: usize,
    out: *mut *mut QsQuiver,
) -> QsStatus {
    guard(|| {
        let q = quiver(q)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if k == 0 || k > q.order() {
            return Err(fail(QuiverError::VertexOutOfRange {
                vertex: k,
                n: q.order(),
            }));
        }
        let b = q.exchange_matrix().map_err(fail)?;
        *out = boxed(mutate(&b, k - 1).map_err(fail)?.to_quiver());
        Ok(())
    })
}

/// The quiver in the text format.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer. Free the result with
/// [`qs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qs_quiver_to_text(q: *const QsQuiver, out: *mut *mut c_char) -> QsStatus {
    guard(|| {
        let q = quiver(q)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = c_string(q.to_text());
        Ok(())
    })
}

/// The exchange polynomial, e.g. `λ^3 + 2λ`, as UTF-8.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer. Free the result with
/// [`qs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qs_exchange_polynomial(
    q: *const QsQuiver,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let q = quiver(q)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let f = exchange_polynomial(&q.exchange_matrix().map_err(fail)?);
        *out = c_string(f.to_string());
        Ok(())
    })
}

/// Compares the exchange spectral radius with `num/den` exactly.
/// `ordering` receives -1, 0 or 1; `approx` (optional) the radius.
///
/// # Safety
/// `q` must be a live handle, `ordering` a valid pointer, `approx` null or valid.
#[no_mangle]
pub unsafe extern "C" fn qs_radius_cmp(
    q: *const QsQuiver,
    num: i64,
    den: i64,
    ordering: *mut i32,
    approx: *mut f64,
) -> QsStatus {
    guard(|| {
        let q = quiver(q)?;
        if ordering.is_null() {
            return Err(null("ordering"));
        }
        if den == 0 {
            return Err((QsStatus::BadThreshold, "zero denominator".into()));
        }
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        let v = radius_cmp(q, &r).map_err(fail)?;
        *ordering = match v.ordering {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
        if !approx.is_null() {
            *approx = v.approx;
        }
        Ok(())
    })
}

/// Decides 2-maximality of a connected skew-symmetric quiver with the default
/// search limits. When `witness` is non-null it receives the witness word as
/// comma-separated 1-based vertices (empty when the quiver itself is the
/// witness), or null if there is no witness.
///
/// # Safety
/// `q` must be a live handle, `out` a valid pointer, `witness` null or valid.
/// Free a returned word with [`qs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qs_classify_two_maximal(
    q: *const QsQuiver,
    out: *mut QsClassification,
    witness: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let q = quiver(q)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let b = q.exchange_matrix().map_err(fail)?;
        let v = classify_two_maximal(&b, &ClassLimits::default()).map_err(fail)?;
        let mut c = QsClassification {
            kind: QsClassKind::Undecided,
            family: QsFamily::None,
            rank: 0,
            witness_radius: 0.0,
        };
        let mut word = None;
        match v {
            TwoMaximalVerdict::TwoMaximal(t) => {
                c.kind = QsClassKind::TwoMaximal;
                (c.family, c.rank) = match t {
                    TwoMaximalType::X2 => (QsFamily::X2, 2),
                    TwoMaximalType::A(n) => (QsFamily::A, n),
                };
            }
            TwoMaximalVerdict::Not(w) => {
                c.kind = QsClassKind::NotTwoMaximal;
                c.witness_radius = w.verdict.approx;
                let steps: Vec<String> =
                    w.word.one_based().iter().map(ToString::to_string).collect();
                word = Some(steps.join(","));
            }
            TwoMaximalVerdict::Undecided => {}
        }
        *out = c;
        if !witness.is_null() {
            *witness = word.map_or(ptr::null_mut(), c_string);
        }
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// owned by the library and valid until the next call.
#[no_mangle]
pub extern "C" fn qs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn qs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
