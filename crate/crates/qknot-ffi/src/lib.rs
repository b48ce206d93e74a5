//! C ABI for qknot.
//!
//! Curves cross the boundary as opaque [`QkCurve`] handles. Every fallible
//! call returns a [`QkStatus`] and writes its result through an out pointer;
//! on failure the message is available from [`qk_last_error`] on the same
//! thread. Strings returned by the library are freed with [`qk_string_free`],
//! handles with [`qk_curve_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qknot::curve::{Ambient, RationalCurve};
use qknot::{catalog, geometry, glue, io, jacobian, singular, writhe, Error};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QkStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    Invalid = 4,
    NotOnQuadric = 5,
    OnCurve = 6,
    Degenerate = 7,
    Exhausted = 8,
    Parity = 9,
    CenterDisagreement = 10,
    Numeric = 11,
    NotFound = 12,
    Panic = 13,
}

/// Opaque curve handle.
pub struct QkCurve {
    inner: RationalCurve,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> QkStatus {
    match e {
        Error::Parse(_) => QkStatus::Parse,
        Error::Invalid(_) => QkStatus::Invalid,
        Error::NotOnQuadric => QkStatus::NotOnQuadric,
        Error::OnCurve => QkStatus::OnCurve,
        Error::Degenerate(_) => QkStatus::Degenerate,
        Error::Exhausted(_) => QkStatus::Exhausted,
        Error::Parity { .. } => QkStatus::Parity,
        Error::CenterDisagreement(_) => QkStatus::CenterDisagreement,
        Error::Numeric(_) => QkStatus::Numeric,
    }
}

struct Fail(QkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QkStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            QkStatus::Panic
        }
    }
}

unsafe fn curve<'a>(c: *const QkCurve) -> Result<&'a RationalCurve, Fail> {
    c.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| Fail(QkStatus::NullPointer, "null curve handle".into()))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(QkStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(QkStatus::Utf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QkStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn handle(c: RationalCurve) -> *mut QkCurve {
    Box::into_raw(Box::new(QkCurve { inner: c }))
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn qk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `c` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_free(c: *mut QkCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Parse a curve document.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_from_json(
    json: *const c_char,
    out: *mut *mut QkCurve,
) -> QkStatus {
    guard(|| {
        let c = io::curve_from_json(text(json)?)?;
        put(out, handle(c))
    })
}

/// Serialize a curve; free the result with `qk_string_free`.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_to_json(c: *const QkCurve, out: *mut *mut c_char) -> QkStatus {
    guard(|| put(out, owned(io::curve_to_json(curve(c)?))))
}

/// Curve of a catalog entry.
///
/// # Safety
/// `id` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_catalog_curve(id: *const c_char, out: *mut *mut QkCurve) -> QkStatus {
    guard(|| {
        let id = text(id)?;
        let e = catalog::entry(id)
            .ok_or_else(|| Fail(QkStatus::NotFound, format!("no catalog entry '{id}'")))?;
        put(out, handle(e.curve()?))
    })
}

/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_degree(c: *const QkCurve, out: *mut usize) -> QkStatus {
    guard(|| put(out, curve(c)?.degree()))
}

/// True for a curve in RP4, false for a curve in the slice x0 = 0.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_in_rp4(c: *const QkCurve, out: *mut bool) -> QkStatus {
    guard(|| put(out, curve(c)?.ambient() == Ambient::Rp4))
}

/// Whether the curve lies on the quadric, decided exactly.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_on_quadric(c: *const QkCurve, out: *mut bool) -> QkStatus {
    guard(|| put(out, curve(c)?.on_quadric()?))
}

/// Whether the curve has no double points and no cusps.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_is_knot(c: *const QkCurve, out: *mut bool) -> QkStatus {
    guard(|| put(out, singular::is_knot(curve(c)?)?.is_knot))
}

/// Number of double points, real and complex, without multiplicity.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_double_points(c: *const QkCurve, out: *mut usize) -> QkStatus {
    guard(|| put(out, singular::double_points(curve(c)?)?.len()))
}

/// Writhe of a knot. Curves on the quadric are projected first.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_writhe(c: *const QkCurve, out: *mut i64) -> QkStatus {
    guard(|| {
        let c = curve(c)?;
        let w = match c.ambient() {
            Ambient::Rp4 => writhe::writhe_q32(c, None)?.report.writhe,
            Ambient::Rp3Slice => writhe::writhe(c)?.writhe,
        };
        put(out, w)
    })
}

/// Project a quadric curve from a quadric point off it. `point` is written
/// as `[a:b:c:d:e]` with rational or `a+b√2` entries.
///
/// # Safety
/// `c` must be a valid handle, `point` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_project(
    c: *const QkCurve,
    point: *const c_char,
    out: *mut *mut QkCurve,
) -> QkStatus {
    guard(|| {
        let p = io::parse_point(text(point)?)?;
        put(
            out,
            handle(geometry::project_off_curve(curve(c)?, &p)?.curve),
        )
    })
}

/// Lift a slice curve back to the quadric.
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_pullback(c: *const QkCurve, out: *mut *mut QkCurve) -> QkStatus {
    guard(|| put(out, handle(geometry::pullback(curve(c)?)?.curve)))
}

/// Glue two knots meeting in one point. Both must live in the same ambient.
///
/// # Safety
/// `a` and `b` must be valid handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_glue(
    a: *const QkCurve,
    b: *const QkCurve,
    reverse: bool,
    out: *mut *mut QkCurve,
) -> QkStatus {
    guard(|| {
        let (a, b) = (curve(a)?, curve(b)?);
        let g = match a.ambient() {
            Ambient::Rp4 => glue::glue_q32(a, b, reverse, None)?.0,
            Ambient::Rp3Slice => {
                let at = glue::unique_intersection(a, b)?;
                glue::glue_rp3(a, b, &at, reverse)?.0
            }
        };
        put(out, handle(g))
    })
}

/// Exact rank of the differential of the quadric equation at the curve and
/// the full-rank value `2d + 1`.
///
/// # Safety
/// `c` must be a valid handle; `rank` and `expected` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qk_curve_jacobian_rank(
    c: *const QkCurve,
    rank: *mut usize,
    expected: *mut usize,
) -> QkStatus {
    guard(|| {
        let r = jacobian::rank_report(curve(c)?)?;
        put(rank, r.rank)?;
        put(expected, r.expected)
    })
}
