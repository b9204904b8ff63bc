//! C interface to `hitwork`.
//!
//! Quotients are opaque handles created by [`hw_quotient_new`] and released
//! with [`hw_quotient_free`]. Every fallible call returns an [`HwStatus`];
//! the message for the most recent failure on the calling thread is available
//! from [`hw_last_error`]. Strings are written into caller buffers as
//! NUL-terminated UTF-8, and the required size (including the NUL) is always
//! reported through `needed` when it is non-null.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hitwork::cache::DEFAULT_MAX_DEGREE;
use hitwork::gl::{gl_generators, invariants};
use hitwork::hit::QuotientBasis;
use hitwork::poly::{Polynomial, MAX_VARS};
use hitwork::steenrod::{apply_op, chi};
use hitwork::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BufferTooSmall = 4,
    DegreeCap = 5,
    Internal = 6,
}

/// `Q_k(d)`, opaque to C.
pub struct HwQuotient {
    inner: QuotientBasis,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn fail(status: HwStatus, msg: impl Into<String>) -> HwStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> HwStatus {
    let status = match e {
        Error::Parse { .. } => HwStatus::ParseError,
        Error::DegreeCap { .. } => HwStatus::DegreeCap,
        Error::Io(_) | Error::Cache(_) => HwStatus::Internal,
        _ => HwStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting panics into [`HwStatus::Internal`].
fn guard(f: impl FnOnce() -> HwStatus) -> HwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(HwStatus::Internal, "internal panic"),
    }
}

/// Copies `s` plus a NUL into `buf` if it fits.
///
/// # Safety
/// `buf` must be valid for `len` bytes or null; `needed` null or writable.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> HwStatus {
    let n = s.len() + 1;
    if !needed.is_null() {
        *needed = n;
    }
    if buf.is_null() || len < n {
        return fail(HwStatus::BufferTooSmall, format!("{n} bytes needed"));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    HwStatus::Ok
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HwStatus> {
    if s.is_null() {
        return Err(fail(HwStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(HwStatus::ParseError, "string is not UTF-8"))
}

fn check_k(k: u32) -> Result<usize, HwStatus> {
    if k == 0 || k as usize > MAX_VARS {
        return Err(fail(HwStatus::InvalidArgument, format!("k must be in 1..={MAX_VARS}")));
    }
    Ok(k as usize)
}

/// Computes `Q_k(d)` and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_new(k: u32, d: u32, out: *mut *mut HwQuotient) -> HwStatus {
    if out.is_null() {
        return fail(HwStatus::NullPointer, "out is null");
    }
    *out = ptr::null_mut();
    guard(|| {
        let k = match check_k(k) {
            Ok(k) => k,
            Err(s) => return s,
        };
        if d > DEFAULT_MAX_DEGREE {
            return from_error(Error::DegreeCap { requested: d, cap: DEFAULT_MAX_DEGREE });
        }
        match QuotientBasis::compute(k, d) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(HwQuotient { inner }));
                HwStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `q` must be null or a handle from [`hw_quotient_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_free(q: *mut HwQuotient) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// `dim Q_k(d)`, or 0 for a null handle.
///
/// # Safety
/// `q` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_dim(q: *const HwQuotient) -> usize {
    q.as_ref().map_or(0, |q| q.inner.dim())
}

/// Sets `*out` to whether `poly` (text form, e.g. `(2,1,0,5)+(1,1,0,6)`) is hit.
///
/// # Safety
/// `q` a live handle, `poly` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_is_hit(q: *const HwQuotient, poly: *const c_char, out: *mut bool) -> HwStatus {
    let (Some(q), false) = (q.as_ref(), out.is_null()) else {
        return fail(HwStatus::NullPointer, "null handle or output");
    };
    let text = match read_str(poly) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guard(|| match Polynomial::parse(q.inner.k(), text).and_then(|p| q.inner.is_hit(&p)) {
        Ok(h) => {
            *out = h;
            HwStatus::Ok
        }
        Err(e) => from_error(e),
    })
}

/// Dimension of the `GL_k`-invariants of the quotient.
///
/// # Safety
/// `q` a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_invariants_dim(q: *const HwQuotient, out: *mut usize) -> HwStatus {
    let (Some(q), false) = (q.as_ref(), out.is_null()) else {
        return fail(HwStatus::NullPointer, "null handle or output");
    };
    guard(|| match invariants(&q.inner, &gl_generators(q.inner.k())) {
        Ok(s) => {
            *out = s.dim();
            HwStatus::Ok
        }
        Err(e) => from_error(e),
    })
}

/// Writes representative `index` (ascending lexicographic order) as text.
///
/// # Safety
/// `q` a live handle; `buf` valid for `len` bytes; `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hw_quotient_rep(
    q: *const HwQuotient,
    index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> HwStatus {
    let Some(q) = q.as_ref() else {
        return fail(HwStatus::NullPointer, "null handle");
    };
    if index >= q.inner.dim() {
        return fail(HwStatus::InvalidArgument, format!("index {index} out of range"));
    }
    write_str(&q.inner.rep(index).to_string(), buf, len, needed)
}

/// Applies the antipode of `Sq^n` to `poly` in `k` variables and writes the result.
///
/// # Safety
/// `poly` a NUL-terminated string; `buf` valid for `len` bytes; `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hw_chi_apply(
    n: u32,
    k: u32,
    poly: *const c_char,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> HwStatus {
    let k = match check_k(k) {
        Ok(k) => k,
        Err(s) => return s,
    };
    if n > 64 {
        return fail(HwStatus::InvalidArgument, "n must be at most 64");
    }
    let text = match read_str(poly) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guard(|| match Polynomial::parse(k, text).and_then(|p| apply_op(&chi(n), &p)) {
        Ok(r) => write_str(&r.to_string(), buf, len, needed),
        Err(e) => from_error(e),
    })
}

/// Copies the calling thread's last error message into `buf` (truncated to
/// fit) and returns its full length including the NUL.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn hw_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len() + 1
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
