//! C ABI over `homleibniz`.
//!
//! Algebras are opaque `HlAlgebra` handles. Every fallible call returns an
//! `HlStatus`; on failure `hl_last_error_message` describes the error for
//! the calling thread. Strings handed out by the library must be released
//! with `hl_string_free`, handles with `hl_algebra_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use homleibniz::connections::connection_classes;
use homleibniz::diagnostics::{decide_simplicity, SimplicityVerdict};
use homleibniz::report::build_report;
use homleibniz::{algebra, corpus, decompose, io, Error, HomAlgebra, Vector};

/// An algebra together with the `H` basis read from its file.
pub struct HlAlgebra {
    algebra: HomAlgebra,
    h: Vec<Vector>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Io = 4,
    /// A mathematical rejection such as a non-split algebra.
    Math = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlVerdict {
    Simple = 0,
    NotSimple = 1,
    Inconclusive = 2,
}

/// `hl_algebra_validate` flag: the Hom-Leibniz identity holds.
pub const HL_HOM_LEIBNIZ: u32 = 1;
/// `hl_algebra_validate` flag: the twist is an invertible automorphism.
pub const HL_REGULAR: u32 = 2;
/// `hl_algebra_validate` flag: antisymmetry and the Hom-Jacobi identity hold.
pub const HL_HOM_LIE: u32 = 4;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    let c = CString::new(text).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HlStatus {
    match e {
        Error::Parse { .. } | Error::IndexOutOfRange { .. } | Error::NonRational { .. } => HlStatus::Parse,
        Error::Io(_) => HlStatus::Io,
        Error::Internal(_) => HlStatus::Internal,
        _ => HlStatus::Math,
    }
}

fn guard<F>(f: F) -> HlStatus
where
    F: FnOnce() -> Result<(), HlStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HlStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("panic inside homleibniz");
            HlStatus::Internal
        }
    }
}

fn lib<T>(r: homleibniz::Result<T>) -> Result<T, HlStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, HlStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(HlStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        HlStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(p: *const HlAlgebra) -> Result<&'a HlAlgebra, HlStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null algebra handle");
        HlStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), HlStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(HlStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn emit(out: *mut *mut HlAlgebra, loaded: (HomAlgebra, Vec<Vector>)) -> Result<(), HlStatus> {
    let boxed = Box::new(HlAlgebra {
        algebra: loaded.0,
        h: loaded.1,
    });
    write(out, Box::into_raw(boxed))
}

/// Parses an algebra file held in memory.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_from_json(json: *const c_char, out: *mut *mut HlAlgebra) -> HlStatus {
    guard(|| {
        let s = text(json)?;
        emit(out, lib(io::parse_algebra_str(s, "<memory>"))?)
    })
}

/// Reads and parses an algebra file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_load_file(path: *const c_char, out: *mut *mut HlAlgebra) -> HlStatus {
    guard(|| {
        let p = text(path)?;
        emit(out, lib(io::parse_algebra(Path::new(p)))?)
    })
}

/// Loads a bundled algebra by name (`"sl2"`, `"d6"`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_corpus(name: *const c_char, out: *mut *mut HlAlgebra) -> HlStatus {
    guard(|| {
        let n = text(name)?;
        emit(out, lib(corpus::load(n))?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_free(a: *mut HlAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_dim(a: *const HlAlgebra, out: *mut usize) -> HlStatus {
    guard(|| write(out, handle(a)?.algebra.dim()))
}

/// Writes a bit set of `HL_HOM_LEIBNIZ`, `HL_REGULAR` and `HL_HOM_LIE`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_validate(a: *const HlAlgebra, out: *mut u32) -> HlStatus {
    guard(|| {
        let alg = &handle(a)?.algebra;
        let mut flags = 0;
        if algebra::check_hom_leibniz(alg).holds {
            flags |= HL_HOM_LEIBNIZ;
        }
        if algebra::check_regular(alg).holds {
            flags |= HL_REGULAR;
        }
        if algebra::check_hom_lie(alg).holds {
            flags |= HL_HOM_LIE;
        }
        write(out, flags)
    })
}

/// Number of roots of the split decomposition for the handle's `H`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_root_count(a: *const HlAlgebra, out: *mut usize) -> HlStatus {
    guard(|| {
        let h = handle(a)?;
        let d = lib(decompose(&h.algebra, &h.h))?;
        write(out, d.roots().len())
    })
}

/// Number of connection classes of roots.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_class_count(a: *const HlAlgebra, out: *mut usize) -> HlStatus {
    guard(|| {
        let h = handle(a)?;
        let d = lib(decompose(&h.algebra, &h.h))?;
        write(out, lib(connection_classes(&d))?.len())
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_simplicity(a: *const HlAlgebra, out: *mut HlVerdict) -> HlStatus {
    guard(|| {
        let h = handle(a)?;
        let d = lib(decompose(&h.algebra, &h.h))?;
        let v = match lib(decide_simplicity(&d))? {
            SimplicityVerdict::Simple { .. } => HlVerdict::Simple,
            SimplicityVerdict::NotSimple { .. } => HlVerdict::NotSimple,
            SimplicityVerdict::Inconclusive { .. } => HlVerdict::Inconclusive,
        };
        write(out, v)
    })
}

/// The full JSON report. Release the string with `hl_string_free`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_algebra_report_json(a: *const HlAlgebra, out: *mut *mut c_char) -> HlStatus {
    guard(|| {
        let h = handle(a)?;
        let json = build_report(&h.algebra, &h.h).to_json();
        let c = CString::new(json).map_err(|_| {
            set_error("report contains a NUL byte");
            HlStatus::Internal
        })?;
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn hl_status_name(status: HlStatus) -> *const c_char {
    let name: &'static CStr = match status {
        HlStatus::Ok => c"ok",
        HlStatus::NullPointer => c"null pointer",
        HlStatus::InvalidUtf8 => c"invalid UTF-8",
        HlStatus::Parse => c"parse error",
        HlStatus::Io => c"I/O error",
        HlStatus::Math => c"mathematical error",
        HlStatus::Internal => c"internal error",
    };
    name.as_ptr()
}
