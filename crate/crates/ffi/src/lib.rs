//! C ABI for `dtry`.
//!
//! Directories cross the boundary as opaque `DtryDirectory` handles holding
//! string-valued directories. Every fallible call returns a [`DtryStatus`];
//! the message for the most recent failure on the calling thread is
//! available from [`dtry_last_error`]. Strings returned to the caller must be
//! released with [`dtry_string_free`] and handles with [`dtry_free`].

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dtry::formats::{
    emit_flat, emit_nested, flat_to_nested, nested_to_flat, parse_flat, parse_nested, Diagnostics,
};
use dtry::{Dtry, ErrorCode, Name, NonEmptyDtry, NonEmptyRecord, Path, PathSet};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtryStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    BadName = 4,
    BadPath = 5,
    DuplicatePath = 6,
    PrefixConflict = 7,
    EmptySubdir = 8,
    NotFound = 9,
    NotALeaf = 10,
}

impl From<ErrorCode> for DtryStatus {
    fn from(code: ErrorCode) -> Self {
        match code {
            ErrorCode::Syntax => DtryStatus::Syntax,
            ErrorCode::BadName => DtryStatus::BadName,
            ErrorCode::BadPath => DtryStatus::BadPath,
            ErrorCode::DuplicatePath => DtryStatus::DuplicatePath,
            ErrorCode::PrefixConflict => DtryStatus::PrefixConflict,
            ErrorCode::EmptySubdir => DtryStatus::EmptySubdir,
            // not produced by the directory operations exposed here
            ErrorCode::NotACategory | ErrorCode::NotComposable => DtryStatus::Syntax,
        }
    }
}

/// Opaque directory handle.
pub struct DtryDirectory {
    inner: Dtry<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: DtryStatus, message: impl Into<String>) -> DtryStatus {
    let message = message.into().replace('\0', "\\0");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).ok());
    status
}

fn fail_diagnostics(d: &Diagnostics) -> DtryStatus {
    let status = d
        .iter()
        .next()
        .map_or(DtryStatus::Syntax, |first| first.code.into());
    fail(status, d.to_string())
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, DtryStatus> {
    if s.is_null() {
        return Err(fail(DtryStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| {
        fail(
            DtryStatus::InvalidUtf8,
            format!("argument is not UTF-8: {e}"),
        )
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "\\0")).map_or(ptr::null_mut(), CString::into_raw)
}

fn into_handle(inner: Dtry<String>) -> *mut DtryDirectory {
    Box::into_raw(Box::new(DtryDirectory { inner }))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// The message describing the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn dtry_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The diagnostic code name for a status, e.g. `E_PREFIX_CONFLICT`. Static storage.
#[no_mangle]
pub extern "C" fn dtry_status_name(status: DtryStatus) -> *const c_char {
    let name: &'static CStr = match status {
        DtryStatus::Ok => c"OK",
        DtryStatus::NullPointer => c"E_NULL_POINTER",
        DtryStatus::InvalidUtf8 => c"E_INVALID_UTF8",
        DtryStatus::Syntax => c"E_SYNTAX",
        DtryStatus::BadName => c"E_BAD_NAME",
        DtryStatus::BadPath => c"E_BAD_PATH",
        DtryStatus::DuplicatePath => c"E_DUPLICATE_PATH",
        DtryStatus::PrefixConflict => c"E_PREFIX_CONFLICT",
        DtryStatus::EmptySubdir => c"E_EMPTY_SUBDIR",
        DtryStatus::NotFound => c"E_NOT_FOUND",
        DtryStatus::NotALeaf => c"E_NOT_A_LEAF",
    };
    name.as_ptr()
}

/// A new empty directory.
#[no_mangle]
pub extern "C" fn dtry_new_empty() -> *mut DtryDirectory {
    into_handle(Dtry::empty())
}

/// # Safety
/// `dir` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn dtry_free(dir: *mut DtryDirectory) {
    if !dir.is_null() {
        drop(Box::from_raw(dir));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn dtry_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a flat `path = value` document into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dtry_parse_flat(
    text: *const c_char,
    out: *mut *mut DtryDirectory,
) -> DtryStatus {
    if out.is_null() {
        return fail(DtryStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let text = try_status!(read_str(text));
    match parse_flat(text) {
        Ok(d) => {
            clear_error();
            *out = into_handle(d);
            DtryStatus::Ok
        }
        Err(d) => fail_diagnostics(&d),
    }
}

/// Parses a nested JSON document. Leaf values are stored in their flat
/// spelling.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dtry_parse_nested(
    text: *const c_char,
    out: *mut *mut DtryDirectory,
) -> DtryStatus {
    if out.is_null() {
        return fail(DtryStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let text = try_status!(read_str(text));
    match parse_nested(text) {
        Ok(d) => {
            clear_error();
            *out = into_handle(nested_to_flat(&d));
            DtryStatus::Ok
        }
        Err(d) => fail_diagnostics(&d),
    }
}

/// Canonical flat text, or NULL if `dir` is NULL. Free with `dtry_string_free`.
///
/// # Safety
/// `dir` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dtry_emit_flat(dir: *const DtryDirectory) -> *mut c_char {
    match dir.as_ref() {
        Some(d) => into_c_string(emit_flat(&d.inner)),
        None => ptr::null_mut(),
    }
}

/// Canonical nested JSON text, or NULL if `dir` is NULL. Free with `dtry_string_free`.
///
/// # Safety
/// `dir` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dtry_emit_nested(dir: *const DtryDirectory) -> *mut c_char {
    match dir.as_ref() {
        Some(d) => into_c_string(emit_nested(&flat_to_nested(&d.inner))),
        None => ptr::null_mut(),
    }
}

/// Number of complete paths; 0 for NULL.
///
/// # Safety
/// `dir` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dtry_leaf_count(dir: *const DtryDirectory) -> usize {
    dir.as_ref().map_or(0, |d| d.inner.leaf_count())
}

/// Copies the value at the complete path `path` into `*out_value`.
///
/// # Safety
/// `dir` must be a live handle, `path` a NUL-terminated string and
/// `out_value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dtry_get(
    dir: *const DtryDirectory,
    path: *const c_char,
    out_value: *mut *mut c_char,
) -> DtryStatus {
    if out_value.is_null() {
        return fail(DtryStatus::NullPointer, "null output pointer");
    }
    *out_value = ptr::null_mut();
    let Some(d) = dir.as_ref() else {
        return fail(DtryStatus::NullPointer, "null directory");
    };
    let text = try_status!(read_str(path));
    let path = try_status!(Path::parse(text).map_err(|e| fail(e.code().into(), e.to_string())));
    match d.inner.subtree(&path) {
        None => fail(DtryStatus::NotFound, format!("path `{path}` not found")),
        Some(NonEmptyDtry::Node(_)) => fail(
            DtryStatus::NotALeaf,
            format!("path `{path}` is a subdirectory"),
        ),
        Some(NonEmptyDtry::Leaf(v)) => {
            clear_error();
            *out_value = into_c_string(v.clone());
            DtryStatus::Ok
        }
    }
}

/// Stores the subdirectory at `path` in a new handle `*out`.
///
/// # Safety
/// `dir` must be a live handle, `path` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dtry_lookup(
    dir: *const DtryDirectory,
    path: *const c_char,
    out: *mut *mut DtryDirectory,
) -> DtryStatus {
    if out.is_null() {
        return fail(DtryStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let Some(d) = dir.as_ref() else {
        return fail(DtryStatus::NullPointer, "null directory");
    };
    let text = try_status!(read_str(path));
    let path = try_status!(Path::parse(text).map_err(|e| fail(e.code().into(), e.to_string())));
    match d.inner.lookup(&path) {
        None => fail(DtryStatus::NotFound, format!("path `{path}` not found")),
        Some(sub) => {
            clear_error();
            *out = into_handle(sub);
            DtryStatus::Ok
        }
    }
}

/// Adds a binding. On failure the directory is left unchanged.
///
/// # Safety
/// `dir` must be a live handle; `path` and `value` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn dtry_insert(
    dir: *mut DtryDirectory,
    path: *const c_char,
    value: *const c_char,
) -> DtryStatus {
    let Some(d) = dir.as_mut() else {
        return fail(DtryStatus::NullPointer, "null directory");
    };
    let path = try_status!(read_str(path));
    let value = try_status!(read_str(value));
    let path = try_status!(Path::parse(path).map_err(|e| fail(e.code().into(), e.to_string())));
    match d.inner.clone().insert(path, value.to_owned()) {
        Ok(next) => {
            clear_error();
            d.inner = next;
            DtryStatus::Ok
        }
        Err(e) => fail(e.code().into(), e.to_string()),
    }
}

/// Places each `dirs[i]` under `names[i]` and stores the result in `*out`.
/// Names must be valid and distinct; `count` must be at least 1.
///
/// # Safety
/// `names` and `dirs` must each point to `count` valid entries.
#[no_mangle]
pub unsafe extern "C" fn dtry_merge(
    names: *const *const c_char,
    dirs: *const *const DtryDirectory,
    count: usize,
    out: *mut *mut DtryDirectory,
) -> DtryStatus {
    if out.is_null() || names.is_null() || dirs.is_null() {
        return fail(DtryStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    let mut parts = BTreeMap::new();
    for i in 0..count {
        let name = try_status!(read_str(*names.add(i)));
        let name =
            try_status!(Name::parse(name).map_err(|e| fail(DtryStatus::BadName, e.to_string())));
        let Some(d) = (*dirs.add(i)).as_ref() else {
            return fail(
                DtryStatus::NullPointer,
                format!("null directory at index {i}"),
            );
        };
        if parts.insert(name.clone(), d.inner.clone()).is_some() {
            return fail(
                DtryStatus::DuplicatePath,
                format!("name `{name}` given twice"),
            );
        }
    }
    let Some(parts) = NonEmptyRecord::new(parts) else {
        return fail(DtryStatus::Syntax, "merge needs at least one directory");
    };
    clear_error();
    *out = into_handle(Dtry::merge_disjoint(parts));
    DtryStatus::Ok
}

/// Checks that `count` paths are valid, distinct and prefix-free without
/// building a directory.
///
/// # Safety
/// `paths` must point to `count` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn dtry_check_prefix_free(
    paths: *const *const c_char,
    count: usize,
) -> DtryStatus {
    if paths.is_null() && count > 0 {
        return fail(DtryStatus::NullPointer, "null path array");
    }
    let mut set = PathSet::new();
    for i in 0..count {
        let text = try_status!(read_str(*paths.add(i)));
        let p = try_status!(Path::parse(text).map_err(|e| fail(e.code().into(), e.to_string())));
        if !set.insert(p.clone()) {
            return fail(DtryStatus::DuplicatePath, format!("path `{p}` given twice"));
        }
    }
    if let Some((a, b)) = dtry::path::prefix_conflicts(&set).into_iter().next() {
        return fail(
            DtryStatus::PrefixConflict,
            format!("`{a}` is a prefix of `{b}`"),
        );
    }
    clear_error();
    DtryStatus::Ok
}
