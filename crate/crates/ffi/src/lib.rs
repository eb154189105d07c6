//! C interface. Graphs are opaque handles; results that are more than a
//! flag come back as JSON strings owned by the caller and released with
//! `tga_string_free`. Every function returns a `TgaStatus`; on failure
//! `tga_last_error` describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tga::error::Error;
use tga::generators::minimal_generators;
use tga::graph::Graph;
use tga::report::{
    log_entries, weight_map, AdmissibleReport, CertificateReport, DecompositionReport, EqualityReport,
    GeneratorsReport, MembershipReport,
};
use tga::semigroup::{decompose_to_generators, membership, WeightVector};
use tga::spectra::enumerate_admissible_capped;
use tga::toric::equal_pair_words;
use tga::words::Word;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    /// A string argument was not UTF-8.
    Utf8 = 2,
    /// Graph, weight or word text could not be read.
    Parse = 3,
    /// The input was well formed but unsuitable (a precondition failed).
    Invalid = 4,
    /// An internal error or panic.
    Internal = 5,
}

/// A parsed graph.
pub struct TgaGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(TgaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::UnknownVertex(_) | Error::UnknownEdge(_) | Error::Json(_) => TgaStatus::Parse,
            Error::Internal(_) | Error::Io(_) => TgaStatus::Internal,
            _ => TgaStatus::Invalid,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TgaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            TgaStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(Some(message));
            status
        }
        Err(_) => {
            set_error(Some("panic inside the library".into()));
            TgaStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(TgaStatus::Null, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(TgaStatus::Utf8, format!("{what} is not UTF-8")))
}

unsafe fn graph<'a>(p: *const TgaGraph) -> Result<&'a Graph, Failure> {
    p.as_ref().map(|h| &h.graph).ok_or_else(|| Failure(TgaStatus::Null, "graph is null".into()))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(TgaStatus::Null, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<*mut c_char, Failure> {
    let s = serde_json::to_string(value).map_err(|e| Failure(TgaStatus::Internal, e.to_string()))?;
    Ok(CString::new(s).map_err(|e| Failure(TgaStatus::Internal, e.to_string()))?.into_raw())
}

/// Parses a graph in the text or JSON format. On success `*out` owns a
/// handle to release with `tga_graph_free`.
///
/// # Safety
/// `text` must be null or a nul-terminated string; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_graph_parse(text: *const c_char, out: *mut *mut TgaGraph) -> TgaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let graph = Graph::parse(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(TgaGraph { graph }));
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from `tga_graph_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tga_graph_free(graph: *mut TgaGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_graph_vertex_count(graph: *const TgaGraph, out: *mut usize) -> TgaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = self::graph(graph)?.vertex_count();
        Ok(())
    })
}

/// Minimal generators as `{"edges": [...], "pairs": [...]}`.
///
/// # Safety
/// `graph` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_minimal_generators(graph: *const TgaGraph, out: *mut *mut c_char) -> TgaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let g = self::graph(graph)?;
        *out = json(&GeneratorsReport::new(g, &minimal_generators(g)))?;
        Ok(())
    })
}

/// Membership of a weight such as `"a=1,c=1"`. `*member` receives the
/// answer. When `report` is not null it receives the membership document,
/// with a certificate for non-members.
///
/// # Safety
/// `graph` must be null or a live handle, `weight` null or nul-terminated,
/// `member` null or valid for writes, `report` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_is_member(
    graph: *const TgaGraph,
    weight: *const c_char,
    member: *mut bool,
    report: *mut *mut c_char,
) -> TgaStatus {
    guard(|| {
        out_ptr(member, "member")?;
        let g = self::graph(graph)?;
        let f = WeightVector::parse(g, read_str(weight, "weight")?)?;
        let answer = membership(g, &f)?;
        if !report.is_null() {
            *report = json(&MembershipReport {
                weight: weight_map(g, &f),
                member: answer.is_ok(),
                certificate: answer.as_ref().err().map(|c| CertificateReport::new(g, c)),
            })?;
        }
        *member = answer.is_ok();
        Ok(())
    })
}

/// Decomposition of a member into edges and exceptional pairs. Fails with
/// `TGA_STATUS_INVALID` for a non-member.
///
/// # Safety
/// As for `tga_is_member`; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_decompose(
    graph: *const TgaGraph,
    weight: *const c_char,
    out: *mut *mut c_char,
) -> TgaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let g = self::graph(graph)?;
        let f = WeightVector::parse(g, read_str(weight, "weight")?)?;
        let d = decompose_to_generators(g, &f)?;
        *out = json(&DecompositionReport::new(g, &f, &d))?;
        Ok(())
    })
}

/// Equality of two words such as `"e:a-b c:x-y-z"`. `*equal` receives the
/// answer; when `report` is not null it receives the move log document.
///
/// # Safety
/// `graph` must be null or a live handle, `left` and `right` null or
/// nul-terminated, `equal` null or valid for writes, `report` null or valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_equal_words(
    graph: *const TgaGraph,
    left: *const c_char,
    right: *const c_char,
    equal: *mut bool,
    report: *mut *mut c_char,
) -> TgaStatus {
    guard(|| {
        out_ptr(equal, "equal")?;
        let g = self::graph(graph)?;
        let a = Word::parse(g, read_str(left, "left")?)?;
        let b = Word::parse(g, read_str(right, "right")?)?;
        let log = equal_pair_words(g, &a, &b)?;
        if !report.is_null() {
            *report = json(&EqualityReport {
                left: a.display(g),
                right: b.display(g),
                equal: log.is_some(),
                moves: log.as_ref().map_or(0, |l| l.move_count()),
                log: log.as_ref().map(|l| log_entries(g, l)).unwrap_or_default(),
            })?;
        }
        *equal = log.is_some();
        Ok(())
    })
}

/// Admissible subgraphs with the generators of their primes. Graphs with
/// more than `cap` edges are refused with `TGA_STATUS_INVALID`.
///
/// # Safety
/// `graph` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tga_enumerate_admissible(
    graph: *const TgaGraph,
    cap: usize,
    out: *mut *mut c_char,
) -> TgaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let g = self::graph(graph)?;
        let ks = enumerate_admissible_capped(g, cap)?;
        *out = json(&AdmissibleReport::new(g, &ks))?;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tga_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message for the last failed call on this thread, or null after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tga_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
