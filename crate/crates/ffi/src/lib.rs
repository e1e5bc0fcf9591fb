//! C interface to `contracta`.
//!
//! Graphs cross the boundary as opaque `ContractaGraph` handles. Every
//! fallible call returns a [`ContractaStatus`]; on failure a message is kept
//! per thread and can be read with [`contracta_last_error`]. Strings handed
//! out by the library must be released with [`contracta_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use contracta::{classify, vertex_connectivity, Error, Graph};

/// Result codes of the C interface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    LowConnectivity = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct ContractaGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    let c = CString::new(text).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ContractaStatus {
    match e {
        Error::Parse { .. } => ContractaStatus::Parse,
        Error::ConnectivityTooLow { .. } | Error::TooSmall { .. } | Error::Complete => ContractaStatus::LowConnectivity,
        Error::Disagreement(_) | Error::Io(_) => ContractaStatus::Internal,
        _ => ContractaStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> ContractaStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning panics into [`ContractaStatus::Panic`].
fn guard(f: impl FnOnce() -> ContractaStatus) -> ContractaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("panic: {msg}"));
            ContractaStatus::Panic
        }
    }
}

fn null(what: &str) -> ContractaStatus {
    set_error(format!("{what} is null"));
    ContractaStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const ContractaGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.graph)
}

fn into_c_string(s: String, out: *mut *mut c_char) -> ContractaStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ContractaStatus::Ok
        }
        Err(_) => {
            set_error("string contains an interior NUL");
            ContractaStatus::Internal
        }
    }
}

fn emit_handle(graph: Graph, out: *mut *mut ContractaGraph) -> ContractaStatus {
    unsafe { *out = Box::into_raw(Box::new(ContractaGraph { graph })) };
    ContractaStatus::Ok
}

/// Parses one graph6 or sparse6 line (optional `>>graph6<<` header,
/// trailing whitespace ignored).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn contracta_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut ContractaGraph,
) -> ContractaStatus {
    guard(|| {
        if text.is_null() {
            return null("text");
        }
        if out.is_null() {
            return null("out");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            set_error("text is not valid UTF-8");
            return ContractaStatus::InvalidUtf8;
        };
        match contracta::parse_line(s.trim_end().as_bytes()) {
            Ok(g) => emit_handle(g, out),
            Err(e) => fail(e),
        }
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries). `edges` may be null when
/// `edge_count` is zero.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contracta_graph_from_edges(
    n: size_t,
    edges: *const size_t,
    edge_count: size_t,
    out: *mut *mut ContractaGraph,
) -> ContractaStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if edges.is_null() && edge_count > 0 {
            return null("edges");
        }
        let flat: &[size_t] = if edge_count == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => emit_handle(g, out),
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn contracta_graph_free(g: *mut ContractaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn contracta_graph_order(g: *const ContractaGraph) -> size_t {
    graph_ref(g).map_or(0, Graph::order)
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn contracta_graph_size(g: *const ContractaGraph) -> size_t {
    graph_ref(g).map_or(0, Graph::size)
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn contracta_vertex_connectivity(g: *const ContractaGraph, out: *mut size_t) -> ContractaStatus {
    guard(|| {
        let Some(graph) = graph_ref(g) else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        match vertex_connectivity(graph) {
            Ok(k) => {
                *out = k;
                ContractaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Whether identifying the non-adjacent vertices `u` and `v` keeps the
/// graph 3-connected. The graph must be 3-connected with at least five
/// vertices.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn contracta_is_contractible(
    g: *const ContractaGraph,
    u: size_t,
    v: size_t,
    out: *mut bool,
) -> ContractaStatus {
    guard(|| {
        let Some(graph) = graph_ref(g) else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        match contracta::is_contractible(graph, u, v) {
            Ok(b) => {
                *out = b;
                ContractaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Full classification as a JSON object with fields `n`, `kappa`,
/// `nonEdgeCount`, `contractible` and `tags`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result
/// with [`contracta_string_free`].
#[no_mangle]
pub unsafe extern "C" fn contracta_classify_json(g: *const ContractaGraph, out: *mut *mut c_char) -> ContractaStatus {
    guard(|| {
        let Some(graph) = graph_ref(g) else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        match classify(graph) {
            Ok(c) => match serde_json::to_string(&c) {
                Ok(s) => into_c_string(s, out),
                Err(e) => {
                    set_error(e.to_string());
                    ContractaStatus::Internal
                }
            },
            Err(e) => fail(e),
        }
    })
}

/// graph6 string of the canonical form.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result
/// with [`contracta_string_free`].
#[no_mangle]
pub unsafe extern "C" fn contracta_canonical_graph6(
    g: *const ContractaGraph,
    out: *mut *mut c_char,
) -> ContractaStatus {
    guard(|| {
        let Some(graph) = graph_ref(g) else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        into_c_string(String::from_utf8_lossy(&contracta::canonical_form(graph).bytes).into_owned(), out)
    })
}

/// # Safety
/// `g` and `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn contracta_are_isomorphic(
    g: *const ContractaGraph,
    h: *const ContractaGraph,
    out: *mut bool,
) -> ContractaStatus {
    guard(|| {
        let (Some(a), Some(b)) = (graph_ref(g), graph_ref(h)) else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        *out = contracta::are_isomorphic(a, b);
        ContractaStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn contracta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn contracta_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn contracta_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
