//! C ABI over `mcbrick`.
//!
//! Graphs are opaque `McGraph` handles created by `mc_graph_from_edges` or
//! `mc_graph_from_graph6` and released with `mc_graph_free`. Every other
//! function returns an `McStatus`; results go through out-pointers. On a
//! non-OK status, `mc_last_error` describes the failure for the calling
//! thread. Strings returned by the library are freed with
//! `mc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use mcbrick::graph::{emit_graph6, parse_graph6};
use mcbrick::{Error, Multigraph};

/// Opaque graph handle.
pub struct McGraph {
    graph: Multigraph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    TooLarge = 4,
    NotMatchingCovered = 5,
    Precondition = 6,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> McStatus {
    match e {
        Error::Graph6(_) | Error::Parse { .. } => McStatus::Parse,
        Error::TooLarge { .. } => McStatus::TooLarge,
        Error::NotMatchingCovered => McStatus::NotMatchingCovered,
        Error::Loop { .. }
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateEdge(_)
        | Error::UnknownEdge(_)
        | Error::InvalidVertexSet(_) => McStatus::InvalidArgument,
        _ => McStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<(), McStatus> + UnwindSafe) -> McStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => McStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            McStatus::Panic
        }
    }
}

fn fail(e: Error) -> McStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> McStatus {
    set_last_error(&format!("{what} is null"));
    McStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const McGraph) -> Result<&'a Multigraph, McStatus> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), McStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_handle(graph: Multigraph) -> *mut McGraph {
    Box::into_raw(Box::new(McGraph { graph }))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings have no nul bytes").into_raw()
}

/// Message describing the last failure on this thread. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn mc_status_message(status: McStatus) -> *const c_char {
    let s: &'static CStr = match status {
        McStatus::Ok => c"ok",
        McStatus::NullPointer => c"null pointer",
        McStatus::InvalidArgument => c"invalid argument",
        McStatus::Parse => c"parse error",
        McStatus::TooLarge => c"graph too large",
        McStatus::NotMatchingCovered => c"graph is not matching covered",
        McStatus::Precondition => c"precondition violated",
        McStatus::BufferTooSmall => c"buffer too small",
        McStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Builds a graph on `n` vertices from `edge_count` endpoint pairs stored
/// flat in `endpoints` (`2 * edge_count` entries). Edge `i` gets id `i`.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values (or may be
/// null when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_from_edges(
    n: usize,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut McGraph,
) -> McStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let graph = Multigraph::build(n, &pairs).map_err(fail)?;
        write_out(out, into_handle(graph))
    })
}

/// Parses one graph6 string (an optional `>>graph6<<` header is allowed).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut McGraph,
) -> McStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_last_error("graph6 text is not UTF-8");
            McStatus::Parse
        })?;
        let graph = parse_graph6(s).map_err(fail)?;
        write_out(out, into_handle(graph))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_free(g: *mut McGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_vertex_count(g: *const McGraph, out: *mut usize) -> McStatus {
    guard(|| write_out(out, graph_ref(g)?.vertex_count()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_edge_count(g: *const McGraph, out: *mut usize) -> McStatus {
    guard(|| write_out(out, graph_ref(g)?.edge_count()))
}

/// graph6 encoding; fails for graphs with parallel edges.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_graph_to_graph6(g: *const McGraph, out: *mut *mut c_char) -> McStatus {
    guard(|| {
        let s = emit_graph6(graph_ref(g)?).map_err(fail)?;
        write_out(out, to_c_string(s))
    })
}

unsafe fn predicate(
    g: *const McGraph,
    out: *mut bool,
    f: impl FnOnce(&Multigraph) -> Result<bool, Error> + UnwindSafe,
) -> McStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let value = f(graph).map_err(fail)?;
        write_out(out, value)
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_is_matching_covered(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, |g| Ok(mcbrick::structure::is_matching_covered(g)))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_is_brick(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, |g| Ok(mcbrick::structure::is_brick(g)))
}

/// Fails with `TooLarge` above 16 vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_is_brace(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, mcbrick::structure::is_brace)
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_is_near_bipartite(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, |g| Ok(mcbrick::nearbip::is_near_bipartite(g)))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_is_triladder(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, |g| Ok(mcbrick::triladder::is_triladder(g)))
}

/// Whether a 3-connected cubic graph has a 3-cut decomposition into K4s.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_has_k4_decomposition(g: *const McGraph, out: *mut bool) -> McStatus {
    predicate(g, out, |g| {
        mcbrick::triladder::k4_decomposition(g).map(|t| t.is_some())
    })
}

unsafe fn write_buffer(
    values: &[u32],
    buffer: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> Result<(), McStatus> {
    write_out(len, values.len())?;
    if values.len() > capacity {
        set_last_error(&format!("need room for {} values", values.len()));
        return Err(McStatus::BufferTooSmall);
    }
    if !values.is_empty() {
        if buffer.is_null() {
            return Err(null("buffer"));
        }
        std::ptr::copy_nonoverlapping(values.as_ptr(), buffer, values.len());
    }
    Ok(())
}

/// Writes the ids of the removable edges, ascending, into `ids`. `len`
/// receives the count; when it exceeds `capacity` nothing is copied and
/// `BufferTooSmall` is returned.
///
/// # Safety
/// `g` must be a live handle, `ids` writable for `capacity` values, `len`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mc_removable_edges(
    g: *const McGraph,
    ids: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> McStatus {
    guard(|| {
        let removable = mcbrick::structure::removable_edges(graph_ref(g)?).map_err(fail)?;
        let values: Vec<u32> = removable.iter().map(|e| e.0 as u32).collect();
        write_buffer(&values, ids, capacity, len)
    })
}

/// Writes the removable doubletons as flat id pairs into `pairs`
/// (`2 * capacity` slots). `len` receives the number of pairs.
///
/// # Safety
/// `g` must be a live handle, `pairs` writable for `2 * capacity` values,
/// `len` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_removable_doubletons(
    g: *const McGraph,
    pairs: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> McStatus {
    guard(|| {
        let doubletons = mcbrick::structure::removable_doubletons(graph_ref(g)?).map_err(fail)?;
        let flat: Vec<u32> = doubletons
            .iter()
            .flat_map(|(a, b)| [a.0 as u32, b.0 as u32])
            .collect();
        write_out(len, doubletons.len())?;
        if doubletons.len() > capacity {
            set_last_error(&format!("need room for {} pairs", doubletons.len()));
            return Err(McStatus::BufferTooSmall);
        }
        let mut ignored = 0usize;
        write_buffer(&flat, pairs, 2 * capacity, &mut ignored)
    })
}

/// The full analysis report as a JSON document.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mc_analyze_json(g: *const McGraph, out: *mut *mut c_char) -> McStatus {
    guard(|| {
        let report = mcbrick::cli::analyze(graph_ref(g)?, 1).map_err(fail)?;
        let json = serde_json::to_string(&report).expect("report serializes");
        write_out(out, to_c_string(json))
    })
}
