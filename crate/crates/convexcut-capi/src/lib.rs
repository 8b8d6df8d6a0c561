//! C ABI for the convex-cut library.
//!
//! Every function here is exported with C linkage and declared in the
//! generated `include/convexcut.h` header.  Graphs and cut lists are opaque
//! handles allocated by this library and released with the matching `_free`
//! call.  Fallible calls return a [`CcStatus`]; on failure a human-readable
//! message is stored for [`cc_last_error`].
//!
//! Handles are immutable after creation and may be shared across threads.
//! The error message is thread-local, so concurrent callers never see each
//! other's failures.

use convexcut::bipartite::{bipartite_convex_cuts, BipartiteOptions};
use convexcut::cuts::Cut;
use convexcut::embedding::{trace_faces, PlaneEmbedding};
use convexcut::graph::Graph;
use convexcut::io::parse_graph;
use convexcut::oracle::enumerate_convex_cuts;
use convexcut::plane::{plane_convex_cuts, PlaneCutsError, PlaneOptions};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CcStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text or edge list could not be turned into a graph.
    ParseError = 3,
    /// The graph lacks a property the call requires (for example it is
    /// not bipartite, not two-connected, or a verification failed).
    PropertyError = 4,
    /// A configured resource cap was exceeded.
    ResourceLimit = 5,
    /// An argument was outside the supported range.
    OutOfRange = 6,
    /// The call needs a plane embedding but the graph has none.
    MissingEmbedding = 7,
    /// The library failed internally; please report the input.
    InternalError = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("nul bytes removed");
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::default();
    });
}

fn fail(status: CcStatus, message: &str) -> CcStatus {
    set_error(message);
    status
}

/// Runs a body that may touch library internals, converting panics into
/// [`CcStatus::InternalError`] instead of unwinding across the C boundary.
fn guarded(body: impl FnOnce() -> CcStatus) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(CcStatus::InternalError, "internal panic"),
    }
}

/// An immutable graph, optionally carrying a plane embedding.
pub struct CcGraph {
    graph: Graph,
    embedding: Option<PlaneEmbedding>,
}

struct CutEntry {
    edges: Vec<u32>,
    side: Vec<u32>,
    other: Vec<u32>,
    cyclic: i32,
}

/// An immutable list of convex cuts.
pub struct CcCuts {
    cuts: Vec<CutEntry>,
}

fn cut_entry(cut: &Cut, cyclic: Option<bool>) -> CutEntry {
    CutEntry {
        edges: cut.edges().iter().map(|&e| e as u32).collect(),
        side: cut.side_vertices(true).iter().map(|&v| v as u32).collect(),
        other: cut.side_vertices(false).iter().map(|&v| v as u32).collect(),
        cyclic: match cyclic {
            Some(true) => 1,
            Some(false) => 0,
            None => -1,
        },
    }
}

unsafe fn hand_over<T>(out: *mut *mut T, value: T) -> CcStatus {
    *out = Box::into_raw(Box::new(value));
    clear_error();
    CcStatus::Ok
}

/// Returns the library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns the message of the last failure on this thread, or an empty
/// string.  The pointer stays valid until the next failing call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a graph from the text format (`graph`/`edge` lines, optional
/// `rot` and `outer` lines).  When rotation lines are present the graph
/// carries a plane embedding and can be passed to [`cc_cuts_plane`].
///
/// # Safety
/// `text` must point to a nul-terminated string and `out` must be a valid
/// location for one pointer.  On success `*out` owns the graph and must be
/// released with [`cc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_graph_parse(text: *const c_char, out: *mut *mut CcGraph) -> CcStatus {
    if text.is_null() || out.is_null() {
        return fail(CcStatus::NullArgument, "text and out must be non-null");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(_) => return fail(CcStatus::InvalidUtf8, "input text is not valid UTF-8"),
    };
    guarded(|| {
        let parsed = match parse_graph(text) {
            Ok(parsed) => parsed,
            Err(e) => return fail(CcStatus::ParseError, &e.to_string()),
        };
        let embedding = match parsed.rotation {
            Some(rotation) => match trace_faces(&parsed.graph, rotation, parsed.outer.as_deref()) {
                Ok(emb) => Some(emb),
                Err(e) => return fail(CcStatus::ParseError, &e.to_string()),
            },
            None => None,
        };
        hand_over(
            out,
            CcGraph {
                graph: parsed.graph,
                embedding,
            },
        )
    })
}

/// Builds a graph from an endpoint array: edge `i` joins `endpoints[2*i]`
/// and `endpoints[2*i + 1]`.  The graph carries no plane embedding.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable integers (it may be
/// null only when `edge_count` is zero) and `out` must be a valid location
/// for one pointer.  On success `*out` must be released with
/// [`cc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_graph_from_edges(
    vertex_count: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut CcGraph,
) -> CcStatus {
    if out.is_null() || (endpoints.is_null() && edge_count > 0) {
        return fail(CcStatus::NullArgument, "endpoints and out must be non-null");
    }
    let flat: &[u32] = if edge_count == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(endpoints, 2 * edge_count)
    };
    guarded(|| {
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|pair| (pair[0] as usize, pair[1] as usize))
            .collect();
        match Graph::new(vertex_count as usize, &pairs) {
            Ok(graph) => hand_over(
                out,
                CcGraph {
                    graph,
                    embedding: None,
                },
            ),
            Err(e) => fail(CcStatus::ParseError, &e.to_string()),
        }
    })
}

/// Returns the number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_vertex_count(g: *const CcGraph) -> u32 {
    match g.as_ref() {
        Some(g) => g.graph.vertex_count() as u32,
        None => 0,
    }
}

/// Returns the number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_edge_count(g: *const CcGraph) -> u32 {
    match g.as_ref() {
        Some(g) => g.graph.edge_count() as u32,
        None => 0,
    }
}

/// True when the graph carries a plane embedding.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_has_embedding(g: *const CcGraph) -> bool {
    matches!(g.as_ref(), Some(g) if g.embedding.is_some())
}

/// Releases a graph handle.  Null is ignored.
///
/// # Safety
/// `g` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_free(g: *mut CcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Enumerates all convex cuts of a connected bipartite graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid location for one
/// pointer.  On success `*out` must be released with [`cc_cuts_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_bipartite(g: *const CcGraph, out: *mut *mut CcCuts) -> CcStatus {
    let Some(g) = g.as_ref() else {
        return fail(CcStatus::NullArgument, "graph must be non-null");
    };
    if out.is_null() {
        return fail(CcStatus::NullArgument, "out must be non-null");
    }
    guarded(
        || match bipartite_convex_cuts(&g.graph, BipartiteOptions::default()) {
            Ok(found) => {
                let cuts = found.cuts.iter().map(|c| cut_entry(c, None)).collect();
                hand_over(out, CcCuts { cuts })
            }
            Err(e) => fail(CcStatus::PropertyError, &e.to_string()),
        },
    )
}

/// Enumerates all convex cuts of a two-connected plane graph.  The graph
/// must carry an embedding (see [`cc_graph_parse`]).  `max_frontier` caps
/// the number of queued walk states; pass 0 for the default of 1,000,000.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid location for one
/// pointer.  On success `*out` must be released with [`cc_cuts_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_plane(
    g: *const CcGraph,
    max_frontier: usize,
    out: *mut *mut CcCuts,
) -> CcStatus {
    let Some(g) = g.as_ref() else {
        return fail(CcStatus::NullArgument, "graph must be non-null");
    };
    if out.is_null() {
        return fail(CcStatus::NullArgument, "out must be non-null");
    }
    let Some(emb) = g.embedding.as_ref() else {
        return fail(
            CcStatus::MissingEmbedding,
            "the graph has no plane embedding; parse it with rot lines",
        );
    };
    guarded(|| {
        let options = PlaneOptions {
            strict_verify: true,
            max_frontier: if max_frontier == 0 {
                1_000_000
            } else {
                max_frontier
            },
        };
        match plane_convex_cuts(&g.graph, emb, options) {
            Ok(found) => {
                let cuts = found
                    .cuts
                    .iter()
                    .map(|pc| cut_entry(&pc.cut, Some(pc.cyclic)))
                    .collect();
                hand_over(out, CcCuts { cuts })
            }
            Err(e @ PlaneCutsError::FrontierCapExceeded { .. }) => {
                fail(CcStatus::ResourceLimit, &e.to_string())
            }
            Err(e) => fail(CcStatus::PropertyError, &e.to_string()),
        }
    })
}

/// Enumerates all convex cuts of any connected graph by exhaustive search.
/// Supports at most 16 vertices.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid location for one
/// pointer.  On success `*out` must be released with [`cc_cuts_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_exhaustive(g: *const CcGraph, out: *mut *mut CcCuts) -> CcStatus {
    let Some(g) = g.as_ref() else {
        return fail(CcStatus::NullArgument, "graph must be non-null");
    };
    if out.is_null() {
        return fail(CcStatus::NullArgument, "out must be non-null");
    }
    if g.graph.vertex_count() > 16 {
        return fail(
            CcStatus::OutOfRange,
            "exhaustive enumeration supports at most 16 vertices",
        );
    }
    guarded(|| {
        let cuts = enumerate_convex_cuts(&g.graph)
            .iter()
            .map(|c| cut_entry(c, None))
            .collect();
        hand_over(out, CcCuts { cuts })
    })
}

/// Returns the number of cuts, or 0 for a null handle.
///
/// # Safety
/// `cuts` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_count(cuts: *const CcCuts) -> usize {
    match cuts.as_ref() {
        Some(cuts) => cuts.cuts.len(),
        None => 0,
    }
}

unsafe fn list_field(
    cuts: *const CcCuts,
    index: usize,
    len: *mut usize,
    pick: impl Fn(&CutEntry) -> &Vec<u32>,
) -> *const u32 {
    let entry = cuts.as_ref().and_then(|c| c.cuts.get(index));
    let (ptr, n) = match entry {
        Some(entry) => {
            let list = pick(entry);
            (list.as_ptr(), list.len())
        }
        None => (std::ptr::null(), 0),
    };
    if !len.is_null() {
        *len = n;
    }
    ptr
}

/// Returns the edge ids of one cut, writing the length through `len`.
/// The pointer stays valid until the handle is freed; a null return means
/// the index was out of range.
///
/// # Safety
/// `cuts` must be null or a live handle; `len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_edges(
    cuts: *const CcCuts,
    index: usize,
    len: *mut usize,
) -> *const u32 {
    list_field(cuts, index, len, |entry| &entry.edges)
}

/// Returns the vertices of one side of a cut, writing the length through
/// `len`.  Same lifetime rules as [`cc_cuts_edges`].
///
/// # Safety
/// `cuts` must be null or a live handle; `len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_side(
    cuts: *const CcCuts,
    index: usize,
    len: *mut usize,
) -> *const u32 {
    list_field(cuts, index, len, |entry| &entry.side)
}

/// Returns the vertices of the other side of a cut, writing the length
/// through `len`.  Same lifetime rules as [`cc_cuts_edges`].
///
/// # Safety
/// `cuts` must be null or a live handle; `len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_other_side(
    cuts: *const CcCuts,
    index: usize,
    len: *mut usize,
) -> *const u32 {
    list_field(cuts, index, len, |entry| &entry.other)
}

/// Returns 1 when the cut-set corresponds to a closed alternating walk,
/// 0 when it does not, and -1 when the notion does not apply (the cuts
/// did not come from the plane enumeration) or the index is out of range.
///
/// # Safety
/// `cuts` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_is_cyclic(cuts: *const CcCuts, index: usize) -> i32 {
    match cuts.as_ref().and_then(|c| c.cuts.get(index)) {
        Some(entry) => entry.cyclic,
        None => -1,
    }
}

/// Releases a cut-list handle.  Null is ignored.
///
/// # Safety
/// `cuts` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_cuts_free(cuts: *mut CcCuts) {
    if !cuts.is_null() {
        drop(Box::from_raw(cuts));
    }
}
