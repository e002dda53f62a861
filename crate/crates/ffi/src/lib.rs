//! C interface to the sepdepth solver.
//!
//! Graphs and decompositions are opaque handles released with their `_free`
//! function. Every fallible call returns an [`SdStatus`]; the message for the
//! last failure on the calling thread is available from [`sd_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sepdepth::pace::{parse_gr, write_tree};
use sepdepth::{
    enumerate_minimal_separators, treedepth, treewidth_lower, treewidth_upper,
    verify_treedepth_decomposition, Error, Graph, Pruning, SolveConfig, TreedepthDecomposition,
    TwMode,
};

#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    /// Malformed input or a domain error.
    Input = 1,
    /// Budget or memo limit exceeded.
    Budget = 2,
    /// The decomposition failed verification.
    Verify = 3,
    /// A required pointer was null.
    Null = 4,
    /// The library panicked; this is a bug.
    Panic = 5,
}

pub const SD_PRUNE_TWO_TW: i32 = 0;
pub const SD_PRUNE_NONE: i32 = 1;
pub const SD_TW_EXACT: i32 = 0;
pub const SD_TW_HEURISTIC: i32 = 1;

/// Opaque graph handle.
pub struct SdGraph(Graph);

/// Opaque treedepth decomposition handle.
pub struct SdTreedepth(TreedepthDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: SdStatus, msg: impl Into<String>) -> SdStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SdStatus {
    let status = match e {
        Error::Budget { .. } | Error::MemoLimit { .. } => SdStatus::Budget,
        _ => SdStatus::Input,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SdStatus) -> SdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SdStatus::Panic, "internal panic"))
}

/// Message for the last failure on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `count` edges given as `2 * count`
/// zero-based endpoints.
///
/// # Safety
/// `edges` must point to `2 * count` readable values (it may be null when
/// `count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_new(
    n: usize,
    edges: *const usize,
    count: usize,
    out: *mut *mut SdGraph,
) -> SdStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && count > 0) {
            return fail(SdStatus::Null, "null pointer");
        }
        let flat: &[usize] = if count == 0 {
            &[]
        } else {
            // SAFETY: caller provides 2 * count readable values
            unsafe { std::slice::from_raw_parts(edges, 2 * count) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => {
                // SAFETY: checked non-null above
                unsafe { *out = Box::into_raw(Box::new(SdGraph(g))) };
                SdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses a NUL-terminated `.gr` document.
///
/// # Safety
/// `text` must be a valid C string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_gr(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(SdStatus::Null, "null pointer");
        }
        // SAFETY: caller provides a valid C string
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            return fail(SdStatus::Input, "input is not UTF-8");
        };
        match parse_gr(text) {
            Ok(doc) => {
                // SAFETY: checked non-null above
                unsafe { *out = Box::into_raw(Box::new(SdGraph(doc.to_graph()))) };
                SdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_free(g: *mut SdGraph) {
    if !g.is_null() {
        // SAFETY: handle came from Box::into_raw
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_vertex_count(g: *const SdGraph) -> usize {
    // SAFETY: caller provides a live handle or null
    unsafe { g.as_ref() }.map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_edge_count(g: *const SdGraph) -> usize {
    // SAFETY: caller provides a live handle or null
    unsafe { g.as_ref() }.map_or(0, |g| g.0.edge_count())
}

/// Exact treedepth. `prune` is `SD_PRUNE_TWO_TW` or `SD_PRUNE_NONE`,
/// `tw_mode` is `SD_TW_EXACT` or `SD_TW_HEURISTIC`.
///
/// # Safety
/// `g` must be a live graph handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_solve(
    g: *const SdGraph,
    prune: i32,
    tw_mode: i32,
    out: *mut *mut SdTreedepth,
) -> SdStatus {
    guard(|| {
        // SAFETY: caller provides a live handle or null
        let Some(g) = (unsafe { g.as_ref() }) else {
            return fail(SdStatus::Null, "null graph");
        };
        if out.is_null() {
            return fail(SdStatus::Null, "null output");
        }
        let pruning = match prune {
            SD_PRUNE_TWO_TW => Pruning::TwoTw,
            SD_PRUNE_NONE => Pruning::None,
            other => return fail(SdStatus::Input, format!("unknown pruning mode {other}")),
        };
        let tw_mode = match tw_mode {
            SD_TW_EXACT => TwMode::ExactWithinBudget,
            SD_TW_HEURISTIC => TwMode::HeuristicOnly,
            other => return fail(SdStatus::Input, format!("unknown treewidth mode {other}")),
        };
        let cfg = SolveConfig {
            pruning,
            tw_mode,
            ..SolveConfig::default()
        };
        match treedepth(&g.0, &cfg) {
            Ok(sol) => {
                // SAFETY: checked non-null above
                unsafe { *out = Box::into_raw(Box::new(SdTreedepth(sol.decomposition))) };
                SdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `t` must be null or a decomposition handle from this library that was not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_treedepth_free(t: *mut SdTreedepth) {
    if !t.is_null() {
        // SAFETY: handle came from Box::into_raw
        drop(unsafe { Box::from_raw(t) });
    }
}

/// Height of the decomposition; 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn sd_treedepth_depth(t: *const SdTreedepth) -> usize {
    // SAFETY: caller provides a live handle or null
    unsafe { t.as_ref() }.map_or(0, |t| t.0.height)
}

/// Writes 1-based parents (0 for roots) into `buf`, which must hold one
/// entry per vertex.
///
/// # Safety
/// `t` must be a live decomposition handle and `buf` must have `len`
/// writable entries.
#[no_mangle]
pub unsafe extern "C" fn sd_treedepth_parents(
    t: *const SdTreedepth,
    buf: *mut usize,
    len: usize,
) -> SdStatus {
    guard(|| {
        // SAFETY: caller provides a live handle or null
        let Some(t) = (unsafe { t.as_ref() }) else {
            return fail(SdStatus::Null, "null decomposition");
        };
        let n = t.0.parent.len();
        if n > 0 && buf.is_null() {
            return fail(SdStatus::Null, "null buffer");
        }
        if len < n {
            return fail(
                SdStatus::Input,
                format!("buffer holds {len} entries, need {n}"),
            );
        }
        for (v, p) in t.0.parent.iter().enumerate() {
            // SAFETY: v < n <= len
            unsafe { *buf.add(v) = p.map_or(0, |p| p + 1) };
        }
        SdStatus::Ok
    })
}

/// Tree document text; release it with [`sd_string_free`]. Null on a null
/// handle.
///
/// # Safety
/// `t` must be null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn sd_treedepth_to_string(t: *const SdTreedepth) -> *mut c_char {
    // SAFETY: caller provides a live handle or null
    match unsafe { t.as_ref() } {
        Some(t) => CString::new(write_tree(&t.0)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library that was not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: string came from CString::into_raw
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Minimum-degree lower bound and min-fill upper bound on treewidth.
///
/// # Safety
/// `g` must be a live graph handle; `lower` and `upper` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_treewidth_bounds(
    g: *const SdGraph,
    lower: *mut isize,
    upper: *mut isize,
) -> SdStatus {
    guard(|| {
        // SAFETY: caller provides a live handle or null
        let Some(g) = (unsafe { g.as_ref() }) else {
            return fail(SdStatus::Null, "null graph");
        };
        if lower.is_null() || upper.is_null() {
            return fail(SdStatus::Null, "null output");
        }
        // SAFETY: checked non-null above
        unsafe {
            *lower = treewidth_lower(&g.0);
            *upper = treewidth_upper(&g.0).0;
        }
        SdStatus::Ok
    })
}

/// Number of minimal separators with at most `max_size` vertices; pass
/// `SIZE_MAX` for no bound.
///
/// # Safety
/// `g` must be a live graph handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_minimal_separators_count(
    g: *const SdGraph,
    max_size: usize,
    out: *mut usize,
) -> SdStatus {
    guard(|| {
        // SAFETY: caller provides a live handle or null
        let Some(g) = (unsafe { g.as_ref() }) else {
            return fail(SdStatus::Null, "null graph");
        };
        if out.is_null() {
            return fail(SdStatus::Null, "null output");
        }
        let bound = (max_size != usize::MAX).then_some(max_size);
        // SAFETY: checked non-null above
        unsafe { *out = enumerate_minimal_separators(&g.0, bound).len() };
        SdStatus::Ok
    })
}

/// Checks 1-based `parents` (0 for roots) as a treedepth decomposition of
/// `g`. Returns `Ok` if valid and `Verify` otherwise; the recomputed height
/// is written to `height` in both cases (0 if the parents form a cycle).
///
/// # Safety
/// `g` must be a live graph handle, `parents` must have `len` readable
/// entries and `height` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_verify_tree(
    g: *const SdGraph,
    parents: *const usize,
    len: usize,
    height: *mut usize,
) -> SdStatus {
    guard(|| {
        // SAFETY: caller provides a live handle or null
        let Some(g) = (unsafe { g.as_ref() }) else {
            return fail(SdStatus::Null, "null graph");
        };
        if height.is_null() || (parents.is_null() && len > 0) {
            return fail(SdStatus::Null, "null pointer");
        }
        let raw: &[usize] = if len == 0 {
            &[]
        } else {
            // SAFETY: caller provides len readable entries
            unsafe { std::slice::from_raw_parts(parents, len) }
        };
        if raw.iter().any(|&p| p > len) {
            return fail(SdStatus::Input, "parent index out of range");
        }
        let t = TreedepthDecomposition {
            parent: raw.iter().map(|&p| p.checked_sub(1)).collect(),
            height: 0,
        };
        match verify_treedepth_decomposition(&g.0, &t) {
            Ok((valid, h)) => {
                // SAFETY: checked non-null above
                unsafe { *height = h };
                if valid {
                    SdStatus::Ok
                } else {
                    fail(SdStatus::Verify, "not a treedepth decomposition")
                }
            }
            Err(e) => from_error(e),
        }
    })
}
