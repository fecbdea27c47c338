//! C ABI over `signdom`.
//!
//! Graphs cross the boundary as opaque `SdGraph` handles owned by the caller
//! and released with [`sd_graph_free`]. Every fallible call returns an
//! [`SdStatus`]; on failure a description is available from
//! [`sd_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters must be released with [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use signdom::bounds::{bound_report, BoundKind};
use signdom::solver::{self, Algorithm, BnbOptions, Mode, SignAssignment};
use signdom::{generators, Error, Graph};

/// Opaque graph handle.
pub struct SdGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Parameter = 5,
    KOutOfRange = 6,
    BruteForceCap = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdMode {
    /// f(N[v]) >= 0
    Nonneg = 0,
    /// f(N[v]) >= 1
    Signed = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdAlgorithm {
    Auto = 0,
    Brute = 1,
    Bnb = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdBound {
    PriorHalfn = 0,
    PriorDeltaceil = 1,
    PriorHua = 2,
    Nn1 = 3,
    Nn2 = 4,
    Nn3 = 5,
    Nn4 = 6,
    Nn5 = 7,
    Ksub1 = 8,
    Ksub2 = 9,
    Regular = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdDegreeProfile {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub even_count: usize,
    pub odd_count: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdSolveResult {
    pub optimum: i64,
    pub satisfied_count: usize,
    pub nodes: u64,
    pub prunes_weight: u64,
    pub prunes_satisfiability: u64,
    pub prunes_global_bound: u64,
}

/// Exact rational bound `numerator / denominator` (denominator > 0) with its
/// integer ceiling and parity lift.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdBoundValue {
    pub numerator: i64,
    pub denominator: i64,
    pub ceil: i64,
    pub parity_lifted: i64,
    pub applicable: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Parse { .. } => SdStatus::Parse,
        Error::Validation(_) | Error::AssignmentLength { .. } => SdStatus::Validation,
        Error::KOutOfRange { .. } | Error::EmptyGraph => SdStatus::KOutOfRange,
        Error::BruteForceCap { .. } => SdStatus::BruteForceCap,
        Error::Parameter(_) | Error::NotRegular => SdStatus::Parameter,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (SdStatus, String)>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SdStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SdStatus, String) {
    (SdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (SdStatus, String)> {
    if text.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| (SdStatus::InvalidUtf8, e.to_string()))
}

unsafe fn graph_ref<'a>(graph: *const SdGraph) -> Result<&'a Graph, (SdStatus, String)> {
    graph.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn store_graph(out: *mut *mut SdGraph, g: Result<Graph, Error>) -> Result<(), (SdStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let g = g.map_err(lib_err)?;
    *out = Box::into_raw(Box::new(SdGraph { inner: g }));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), (SdStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|e| (SdStatus::Validation, e.to_string()))?
        .into_raw();
    Ok(())
}

fn mode_of(mode: SdMode) -> Mode {
    match mode {
        SdMode::Nonneg => Mode::Nonneg,
        SdMode::Signed => Mode::Signed,
    }
}

/// Message for the last failed call on this thread ("" after a success).
/// The pointer stays valid until the next `sd_*` call on this thread.
#[no_mangle]
pub extern "C" fn sd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses 0-based `u v` lines (`#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_edge_list(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, Ok(read_str(text)?).and_then(signdom::parse_edge_list)))
}

/// Parses DIMACS `p edge n m` / `e u v` text with 1-based ids.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_dimacs(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, Ok(read_str(text)?).and_then(signdom::parse_dimacs)))
}

/// Builds a graph from `edge_count` pairs laid out as `u0 v0 u1 v1 ...`.
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable values (may be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_edges(
    order: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut SdGraph,
) -> SdStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        store_graph(out, Graph::from_edges(order, flat.chunks_exact(2).map(|c| (c[0], c[1]))))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_complete(n: usize, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, Ok(generators::complete(n))))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_cycle(n: usize, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, generators::cycle(n)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_path(n: usize, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, Ok(generators::path(n))))
}

/// 2t-cycle with one extra vertex on every edge (order 4t).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_sun(t: usize, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, generators::sun(t)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_hajos(out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, Ok(generators::hajos())))
}

/// # Safety
/// `offsets` must point to `offset_count` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_circulant(
    n: usize,
    offsets: *const usize,
    offset_count: usize,
    out: *mut *mut SdGraph,
) -> SdStatus {
    guard(|| {
        let offsets: &[usize] = if offset_count == 0 {
            &[]
        } else if offsets.is_null() {
            return Err(null("offsets"));
        } else {
            std::slice::from_raw_parts(offsets, offset_count)
        };
        store_graph(out, generators::circulant(n, offsets))
    })
}

/// Seeded G(n, p); identical arguments give identical graphs.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_gnp(n: usize, p: f64, seed: u64, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| store_graph(out, generators::gnp(n, p, seed)))
}

/// # Safety
/// `graph` must be null or a handle from an `sd_graph_*` constructor that
/// has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_free(graph: *mut SdGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_order(graph: *const SdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_size(graph: *const SdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.size())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_is_connected(graph: *const SdGraph) -> bool {
    graph.as_ref().is_some_and(|g| g.inner.is_connected())
}

/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_degree_profile(graph: *const SdGraph, out: *mut SdDegreeProfile) -> SdStatus {
    guard(|| {
        let p = graph_ref(graph)?.degree_profile();
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = SdDegreeProfile {
            n: p.n,
            m: p.m,
            min_degree: p.min_degree,
            max_degree: p.max_degree,
            even_count: p.even_count,
            odd_count: p.odd_count,
        };
        Ok(())
    })
}

/// Canonical edge-list (`dimacs == false`) or DIMACS text.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable. Free the result
/// with `sd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_serialize(graph: *const SdGraph, dimacs: bool, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        store_string(out, if dimacs { g.to_dimacs() } else { g.to_edge_list() })
    })
}

/// Exact minimum weight over functions satisfying at least `k` vertices.
///
/// `workers == 1` gives the canonical witness; `brute_cap` bounds the
/// brute-force order (0 selects the default). When `witness_out` is non-null
/// it receives one sign (+1/−1) per vertex.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable; `witness_out`
/// must be null or point to `sd_graph_order(graph)` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sd_solve(
    graph: *const SdGraph,
    k: usize,
    mode: SdMode,
    algorithm: SdAlgorithm,
    brute_cap: usize,
    workers: usize,
    out: *mut SdSolveResult,
    witness_out: *mut i8,
) -> SdStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let algorithm = match algorithm {
            SdAlgorithm::Auto => Algorithm::Auto,
            SdAlgorithm::Brute => Algorithm::Brute,
            SdAlgorithm::Bnb => Algorithm::Bnb,
        };
        let cap = if brute_cap == 0 { solver::DEFAULT_BRUTE_CAP } else { brute_cap };
        let opts = BnbOptions {
            workers: workers.max(1),
            ..BnbOptions::default()
        };
        let r = solver::solve(g, k, mode_of(mode), algorithm, cap, opts).map_err(lib_err)?;
        *out = SdSolveResult {
            optimum: r.optimum,
            satisfied_count: r.satisfied_count,
            nodes: r.stats.nodes,
            prunes_weight: r.stats.prunes_weight,
            prunes_satisfiability: r.stats.prunes_satisfiability,
            prunes_global_bound: r.stats.prunes_global_bound,
        };
        if !witness_out.is_null() {
            let dst = std::slice::from_raw_parts_mut(witness_out, g.order());
            dst.copy_from_slice(r.witness.values());
        }
        Ok(())
    })
}

/// Weight and satisfied-vertex count of a sign vector.
///
/// # Safety
/// `graph` must be a live handle; `signs` must point to `len` readable
/// values; `weight_out` and `satisfied_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_evaluate(
    graph: *const SdGraph,
    signs: *const i8,
    len: usize,
    mode: SdMode,
    weight_out: *mut i64,
    satisfied_out: *mut usize,
) -> SdStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if signs.is_null() && len > 0 {
            return Err(null("signs"));
        }
        let values = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(signs, len).to_vec() };
        let f = SignAssignment::new(values).map_err(lib_err)?;
        let e = solver::evaluate(g, &f, mode_of(mode)).map_err(lib_err)?;
        let weight_out = weight_out.as_mut().ok_or_else(|| null("weight_out"))?;
        let satisfied_out = satisfied_out.as_mut().ok_or_else(|| null("satisfied_out"))?;
        *weight_out = e.weight;
        *satisfied_out = e.satisfied_count;
        Ok(())
    })
}

/// One named bound at parameter `k`. `Regular` on a non-regular graph
/// reports `SD_STATUS_PARAMETER`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_bound(graph: *const SdGraph, k: usize, bound: SdBound, out: *mut SdBoundValue) -> SdStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let kind = BoundKind::ALL[bound as usize];
        let report = bound_report(g, k).map_err(lib_err)?;
        let v = report.get(kind).ok_or_else(|| lib_err(Error::NotRegular))?;
        *out = SdBoundValue {
            numerator: *v.raw.numer(),
            denominator: *v.raw.denom(),
            ceil: v.ceil,
            parity_lifted: v.parity_lifted,
            applicable: v.applicable,
        };
        Ok(())
    })
}

/// Full bound report as a JSON object with `bound.<name>.<field>` keys.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable. Free the result
/// with `sd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sd_bound_report_json(graph: *const SdGraph, k: usize, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let report = bound_report(g, k).map_err(lib_err)?;
        store_string(out, report.to_json().to_string())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
