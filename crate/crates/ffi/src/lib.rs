//! C interface to `chain-spectra`.
//!
//! Graphs are opaque [`CsGraph`] handles created by one of the
//! `cs_graph_*` constructors and released with [`cs_graph_free`]. Every
//! fallible function returns a [`CsStatus`]; on failure a description is
//! available from [`cs_last_error_message`] on the same thread.
//!
//! The header `include/chain_spectra.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chain_spectra::exact::{exact_multiplicity, QuadraticNumber, Rational};
use chain_spectra::graph::io::{parse_graph, write_graph};
use chain_spectra::graph::{half_graph, is_chain_graph, ChainGraphSpec, Graph};
use chain_spectra::spectra::graph_spectrum;
use chain_spectra::theorems::{downer_classify, eigenvalue_gap_check, verify_pattern_family, Eigenvalue, Mode, PatternFamily};
use chain_spectra::Tolerances;

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    BufferTooSmall = 4,
    NumericalFailure = 5,
    Panic = 6,
}

/// Opaque graph handle.
pub struct CsGraph {
    graph: Graph,
}

/// The number `a_num/a_den + (b_num/b_den)·√5`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CsQuadratic {
    pub a_num: i64,
    pub a_den: i64,
    pub b_num: i64,
    pub b_den: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CsStatus, String);

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const CsGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn store(out: *mut *mut CsGraph, graph: Graph) -> Result<(), Failure> {
    *out = Box::into_raw(Box::new(CsGraph { graph }));
    Ok(())
}

fn quadratic(q: &CsQuadratic) -> Result<QuadraticNumber, Failure> {
    if q.a_den == 0 || q.b_den == 0 {
        return Err(Failure(CsStatus::InvalidArgument, "lambda: denominator is zero".into()));
    }
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    Ok(QuadraticNumber::new(r(q.a_num, q.a_den), r(q.b_num, q.b_den)))
}

/// Builds the chain graph with cells `u_sizes[0..k]` and `v_sizes[0..k]`.
///
/// # Safety
/// `u_sizes` and `v_sizes` must point to `k` readable values and `out` to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_from_spec(
    u_sizes: *const usize,
    v_sizes: *const usize,
    k: usize,
    out: *mut *mut CsGraph,
) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if k > 0 && (u_sizes.is_null() || v_sizes.is_null()) {
            return Err(null("u_sizes or v_sizes"));
        }
        let (u, v) = if k == 0 {
            (Vec::new(), Vec::new())
        } else {
            (
                std::slice::from_raw_parts(u_sizes, k).to_vec(),
                std::slice::from_raw_parts(v_sizes, k).to_vec(),
            )
        };
        let spec = ChainGraphSpec::new(u, v).map_err(|e| Failure(CsStatus::InvalidGraph, e.to_string()))?;
        store(out, spec.build())
    })
}

/// Builds the half graph `H(k)`.
///
/// # Safety
/// `out` must point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_half(k: usize, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = half_graph(k).map_err(|e| Failure(CsStatus::InvalidGraph, e.to_string()))?;
        store(out, g)
    })
}

/// Parses a graph document (chain spec or edge list), NUL-terminated UTF-8.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_from_json(text: *const c_char, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(CsStatus::InvalidArgument, "text is not UTF-8".into()))?;
        let g = parse_graph(s).map_err(|e| Failure(CsStatus::InvalidGraph, e.to_string()))?;
        store(out, g)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `graph` must come from a `cs_graph_*` constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_free(graph: *mut CsGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_vertex_count(graph: *const CsGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.graph.n())
}

/// Writes the graph document into `buf` (NUL-terminated). `needed`, when
/// non-null, receives the required size including the terminator, also on
/// `BUFFER_TOO_SMALL`.
///
/// # Safety
/// `buf` must have room for `len` bytes (or be null with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn cs_graph_to_json(
    graph: *const CsGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let doc = write_graph(g);
        let size = doc.len() + 1;
        if !needed.is_null() {
            *needed = size;
        }
        if len < size || buf.is_null() {
            return Err(Failure(CsStatus::BufferTooSmall, format!("buffer needs {size} bytes")));
        }
        ptr::copy_nonoverlapping(doc.as_ptr(), buf.cast::<u8>(), doc.len());
        *buf.add(doc.len()) = 0;
        Ok(())
    })
}

/// Whether the graph is bipartite with nested neighborhoods.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_is_chain(graph: *const CsGraph, out: *mut bool) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_chain_graph(g);
        Ok(())
    })
}

/// Eigenvalues in descending order into `out[0..n]`.
///
/// # Safety
/// `out` must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_spectrum(graph: *const CsGraph, out: *mut f64, len: usize) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if len < g.n() {
            return Err(Failure(CsStatus::BufferTooSmall, format!("buffer needs {} entries", g.n())));
        }
        let s = graph_spectrum(g, &Tolerances::default())
            .map_err(|e| Failure(CsStatus::NumericalFailure, e.to_string()))?;
        ptr::copy_nonoverlapping(s.eigenvalues().as_ptr(), out, g.n());
        Ok(())
    })
}

/// Exact multiplicity of `lambda` as an eigenvalue.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_exact_multiplicity(graph: *const CsGraph, lambda: CsQuadratic, out: *mut usize) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = exact_multiplicity(g, &quadratic(&lambda)?);
        Ok(())
    })
}

/// `flags[v]` is set to 1 when `v` is downer for `lambda` and 0 otherwise,
/// decided by exact rank.
///
/// # Safety
/// `flags` must have room for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn cs_downer_flags(
    graph: *const CsGraph,
    lambda: CsQuadratic,
    flags: *mut u8,
    len: usize,
) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if flags.is_null() {
            return Err(null("flags"));
        }
        if len < g.n() {
            return Err(Failure(CsStatus::BufferTooSmall, format!("buffer needs {} entries", g.n())));
        }
        let report = downer_classify(g, &Eigenvalue::Exact(quadratic(&lambda)?), Mode::Exact, &Tolerances::default())
            .map_err(|e| Failure(CsStatus::NumericalFailure, e.to_string()))?;
        for v in &report.vertices {
            *flags.add(v.vertex) = u8::from(v.is_downer);
        }
        Ok(())
    })
}

/// Sets `ok` when no eigenvalue has `0 < |λ| < 1/2`. `closest`, when
/// non-null, receives the nonzero eigenvalue of least magnitude (NaN if
/// there is none).
///
/// # Safety
/// `ok` must be writable; `closest` may be null.
#[no_mangle]
pub unsafe extern "C" fn cs_gap_check(graph: *const CsGraph, ok: *mut bool, closest: *mut f64) -> CsStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if ok.is_null() {
            return Err(null("ok"));
        }
        let tol = Tolerances::default();
        let s = graph_spectrum(g, &tol).map_err(|e| Failure(CsStatus::NumericalFailure, e.to_string()))?;
        let r = eigenvalue_gap_check(&s, &tol);
        *ok = r.ok;
        if !closest.is_null() {
            *closest = r.closest_to_gap.unwrap_or(f64::NAN);
        }
        Ok(())
    })
}

/// Exact check of the periodic eigenvectors of half graphs for every
/// admissible `k ≤ max_k`. `period` is 6 or 10.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_verify_pattern(period: u32, max_k: usize, passed: *mut bool) -> CsStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null("passed"));
        }
        let family = match period {
            6 => PatternFamily::Period6,
            10 => PatternFamily::Period10,
            p => return Err(Failure(CsStatus::InvalidArgument, format!("period must be 6 or 10, got {p}"))),
        };
        let sweep = verify_pattern_family(family, max_k).map_err(|e| Failure(CsStatus::NumericalFailure, e.to_string()))?;
        *passed = sweep.passed();
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
