//! C ABI over `symreg`.
//!
//! Graphs and ideals are opaque handles created by `symreg_*` constructors
//! and released with the matching `*_free`. Every fallible call returns a
//! [`SymregStatus`]; on failure [`symreg_last_error`] describes the cause
//! for the calling thread. Strings handed out are freed with
//! [`symreg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use symreg::harness::{parse_graph, verify_graph, CensusConfig, ALL_CHECKS};
use symreg::{reg_betti, reg_takayama, symbolic_power, Error, Monomial, MonomialIdeal, PrimeField, SimpleGraph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymregStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    DegenerateIdeal = 4,
    NotSquarefree = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// Opaque simple graph.
pub struct SymregGraph(SimpleGraph);

/// Opaque monomial ideal.
pub struct SymregIdeal(MonomialIdeal);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SymregStatus {
    match e {
        Error::Parse { .. } => SymregStatus::ParseError,
        Error::DegenerateIdeal | Error::EdgelessGraph => SymregStatus::DegenerateIdeal,
        Error::NotSquarefree => SymregStatus::NotSquarefree,
        Error::VertexOutOfRange { .. } | Error::TooManyVariables(_) => SymregStatus::OutOfRange,
        _ => SymregStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and catching panics at the boundary.
fn guard(f: impl FnOnce() -> Result<(), (SymregStatus, String)>) -> SymregStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SymregStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SymregStatus::Panic
        }
    }
}

fn lift<T>(r: symreg::Result<T>) -> Result<T, (SymregStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (SymregStatus, String) {
    (SymregStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, (SymregStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (SymregStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SymregStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SymregStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn field(field_char: u32) -> Result<PrimeField, (SymregStatus, String)> {
    lift(PrimeField::new(field_char))
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next `symreg_*` call on the thread.
#[no_mangle]
pub extern "C" fn symreg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symreg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an `n m` edge list or a graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_parse(text: *const c_char, out: *mut *mut SymregGraph) -> SymregStatus {
    guard(|| {
        let g = lift(parse_graph(read_str(text, "text")?))?;
        write_out(out, Box::into_raw(Box::new(SymregGraph(g))))
    })
}

/// Builds a graph on `n` vertices from `m` 1-based pairs stored flat in
/// `edges` (length `2 * m`).
///
/// # Safety
/// `edges` must point to `2 * m` readable values (may be null when `m = 0`).
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_from_edges(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut SymregGraph,
) -> SymregStatus {
    guard(|| {
        let flat: &[u32] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = lift(SimpleGraph::new(n, &pairs))?;
        write_out(out, Box::into_raw(Box::new(SymregGraph(g))))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_free(g: *mut SymregGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_vertex_count(g: *const SymregGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_edge_count(g: *const SymregGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Canonical graph6 string; free with `symreg_string_free`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_graph_canonical_graph6(g: *const SymregGraph, out: *mut *mut c_char) -> SymregStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        write_out(out, into_c_string(g.0.canonical_graph6()))
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_edge_ideal(g: *const SymregGraph, out: *mut *mut SymregIdeal) -> SymregStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        write_out(out, Box::into_raw(Box::new(SymregIdeal(g.0.edge_ideal()))))
    })
}

/// Ideal in `n` variables from `count` exponent vectors stored row-major in
/// `exps` (length `n * count`).
///
/// # Safety
/// `exps` must point to `n * count` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_from_exponents(
    n: usize,
    exps: *const u32,
    count: usize,
    out: *mut *mut SymregIdeal,
) -> SymregStatus {
    guard(|| {
        let flat: &[u32] = if n * count == 0 {
            &[]
        } else if exps.is_null() {
            return Err(null("exps"));
        } else {
            std::slice::from_raw_parts(exps, n * count)
        };
        let gens: Vec<Monomial> = if n == 0 {
            vec![Monomial::one(0); count]
        } else {
            flat.chunks(n).map(|row| Monomial::from_exponents(row.iter().copied())).collect()
        };
        let ideal = lift(MonomialIdeal::from_generators(n, gens))?;
        write_out(out, Box::into_raw(Box::new(SymregIdeal(ideal))))
    })
}

/// # Safety
/// `i` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_free(i: *mut SymregIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// # Safety
/// `i` must be a live ideal handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_variable_count(i: *const SymregIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.n())
}

/// # Safety
/// `i` must be a live ideal handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_generator_count(i: *const SymregIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.len())
}

/// Copies minimal generator `index` into `exps_out`, which holds `len`
/// values and must have room for the variable count.
///
/// # Safety
/// `i` must be a live ideal handle; `exps_out` must have `len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_generator(
    i: *const SymregIdeal,
    index: usize,
    exps_out: *mut u32,
    len: usize,
) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        let g = i.0.generators().get(index).ok_or_else(|| {
            (SymregStatus::OutOfRange, format!("generator {index} of {}", i.0.len()))
        })?;
        if len < i.0.n() {
            return Err((SymregStatus::InvalidArgument, format!("buffer holds {len}, need {}", i.0.n())));
        }
        if exps_out.is_null() {
            return Err(null("exps_out"));
        }
        for (k, &e) in g.exps().iter().enumerate() {
            exps_out.add(k).write(e as u32);
        }
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live ideal handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_equal(a: *const SymregIdeal, b: *const SymregIdeal, out: *mut bool) -> SymregStatus {
    guard(|| {
        let (a, b) = (borrow(a, "a")?, borrow(b, "b")?);
        write_out(out, a.0 == b.0)
    })
}

/// Generators as a JSON array of exponent arrays; free with
/// `symreg_string_free`.
///
/// # Safety
/// `i` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_to_json(i: *const SymregIdeal, out: *mut *mut c_char) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        write_out(out, into_c_string(i.0.to_json()))
    })
}

/// `I^s`.
///
/// # Safety
/// `i` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_ideal_power(i: *const SymregIdeal, s: u32, out: *mut *mut SymregIdeal) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        let p = lift(i.0.power(s))?;
        write_out(out, Box::into_raw(Box::new(SymregIdeal(p))))
    })
}

/// `I^(s)` for a squarefree ideal.
///
/// # Safety
/// `i` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_symbolic_power(
    i: *const SymregIdeal,
    s: u32,
    out: *mut *mut SymregIdeal,
) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        let p = lift(symbolic_power(&i.0, s))?;
        write_out(out, Box::into_raw(Box::new(SymregIdeal(p))))
    })
}

/// `reg(S/I)` from degree complexes over GF(`field_char`).
///
/// # Safety
/// `i` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_reg_takayama(i: *const SymregIdeal, field_char: u32, out: *mut u32) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        let r = lift(reg_takayama(&i.0, field(field_char)?))?;
        write_out(out, r.reg_quotient)
    })
}

/// `reg(S/I)` from the Koszul Betti table over GF(`field_char`).
///
/// # Safety
/// `i` must be a live ideal handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_reg_betti(i: *const SymregIdeal, field_char: u32, out: *mut u32) -> SymregStatus {
    guard(|| {
        let i = borrow(i, "ideal")?;
        let r = lift(reg_betti(&i.0, field(field_char)?))?;
        write_out(out, r)
    })
}

/// Runs comma-separated `checks` (null or empty for all) with powers from
/// the comma-separated `s_values` (null for "2,3"). Writes the report as
/// JSON and whether every check passed.
///
/// # Safety
/// `g` must be a live graph handle; string arguments must be null or
/// NUL-terminated; `report_out` and `passed_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symreg_verify_graph(
    g: *const SymregGraph,
    checks: *const c_char,
    s_values: *const c_char,
    field_char: u32,
    report_out: *mut *mut c_char,
    passed_out: *mut bool,
) -> SymregStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        let checks = if checks.is_null() { "" } else { read_str(checks, "checks")? };
        let s_values = if s_values.is_null() { "2,3" } else { read_str(s_values, "s_values")? };
        let s_range = s_values
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| (SymregStatus::InvalidArgument, format!("bad s list {s_values:?}")))?;
        let checks: Vec<String> = if checks.trim().is_empty() {
            ALL_CHECKS.iter().map(|c| c.to_string()).collect()
        } else {
            checks.split(',').map(|c| c.trim().to_string()).collect()
        };
        let cfg = CensusConfig { s_range, checks, field_char, ..CensusConfig::default() };
        lift(cfg.validate())?;
        let report = lift(verify_graph(&g.0, &cfg))?;
        let json = serde_json::to_string(&report).expect("serializable");
        write_out(passed_out, report.all_passed())?;
        write_out(report_out, into_c_string(json))
    })
}
