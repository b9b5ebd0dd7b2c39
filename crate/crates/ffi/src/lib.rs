//! C interface. Graphs and colorings are opaque handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`PackcolStatus`] and writes its result through out-pointers
//! only on success.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use packcol::closed_form::{construct_coloring, pcn_closed_form, FamilyQuery, GraphFamily};
use packcol::coloring::{is_packing_coloring_graph, is_packing_coloring_oriented};
use packcol::io::{self, GraphFile};
use packcol::oriented::{
    classify_oriented_cycle_corona, color_oriented_tree, pcn_oriented_cycle, pcn_oriented_path,
    pcn_oriented_path_corona,
};
use packcol::solver::{packing_chromatic_number, PcnOutcome, SearchBudget};
use packcol::{distances, weak_directed_distances, Coloring, Error, Family};

pub const PACKCOL_FAMILY_PATH: u32 = 0;
pub const PACKCOL_FAMILY_CYCLE: u32 = 1;
pub const PACKCOL_FAMILY_PATH_CORONA: u32 = 2;
pub const PACKCOL_FAMILY_CYCLE_CORONA: u32 = 3;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackcolStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    /// The search budget ran out before an answer.
    Indeterminate = 3,
    Internal = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A graph or oriented graph.
pub struct PackcolGraph(GraphFile);

/// A vertex coloring, colors starting at 1.
pub struct PackcolColoring(Coloring);

impl From<Error> for PackcolStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Pattern(_) => PackcolStatus::Parse,
            Error::Indeterminate => PackcolStatus::Indeterminate,
            Error::Internal(_) => PackcolStatus::Internal,
            _ => PackcolStatus::InvalidArgument,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), PackcolStatus>) -> PackcolStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PackcolStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => PackcolStatus::Panic,
    }
}

unsafe fn out<T>(p: *mut T, v: T) -> Result<(), PackcolStatus> {
    if p.is_null() {
        return Err(PackcolStatus::NullPointer);
    }
    p.write(v);
    Ok(())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, PackcolStatus> {
    p.as_ref().ok_or(PackcolStatus::NullPointer)
}

fn query(family: u32, n: usize, p: usize) -> Result<FamilyQuery, PackcolStatus> {
    let f = match family {
        PACKCOL_FAMILY_PATH => GraphFamily::Path,
        PACKCOL_FAMILY_CYCLE => GraphFamily::Cycle,
        PACKCOL_FAMILY_PATH_CORONA => GraphFamily::PathCorona,
        PACKCOL_FAMILY_CYCLE_CORONA => GraphFamily::CycleCorona,
        _ => return Err(PackcolStatus::InvalidArgument),
    };
    Ok(FamilyQuery::new(f, n, p)?)
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn packcol_status_message(status: PackcolStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PackcolStatus::Ok => c"ok",
        PackcolStatus::InvalidArgument => c"invalid argument",
        PackcolStatus::Parse => c"parse error",
        PackcolStatus::Indeterminate => c"search budget exhausted",
        PackcolStatus::Internal => c"internal error",
        PackcolStatus::NullPointer => c"null pointer",
        PackcolStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Builds `P_n`, `C_n`, `P_n⊙pK_1` or `C_n⊙pK_1` (p = 0 for the plain families).
///
/// # Safety
/// `out_graph` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_family(family: u32, n: usize, p: usize, out_graph: *mut *mut PackcolGraph) -> PackcolStatus {
    guard(|| {
        let g = query(family, n, p)?.graph()?;
        out(out_graph, boxed(PackcolGraph(GraphFile::Undirected(g))))
    })
}

/// Parses the text graph format (NUL-terminated UTF-8).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_parse(text: *const c_char, out_graph: *mut *mut PackcolGraph) -> PackcolStatus {
    guard(|| {
        if text.is_null() {
            return Err(PackcolStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| PackcolStatus::Parse)?;
        out(out_graph, boxed(PackcolGraph(io::parse_graph(s)?)))
    })
}

/// Orients a family graph: one flag per edge in generation order (spine
/// edges `(i, i+1 mod n)`, then `(i, pendant)`); nonzero reverses the edge.
///
/// # Safety
/// `graph` must be a live handle, `flips` readable for `len` bytes, `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_orient(
    graph: *const PackcolGraph,
    flips: *const u8,
    len: usize,
    out_graph: *mut *mut PackcolGraph,
) -> PackcolStatus {
    guard(|| {
        let g = get(graph)?;
        if flips.is_null() && len > 0 {
            return Err(PackcolStatus::NullPointer);
        }
        let bits: Vec<bool> = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(flips, len).iter().map(|&b| b != 0).collect() };
        let og = io::orient_family(g.0.graph(), &bits)?;
        out(out_graph, boxed(PackcolGraph(GraphFile::Oriented(og))))
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_free(graph: *mut PackcolGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_vertex_count(graph: *const PackcolGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn packcol_graph_is_oriented(graph: *const PackcolGraph) -> bool {
    matches!(graph.as_ref(), Some(PackcolGraph(GraphFile::Oriented(_))))
}

/// Packing chromatic number of a family member from its closed form.
///
/// # Safety
/// `out_k` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_closed_form(family: u32, n: usize, p: usize, out_k: *mut u32) -> PackcolStatus {
    guard(|| out(out_k, pcn_closed_form(&query(family, n, p)?)?))
}

/// Optimal packing coloring of a family member.
///
/// # Safety
/// `out_coloring` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_construct(family: u32, n: usize, p: usize, out_coloring: *mut *mut PackcolColoring) -> PackcolStatus {
    guard(|| {
        let c = construct_coloring(&query(family, n, p)?)?;
        out(out_coloring, boxed(PackcolColoring(c)))
    })
}

/// Exact packing chromatic number by search. Zero limits mean the defaults
/// (a node cap, no time limit). `out_witness` may be null.
///
/// # Safety
/// `graph` must be a live handle, `out_k` valid for writes, `out_witness` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_pcn(
    graph: *const PackcolGraph,
    node_limit: u64,
    time_limit_ms: u64,
    out_k: *mut u32,
    out_witness: *mut *mut PackcolColoring,
) -> PackcolStatus {
    guard(|| {
        let g = get(graph)?;
        if out_k.is_null() {
            return Err(PackcolStatus::NullPointer);
        }
        let mut budget = SearchBudget::default();
        if node_limit > 0 {
            budget.node_limit = Some(node_limit);
        }
        if time_limit_ms > 0 {
            budget.time_limit = Some(Duration::from_millis(time_limit_ms));
        }
        let dm = match &g.0 {
            GraphFile::Undirected(u) => distances(u),
            GraphFile::Oriented(o) => weak_directed_distances(o),
        };
        match packing_chromatic_number(&dm, &budget) {
            PcnOutcome::Exact { k, witness } => {
                out(out_k, k)?;
                if !out_witness.is_null() {
                    out(out_witness, boxed(PackcolColoring(witness)))?;
                }
                Ok(())
            }
            PcnOutcome::Indeterminate { .. } => Err(PackcolStatus::Indeterminate),
        }
    })
}

/// Is `colors[0..len]` a packing coloring of the graph?
///
/// # Safety
/// `graph` must be a live handle, `colors` readable for `len` values, `out_valid` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_check(graph: *const PackcolGraph, colors: *const u32, len: usize, out_valid: *mut bool) -> PackcolStatus {
    guard(|| {
        let g = get(graph)?;
        if colors.is_null() && len > 0 {
            return Err(PackcolStatus::NullPointer);
        }
        if len != g.0.vertex_count() {
            return Err(PackcolStatus::InvalidArgument);
        }
        let v = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(colors, len).to_vec() };
        let c = Coloring::new(v)?;
        let ok = match &g.0 {
            GraphFile::Undirected(u) => is_packing_coloring_graph(u, &c),
            GraphFile::Oriented(o) => is_packing_coloring_oriented(o, &c),
        };
        out(out_valid, ok)
    })
}

/// Packing coloring of an oriented path, cycle, corona of one, or tree,
/// optimal except for trees (at most 3 colors). `out_coloring` may be null.
///
/// # Safety
/// `graph` must be a live handle, `out_colors` valid for writes, `out_coloring` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn packcol_color_oriented(
    graph: *const PackcolGraph,
    out_colors: *mut u32,
    out_coloring: *mut *mut PackcolColoring,
) -> PackcolStatus {
    guard(|| {
        let GraphFile::Oriented(og) = &get(graph)?.0 else {
            return Err(PackcolStatus::InvalidArgument);
        };
        let c = match og.base().layout().map(|l| (l.family, l.p)) {
            Some((Family::Path, 0)) => pcn_oriented_path(og)?.1,
            Some((Family::Cycle, 0)) => pcn_oriented_cycle(og)?.1,
            Some((Family::Path, _)) => pcn_oriented_path_corona(og)?.1,
            Some((Family::Cycle, _)) => classify_oriented_cycle_corona(og)?.1,
            None => color_oriented_tree(og)?,
        };
        out(out_colors, c.max_color())?;
        if !out_coloring.is_null() {
            out(out_coloring, boxed(PackcolColoring(c)))?;
        }
        Ok(())
    })
}

/// # Safety
/// `coloring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn packcol_coloring_len(coloring: *const PackcolColoring) -> usize {
    coloring.as_ref().map_or(0, |c| c.0.len())
}

/// Copies the colors into `buf`, which must hold exactly `len` values.
///
/// # Safety
/// `coloring` must be a live handle and `buf` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn packcol_coloring_copy(coloring: *const PackcolColoring, buf: *mut u32, len: usize) -> PackcolStatus {
    guard(|| {
        let c = get(coloring)?;
        if len != c.0.len() {
            return Err(PackcolStatus::InvalidArgument);
        }
        if len > 0 {
            if buf.is_null() {
                return Err(PackcolStatus::NullPointer);
            }
            ptr::copy_nonoverlapping(c.0.colors().as_ptr(), buf, len);
        }
        Ok(())
    })
}

/// # Safety
/// `coloring` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn packcol_coloring_free(coloring: *mut PackcolColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}
