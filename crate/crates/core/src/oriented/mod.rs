//! Packing colorings of oriented paths, cycles, trees and of oriented
//! generalized coronae of paths and cycles, under the weak directed distance.

mod cycle;
mod path;
mod scp;

pub use cycle::{
    classify_oriented_cycle_corona, pcn_oriented_cycle, stated_obstruction, Classification, Reason, WitnessRoute,
};
pub use path::{color_oriented_path_corona, color_oriented_tree, pcn_oriented_path, pcn_oriented_path_corona};
pub use scp::{scp, scp_endpoint_color, scp_sequence, ScpConfig};

use std::collections::VecDeque;

use crate::coloring::{oriented_violation, Coloring};
use crate::digraph::OrientedGraph;
use crate::error::{Error, Result};
use crate::graph::{CoronaLayout, Family};

fn is_source_or_sink(og: &OrientedGraph, v: usize) -> bool {
    og.is_source(v) || og.is_sink(v)
}

/// A packing 2-coloring, if one exists: per connected component, one side of
/// the bipartition made only of sources and sinks gets color 1.
pub fn pcn_two_witness(og: &OrientedGraph) -> Option<Coloring> {
    let g = og.base();
    let n = g.vertex_count();
    if n < 2 || g.edge_count() == 0 {
        return None;
    }
    let side = g.bipartition()?;
    let mut comp = vec![usize::MAX; n];
    let mut col = vec![0u32; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        comp[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            members.push(v);
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    q.push_back(w);
                }
            }
        }
        let ok = |part: u8| members.iter().filter(|&&v| side[v] == part).all(|&v| is_source_or_sink(og, v));
        let one = if ok(side[s]) {
            side[s]
        } else if ok(1 - side[s]) {
            1 - side[s]
        } else {
            return None;
        };
        for &v in &members {
            col[v] = if side[v] == one { 1 } else { 2 };
        }
    }
    if col.iter().all(|&c| c == 1) {
        return None;
    }
    Coloring::new(col).ok()
}

/// Packing chromatic number 2: bipartite with one side made of sources and sinks.
pub fn is_pcn_two(og: &OrientedGraph) -> bool {
    pcn_two_witness(og).is_some()
}

pub(crate) fn checked(og: &OrientedGraph, col: Coloring) -> Result<Coloring> {
    match oriented_violation(og, &col)? {
        None => Ok(col),
        Some(v) => Err(Error::Internal(format!("oriented witness is invalid: {v}"))),
    }
}

pub(crate) fn corona_layout(og: &OrientedGraph, family: Family) -> Result<CoronaLayout> {
    match og.base().layout() {
        Some(l) if l.family == family && l.p >= 1 => Ok(*l),
        _ => Err(Error::InvalidArgument(format!(
            "expected an oriented {} corona with p >= 1",
            if family == Family::Path { "path" } else { "cycle" }
        ))),
    }
}

/// Vertex sequence of a graph whose underlying graph is a path (from the
/// lowest-index endpoint) or a cycle (from 0 towards its smaller neighbor).
pub(crate) fn walk(og: &OrientedGraph, family: Family) -> Result<Vec<usize>> {
    let g = og.base();
    let n = g.vertex_count();
    let bad = || Error::InvalidArgument(format!("underlying graph is not a {family:?}").to_lowercase());
    if !g.is_connected() || n == 0 {
        return Err(bad());
    }
    let ok = match family {
        Family::Path => g.edge_count() + 1 == n && (0..n).all(|v| g.degree(v) <= 2),
        Family::Cycle => n >= 3 && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2),
    };
    if !ok {
        return Err(bad());
    }
    let start = match family {
        Family::Path => (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0),
        Family::Cycle => 0,
    };
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while seq.len() < n {
        let next = g.neighbors(cur).iter().copied().filter(|&w| w != prev).min().ok_or_else(bad)?;
        seq.push(next);
        prev = cur;
        cur = next;
    }
    Ok(seq)
}
