//! Oriented paths, oriented path coronae and oriented trees.

use std::collections::VecDeque;

use super::{checked, corona_layout, pcn_two_witness, walk};
use crate::coloring::Coloring;
use crate::digraph::OrientedGraph;
use crate::error::{Error, Result};
use crate::graph::Family;

/// Packing chromatic number of an oriented path with a witness.
pub fn pcn_oriented_path(op: &OrientedGraph) -> Result<(u32, Coloring)> {
    let seq = walk(op, Family::Path)?;
    let n = seq.len();
    if n == 1 {
        return Ok((1, Coloring::new(vec![1])?));
    }
    if let Some(w) = pcn_two_witness(op) {
        return Ok((2, w));
    }
    let mut col = vec![0; n];
    for (j, &v) in seq.iter().enumerate() {
        col[v] = [1, 2, 1, 3][j % 4];
    }
    Ok((3, checked(op, Coloring::new(col)?)?))
}

/// Colors a vertex's uncolored neighbors so that (P) holds at `v`, which has
/// color 1. `alpha` is the color of its in-neighbors.
fn fill_around_one(og: &OrientedGraph, v: usize, alpha: u32, col: &mut [u32]) {
    for &w in og.in_neighbors(v) {
        if col[w] == 0 {
            col[w] = alpha;
        }
    }
    for &w in og.out_neighbors(v) {
        if col[w] == 0 {
            col[w] = 5 - alpha;
        }
    }
}

/// The in-neighbor color forced by a colored neighbor of the 1-vertex `v`.
fn alpha_at(og: &OrientedGraph, v: usize, col: &[u32]) -> Option<u32> {
    if let Some(&w) = og.in_neighbors(v).iter().find(|&&w| col[w] > 1) {
        return Some(col[w]);
    }
    og.out_neighbors(v).iter().find(|&&w| col[w] > 1).map(|&w| 5 - col[w])
}

/// A packing 3-coloring of an oriented `P_n⊙pK_1` satisfying (P), grown
/// along the spine with the first pendant of each spine vertex.
pub fn color_oriented_path_corona(og: &OrientedGraph) -> Result<Coloring> {
    let layout = corona_layout(og, Family::Path)?;
    let n = layout.n;
    let z = |i: usize| layout.pendant(i, 0);
    // u and w are both in- or both out-neighbors of m
    let directed = |u: usize, m: usize, w: usize| og.has_arc(u, m) == og.has_arc(m, w);
    let mut col = vec![0u32; og.vertex_count()];
    col[0] = 1;
    col[z(0)] = 2;
    for i in 0..n.saturating_sub(1) {
        if col[i] == 1 {
            let c = col[z(i)];
            col[i + 1] = if directed(z(i), i, i + 1) { 5 - c } else { c };
            col[z(i + 1)] = 1;
        } else {
            let c = col[i];
            col[z(i + 1)] = if directed(i, i + 1, z(i + 1)) { 5 - c } else { c };
            col[i + 1] = 1;
        }
    }
    for i in 0..n {
        if col[i] == 1 {
            let alpha = alpha_at(og, i, &col).ok_or_else(|| Error::Internal("spine 1-vertex without colored neighbor".into()))?;
            fill_around_one(og, i, alpha, &mut col);
        } else {
            for v in layout.pendants(i) {
                col[v] = 1;
            }
        }
    }
    checked(og, Coloring::new(col)?)
}

/// Packing chromatic number of an oriented `P_n⊙pK_1` with a witness.
pub fn pcn_oriented_path_corona(og: &OrientedGraph) -> Result<(u32, Coloring)> {
    corona_layout(og, Family::Path)?;
    if let Some(w) = pcn_two_witness(og) {
        return Ok((2, w));
    }
    Ok((3, color_oriented_path_corona(og)?))
}

/// A packing coloring with at most 3 colors of an oriented tree satisfying
/// (P), with color 1 on one side of the bipartition.
pub fn color_oriented_tree(ot: &OrientedGraph) -> Result<Coloring> {
    let g = ot.base();
    let n = g.vertex_count();
    if n == 0 || !g.is_tree() {
        return Err(Error::InvalidArgument("underlying graph is not a tree".into()));
    }
    let mut col = vec![0u32; n];
    // for 1-vertices: color of their in-neighbors
    let mut alpha = vec![0u32; n];
    col[0] = 1;
    alpha[0] = match g.neighbors(0).iter().min() {
        Some(&w) if ot.has_arc(0, w) => 3,
        _ => 2,
    };
    let mut q = VecDeque::from([0usize]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if col[w] != 0 {
                continue;
            }
            if col[v] == 1 {
                col[w] = if ot.has_arc(w, v) { alpha[v] } else { 5 - alpha[v] };
            } else {
                col[w] = 1;
                alpha[w] = if ot.has_arc(v, w) { col[v] } else { 5 - col[v] };
            }
            q.push_back(w);
        }
    }
    checked(ot, Coloring::new(col)?)
}
