//! Colorings and the packing-coloring checkers.
//!
//! Two independent routes: a scan over a [`DistanceMatrix`], and a bounded BFS
//! from every vertex that never builds the full table.

use crate::digraph::OrientedGraph;
use crate::error::{Error, Result};
use crate::graph::{bfs, Distance, DistanceMatrix, Graph, NONE};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidArgument(format!("vertex {v} has color 0")));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest color used, i.e. k for a packing k-coloring.
    pub fn max_color(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn restrict(&self, keep: &[usize]) -> Coloring {
        Coloring(keep.iter().map(|&v| self.0[v]).collect())
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

/// Two vertices sharing `color` at distance `distance <= color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color: u32,
    pub distance: u32,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vertices {} and {} both colored {} at distance {}",
            self.u, self.v, self.color, self.distance
        )
    }
}

fn arity(n: usize, col: &Coloring) -> Result<()> {
    if col.len() != n {
        return Err(Error::InvalidArgument(format!(
            "coloring has {} entries for {} vertices",
            col.len(),
            n
        )));
    }
    Ok(())
}

/// First violating pair in `(u, v)` order, `u < v`.
pub fn first_violation(dm: &DistanceMatrix, col: &Coloring) -> Result<Option<Violation>> {
    arity(dm.len(), col)?;
    for u in 0..dm.len() {
        let c = col.get(u);
        for v in u + 1..dm.len() {
            if col.get(v) == c {
                if let Distance::Finite(d) = dm.get(u, v) {
                    if d <= c {
                        return Ok(Some(Violation { u, v, color: c, distance: d }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `π(u) = π(v) = i` implies `d(u,v) > i` or unreachable.
pub fn is_packing_coloring(dm: &DistanceMatrix, col: &Coloring) -> bool {
    matches!(first_violation(dm, col), Ok(None))
}

fn ball_scan<F>(n: usize, col: &Coloring, reach: F) -> Option<Violation>
where
    F: Fn(usize, usize) -> Vec<u32>,
{
    let mut best: Option<Violation> = None;
    for s in 0..n {
        let c = col.get(s);
        let d = reach(s, c as usize);
        for (t, &dt) in d.iter().enumerate() {
            if t != s && dt != NONE && col.get(t) == c {
                let cand = Violation { u: s.min(t), v: s.max(t), color: c, distance: dt };
                let better = match best {
                    None => true,
                    Some(b) => (cand.u, cand.v, cand.distance) < (b.u, b.v, b.distance),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// Same verdict as [`first_violation`] over [`crate::graph::distances`], computed by
/// BFS of radius `π(v)` around each vertex.
pub fn graph_violation(g: &Graph, col: &Coloring) -> Result<Option<Violation>> {
    arity(g.vertex_count(), col)?;
    let n = g.vertex_count();
    Ok(ball_scan(n, col, |s, r| bfs(n, s, |v| g.neighbors(v).iter().copied(), r)))
}

/// Oriented version: a forward BFS of radius `π(v)` from every vertex covers
/// every directed path in one of its two directions.
pub fn oriented_violation(og: &OrientedGraph, col: &Coloring) -> Result<Option<Violation>> {
    arity(og.vertex_count(), col)?;
    let n = og.vertex_count();
    let mut v = ball_scan(n, col, |s, r| og.forward_bfs(s, r));
    if let Some(x) = v.as_mut() {
        // the scan saw one direction; report the weak distance
        let a = og.forward_bfs(x.u, x.color as usize)[x.v];
        let b = og.forward_bfs(x.v, x.color as usize)[x.u];
        x.distance = a.min(b);
    }
    Ok(v)
}

pub fn is_packing_coloring_graph(g: &Graph, col: &Coloring) -> bool {
    matches!(graph_violation(g, col), Ok(None))
}

pub fn is_packing_coloring_oriented(og: &OrientedGraph, col: &Coloring) -> bool {
    matches!(oriented_violation(og, col), Ok(None))
}

/// Property (P): every color-1 vertex sees one color α ∈ {2,3} on all
/// in-neighbors and 5−α on all out-neighbors.
pub fn has_property_p(og: &OrientedGraph, col: &Coloring) -> bool {
    (0..og.vertex_count()).filter(|&v| col.get(v) == 1).all(|v| {
        let ins: Vec<u32> = og.in_neighbors(v).iter().map(|&u| col.get(u)).collect();
        let outs: Vec<u32> = og.out_neighbors(v).iter().map(|&u| col.get(u)).collect();
        let alpha = match (ins.first(), outs.first()) {
            (Some(&a), _) => a,
            (None, Some(&b)) => 5u32.wrapping_sub(b),
            (None, None) => return true,
        };
        (alpha == 2 || alpha == 3)
            && ins.iter().all(|&c| c == alpha)
            && outs.iter().all(|&c| c == 5 - alpha)
    })
}
