//! Orientations of simple graphs and the weak directed distance.

use crate::error::{Error, Result};
use crate::graph::{bfs, DistanceMatrix, Graph, NONE};

pub const DEFAULT_ORIENTATION_LIMIT: usize = 24;

/// An orientation of a [`Graph`]. `dirs[i]` is the direction of the i-th
/// canonical edge `(a, b)`, `a < b`: `false` means `a -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    base: Graph,
    dirs: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

pub fn orient(g: &Graph, dirs: &[bool]) -> Result<OrientedGraph> {
    if dirs.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "{} directions given for {} edges",
            dirs.len(),
            g.edge_count()
        )));
    }
    let n = g.vertex_count();
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    for (&(a, b), &rev) in g.edges().iter().zip(dirs) {
        let (t, h) = if rev { (b, a) } else { (a, b) };
        out[t].push(h);
        inn[h].push(t);
    }
    Ok(OrientedGraph { base: g.clone(), dirs: dirs.to_vec(), out, inn })
}

/// Orients `g` by listing every edge once as an arc `(tail, head)`.
pub fn orient_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<OrientedGraph> {
    let mut dirs: Vec<Option<bool>> = vec![None; g.edge_count()];
    for &(t, h) in arcs {
        let i = g
            .edge_index(t, h)
            .ok_or_else(|| Error::InvalidArgument(format!("arc {t}->{h} is not an edge of the graph")))?;
        if dirs[i].replace(t > h).is_some() {
            return Err(Error::InvalidArgument(format!("edge {t}-{h} oriented twice")));
        }
    }
    let dirs: Option<Vec<bool>> = dirs.into_iter().collect();
    let dirs = dirs.ok_or_else(|| Error::InvalidArgument(format!("{} arcs given for {} edges", arcs.len(), g.edge_count())))?;
    orient(g, &dirs)
}

impl OrientedGraph {
    /// Builds an oriented graph from arcs `(tail, head)`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let g = Graph::new(n, arcs.iter().copied())?;
        let mut dirs = vec![false; g.edge_count()];
        for &(t, h) in arcs {
            let i = g.edge_index(t, h).expect("edge just inserted");
            dirs[i] = t > h;
        }
        orient(&g, &dirs)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dirs
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.dirs)
            .map(|(&(a, b), &r)| if r { (b, a) } else { (a, b) })
    }

    pub fn has_arc(&self, t: usize, h: usize) -> bool {
        self.out[t].contains(&h)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.inn[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    /// Sources and sinks, optionally restricted to `restrict`. Isolated vertices are both.
    pub fn sources_and_sinks(&self, restrict: Option<&[usize]>) -> (Vec<usize>, Vec<usize>) {
        let all: Vec<usize>;
        let vs = match restrict {
            Some(r) => r,
            None => {
                all = (0..self.vertex_count()).collect();
                &all
            }
        };
        let sources = vs.iter().copied().filter(|&v| self.is_source(v)).collect();
        let sinks = vs.iter().copied().filter(|&v| self.is_sink(v)).collect();
        (sources, sinks)
    }

    pub fn reversed(&self) -> OrientedGraph {
        let dirs: Vec<bool> = self.dirs.iter().map(|d| !d).collect();
        orient(&self.base, &dirs).expect("same edge count")
    }

    /// Induced sub-orientation on `keep`, relabelled in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<OrientedGraph> {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .filter(|&(t, h)| pos[t] != usize::MAX && pos[h] != usize::MAX)
            .map(|(t, h)| (pos[t], pos[h]))
            .collect();
        OrientedGraph::from_arcs(keep.len(), &arcs)
    }

    /// Directed BFS distances along out-arcs from `s`, capped at `radius`.
    pub(crate) fn forward_bfs(&self, s: usize, radius: usize) -> Vec<u32> {
        bfs(self.vertex_count(), s, |v| self.out[v].iter().copied(), radius)
    }

    pub(crate) fn with_base_layout(mut self, layout: Option<crate::graph::CoronaLayout>) -> Result<Self> {
        self.base = self.base.with_layout(layout)?;
        Ok(self)
    }
}

/// Shortest directed path length in either direction.
pub fn weak_directed_distances(og: &OrientedGraph) -> DistanceMatrix {
    let n = og.vertex_count();
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        data.extend(og.forward_bfs(s, usize::MAX));
    }
    for u in 0..n {
        for v in u + 1..n {
            let d = data[u * n + v].min(data[v * n + u]);
            data[u * n + v] = d;
            data[v * n + u] = d;
        }
    }
    debug_assert!(data.iter().step_by(n + 1).all(|&d| d == 0 && d != NONE));
    DistanceMatrix::from_raw(n, data)
}

/// All `2^|E|` orientations, mask `m` giving `dirs[i] = bit i of m`.
pub struct Orientations {
    base: Graph,
    next: u64,
    end: u64,
}

impl Iterator for Orientations {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.next >= self.end {
            return None;
        }
        let m = self.next;
        self.next += 1;
        let dirs: Vec<bool> = (0..self.base.edge_count()).map(|i| (m >> i) & 1 == 1).collect();
        Some(orient(&self.base, &dirs).expect("dirs sized to edge count"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.next) as usize;
        (r, Some(r))
    }
}

pub fn enumerate_orientations(g: &Graph, limit: usize) -> Result<Orientations> {
    let m = g.edge_count();
    if m > limit || m >= 64 {
        return Err(Error::TooManyEdges { edges: m, limit });
    }
    Ok(Orientations { base: g.clone(), next: 0, end: 1u64 << m })
}
