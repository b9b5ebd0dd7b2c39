//! Undirected simple graphs, the path/cycle corona families and BFS distances.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
}

/// Index layout of `P_n⊙pK_1` or `C_n⊙pK_1` (p = 0 is the bare path or cycle).
///
/// Spine vertex `i` has index `i`; pendant `j` of spine vertex `i` has index `n + i*p + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoronaLayout {
    pub family: Family,
    pub n: usize,
    pub p: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Spine(usize),
    Pendant { spine: usize, slot: usize },
}

impl CoronaLayout {
    pub fn vertex_count(&self) -> usize {
        self.n * (1 + self.p)
    }

    pub fn pendant(&self, spine: usize, slot: usize) -> usize {
        debug_assert!(spine < self.n && slot < self.p);
        self.n + spine * self.p + slot
    }

    pub fn pendants(&self, spine: usize) -> std::ops::Range<usize> {
        let start = self.n + spine * self.p;
        start..start + self.p
    }

    pub fn role(&self, v: usize) -> Option<VertexRole> {
        if v < self.n {
            Some(VertexRole::Spine(v))
        } else if v < self.vertex_count() {
            let k = v - self.n;
            Some(VertexRole::Pendant { spine: k / self.p, slot: k % self.p })
        } else {
            None
        }
    }

    /// Spine index of `v`, or the spine vertex a pendant hangs from.
    pub fn spine_of(&self, v: usize) -> Option<usize> {
        match self.role(v)? {
            VertexRole::Spine(i) => Some(i),
            VertexRole::Pendant { spine, .. } => Some(spine),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    layout: Option<CoronaLayout>,
}

impl Graph {
    /// Builds a simple graph. Edges may be given in any order and orientation;
    /// they are stored as sorted `(min, max)` pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {}-{}", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: es, adj, layout: None })
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("path needs at least one vertex".into()));
        }
        let mut g = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
        g.layout = Some(CoronaLayout { family: Family::Path, n, p: 0 });
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?;
        g.layout = Some(CoronaLayout { family: Family::Cycle, n, p: 0 });
        Ok(g)
    }

    /// `g⊙pK_1`. Keeps a corona layout when `g` is a bare path or cycle.
    pub fn generalized_corona(g: &Graph, p: usize) -> Result<Self> {
        if g.n == 0 {
            return Err(Error::InvalidArgument("corona of the empty graph".into()));
        }
        if p == 0 {
            return Ok(g.clone());
        }
        let n = g.n;
        let extra = (0..n).flat_map(|i| (0..p).map(move |j| (i, n + i * p + j)));
        let mut out = Graph::new(n * (1 + p), g.edges.iter().copied().chain(extra))?;
        out.layout = match g.layout {
            Some(l) if l.p == 0 => Some(CoronaLayout { family: l.family, n, p }),
            _ => None,
        };
        Ok(out)
    }

    pub fn family(family: Family, n: usize, p: usize) -> Result<Self> {
        let base = match family {
            Family::Path => Graph::path(n)?,
            Family::Cycle => Graph::cycle(n)?,
        };
        Graph::generalized_corona(&base, p)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: lexicographic on `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn layout(&self) -> Option<&CoronaLayout> {
        self.layout.as_ref()
    }

    pub fn with_layout(mut self, layout: Option<CoronaLayout>) -> Result<Self> {
        if let Some(l) = layout {
            let expect = Graph::family(l.family, l.n, l.p)?;
            if expect.edges != self.edges || expect.n != self.n {
                return Err(Error::InvalidGraph("graph does not match the requested layout".into()));
            }
        }
        self.layout = layout;
        Ok(self)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        bfs(self.n, 0, |v| self.adj[v].iter().copied(), usize::MAX)
            .iter()
            .all(|&d| d != NONE)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Two-coloring of a connected bipartite graph as part labels 0/1, vertex 0 in part 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        q.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Subgraph induced by `keep`, relabelled in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("bad vertex list entry {v}")));
            }
            pos[v] = i;
        }
        let es = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(keep.len(), es)
    }
}

pub(crate) const NONE: u32 = u32::MAX;

/// BFS distances from `s` up to `radius`; unreached entries hold `NONE`.
pub(crate) fn bfs<I, F>(n: usize, s: usize, next: F, radius: usize) -> Vec<u32>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut d = vec![NONE; n];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        if d[v] as usize >= radius {
            continue;
        }
        for w in next(v) {
            if d[w] == NONE {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// True when reachable within `r` steps.
    pub fn within(self, r: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= r)
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Symmetric all-pairs distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_raw(n: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        DistanceMatrix { n, data }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.data[u * self.n + v] {
            NONE => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Distance> + '_ {
        self.data[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&d| if d == NONE { Distance::Unreachable } else { Distance::Finite(d) })
    }

    /// Vertices at distance exactly 1.
    pub fn degree(&self, u: usize) -> usize {
        self.data[u * self.n..(u + 1) * self.n].iter().filter(|&&d| d == 1).count()
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        data.extend(bfs(n, s, |v| g.neighbors(v).iter().copied(), usize::MAX));
    }
    DistanceMatrix::from_raw(n, data)
}
