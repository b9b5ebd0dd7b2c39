//! Text formats.
//!
//! Graphs: a header `g <nvertices> <nedges> <undirected|oriented>`, then one
//! line `e u v` per edge (undirected) or `a tail head` per arc (oriented).
//! Colorings: one line `v <index> <color>` per vertex. Everything after `#`
//! on a line is ignored.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::digraph::{orient_arcs, OrientedGraph};
use crate::error::{Error, Result};
use crate::graph::{CoronaLayout, Family, Graph};

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Undirected(Graph),
    Oriented(OrientedGraph),
}

impl GraphFile {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphFile::Undirected(g) => g,
            GraphFile::Oriented(og) => og.base(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph().vertex_count()
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let f: Vec<&str> = l.split_whitespace().collect();
        (!f.is_empty()).then_some((i + 1, f))
    })
}

fn num(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("expected a non-negative integer, got {s:?}") })
}

/// Parses the graph format; a corona layout is attached when the graph is
/// exactly some `P_n⊙pK_1` or `C_n⊙pK_1` in standard numbering.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut it = lines(text);
    let (hl, h) = it.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    if h.len() != 4 || h[0] != "g" {
        return Err(Error::Parse { line: hl, msg: "header must be `g <nvertices> <nedges> <undirected|oriented>`".into() });
    }
    let (n, m) = (num(hl, h[1])?, num(hl, h[2])?);
    let oriented = match h[3] {
        "undirected" => false,
        "oriented" => true,
        other => return Err(Error::Parse { line: hl, msg: format!("unknown graph kind {other:?}") }),
    };
    let tag = if oriented { "a" } else { "e" };
    let mut pairs = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, f) in it {
        if f.len() != 3 || f[0] != tag {
            return Err(Error::Parse { line: ln, msg: format!("expected `{tag} u v`") });
        }
        let (u, v) = (num(ln, f[1])?, num(ln, f[2])?);
        if u >= n || v >= n {
            return Err(Error::Parse { line: ln, msg: format!("vertex out of range 0..{n}") });
        }
        pairs.push((u, v));
        last = ln;
    }
    if pairs.len() != m {
        return Err(Error::Parse { line: last, msg: format!("header announces {m} edges, found {}", pairs.len()) });
    }
    let g = Graph::new(n, pairs.iter().copied())?;
    if g.edge_count() != m {
        return Err(Error::InvalidGraph("repeated edge".into()));
    }
    let g = match detect_layout(&g) {
        Some(l) => g.with_layout(Some(l))?,
        None => g,
    };
    Ok(if oriented { GraphFile::Oriented(orient_arcs(&g, &pairs)?) } else { GraphFile::Undirected(g) })
}

/// The corona layout matching `g` exactly, preferring the smallest p.
pub fn detect_layout(g: &Graph) -> Option<CoronaLayout> {
    if let Some(l) = g.layout() {
        return Some(*l);
    }
    let total = g.vertex_count();
    for p in 0..total {
        if total % (p + 1) != 0 {
            continue;
        }
        let n = total / (p + 1);
        for family in [Family::Path, Family::Cycle] {
            let l = CoronaLayout { family, n, p };
            if let Ok(h) = Graph::family(family, n, p) {
                if h.edges() == g.edges() {
                    return Some(l);
                }
            }
        }
    }
    None
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("g {} {} undirected\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn write_oriented(og: &OrientedGraph) -> String {
    let mut s = format!("g {} {} oriented\n", og.vertex_count(), og.base().edge_count());
    for (t, h) in og.arcs() {
        let _ = writeln!(s, "a {t} {h}");
    }
    s
}

pub fn write_graph_file(f: &GraphFile) -> String {
    match f {
        GraphFile::Undirected(g) => write_graph(g),
        GraphFile::Oriented(og) => write_oriented(og),
    }
}

/// Parses a coloring; when `n` is given the coloring must cover exactly the
/// vertices `0..n`.
pub fn parse_coloring(text: &str, n: Option<usize>) -> Result<Coloring> {
    let mut slots: Vec<Option<u32>> = Vec::new();
    for (ln, f) in lines(text) {
        if f.len() != 3 || f[0] != "v" {
            return Err(Error::Parse { line: ln, msg: "expected `v <index> <color>`".into() });
        }
        let v = num(ln, f[1])?;
        let c: u32 = f[2]
            .parse()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| Error::Parse { line: ln, msg: format!("color must be a positive integer, got {:?}", f[2]) })?;
        if let Some(n) = n {
            if v >= n {
                return Err(Error::Parse { line: ln, msg: format!("vertex {v} out of range 0..{n}") });
            }
        }
        if v >= slots.len() {
            slots.resize(v + 1, None);
        }
        if slots[v].replace(c).is_some() {
            return Err(Error::Parse { line: ln, msg: format!("vertex {v} colored twice") });
        }
    }
    if let Some(n) = n {
        slots.resize(n.max(slots.len()), None);
    }
    if let Some(v) = slots.iter().position(Option::is_none) {
        return Err(Error::InvalidArgument(format!("vertex {v} has no color")));
    }
    Coloring::new(slots.into_iter().flatten().collect())
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, &k) in c.colors().iter().enumerate() {
        let _ = writeln!(s, "v {v} {k}");
    }
    s
}

/// Edges of `P_n⊙pK_1` / `C_n⊙pK_1` in generation order: spine edges
/// `(i, i+1 mod n)`, then `(i, pendant)` for each spine vertex in turn.
pub fn generation_edges(l: &CoronaLayout) -> Vec<(usize, usize)> {
    let spine = match l.family {
        Family::Path => l.n.saturating_sub(1),
        Family::Cycle => l.n,
    };
    let mut e: Vec<(usize, usize)> = (0..spine).map(|i| (i, (i + 1) % l.n)).collect();
    for i in 0..l.n {
        e.extend(l.pendants(i).map(|z| (i, z)));
    }
    e
}

/// Orients a family graph from one flag per edge in generation order;
/// `false` keeps the generated direction, so all-false makes the spine a
/// directed path or cycle with every pendant an out-neighbor.
pub fn orient_family(g: &Graph, flips: &[bool]) -> Result<OrientedGraph> {
    let l = g.layout().ok_or_else(|| Error::InvalidArgument("graph has no corona layout".into()))?;
    let edges = generation_edges(l);
    if flips.len() != edges.len() {
        return Err(Error::InvalidArgument(format!("{} direction flags given for {} edges", flips.len(), edges.len())));
    }
    let arcs: Vec<(usize, usize)> = edges.iter().zip(flips).map(|(&(u, v), &f)| if f { (v, u) } else { (u, v) }).collect();
    orient_arcs(g, &arcs)
}

/// Parses a direction string of `0`/`1` characters.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidArgument(format!("direction string may only contain 0 and 1, got {c:?}"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::family(Family::Cycle, 4, 2).unwrap();
        let f = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(f.graph(), &g);
        assert_eq!(f.graph().layout(), g.layout());
        let og = orient_family(&g, &[false; 12]).unwrap();
        assert_eq!(parse_graph(&write_oriented(&og)).unwrap(), GraphFile::Oriented(og));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("g 2 1 undirected\ne 0 2\n").is_err());
        assert!(parse_graph("g 2 2 undirected\ne 0 1\n").is_err());
        assert!(parse_graph("g 2 1 oriented\ne 0 1\n").is_err());
        let f = parse_graph("# comment\ng 3 2 oriented\na 1 0 # arc\na 1 2\n").unwrap();
        let GraphFile::Oriented(og) = f else { panic!() };
        assert!(og.is_source(1));
    }

    #[test]
    fn colorings() {
        let c = parse_coloring("v 1 2\nv 0 1\n", Some(2)).unwrap();
        assert_eq!(c.colors(), &[1, 2]);
        assert_eq!(parse_coloring(&write_coloring(&c), Some(2)).unwrap(), c);
        assert!(parse_coloring("v 0 1\n", Some(2)).is_err());
        assert!(parse_coloring("v 0 1\nv 0 2\n", None).is_err());
        assert!(parse_coloring("v 0 0\n", None).is_err());
    }

    #[test]
    fn directed_cycle_from_zeros() {
        let g = Graph::cycle(5).unwrap().with_layout(Some(CoronaLayout { family: Family::Cycle, n: 5, p: 0 })).unwrap();
        let og = orient_family(&g, &parse_bits("00000").unwrap()).unwrap();
        assert!((0..5).all(|i| og.has_arc(i, (i + 1) % 5)));
    }
}
