//! Graphviz export.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::io::GraphFile;

// Brewer "set3" has 12 entries; larger colors wrap around.
const SCHEME: &str = "set312";

/// DOT text for a graph, labelling each vertex `v:color` when a coloring is given.
pub fn to_dot(f: &GraphFile, coloring: Option<&Coloring>) -> String {
    let (kind, op) = match f {
        GraphFile::Undirected(_) => ("graph", "--"),
        GraphFile::Oriented(_) => ("digraph", "->"),
    };
    let mut s = format!("{kind} G {{\n");
    if coloring.is_some() {
        let _ = writeln!(s, "  node [style=filled, colorscheme={SCHEME}];");
    }
    for v in 0..f.vertex_count() {
        match coloring {
            Some(c) => {
                let k = c.get(v);
                let _ = writeln!(s, "  {v} [label=\"{v}:{k}\", fillcolor={}];", (k - 1) % 12 + 1);
            }
            None => {
                let _ = writeln!(s, "  {v} [label=\"{v}\"];");
            }
        }
    }
    match f {
        GraphFile::Undirected(g) => {
            for &(u, v) in g.edges() {
                let _ = writeln!(s, "  {u} {op} {v};");
            }
        }
        GraphFile::Oriented(og) => {
            for (t, h) in og.arcs() {
                let _ = writeln!(s, "  {t} {op} {h};");
            }
        }
    }
    s.push_str("}\n");
    s
}
