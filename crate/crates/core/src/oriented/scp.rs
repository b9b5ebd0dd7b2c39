//! The standard coloring procedure: a 3-color propagation along a path.

use std::collections::BTreeSet;

use super::walk;
use crate::coloring::Coloring;
use crate::digraph::OrientedGraph;
use crate::error::{Error, Result};
use crate::graph::Family;

/// Start colors `(c, c')` of the first two vertices and the set `S` of
/// vertices whose two neighbors must share a color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScpConfig {
    c: u32,
    c_prime: u32,
    s: BTreeSet<usize>,
}

impl ScpConfig {
    /// Exactly one of `c`, `c'` must be 1, the other 2 or 3.
    pub fn new(c: u32, c_prime: u32, s: impl IntoIterator<Item = usize>) -> Result<Self> {
        let ok = |x: u32| (1..=3).contains(&x);
        if !ok(c) || !ok(c_prime) || (c == 1) == (c_prime == 1) {
            return Err(Error::InvalidArgument(format!(
                "scp start colors ({c}, {c_prime}) must be in 1..=3 with exactly one equal to 1"
            )));
        }
        Ok(Self { c, c_prime, s: s.into_iter().collect() })
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn c_prime(&self) -> u32 {
        self.c_prime
    }

    pub fn s(&self) -> &BTreeSet<usize> {
        &self.s
    }
}

/// SCP over positions `0..len`; `in_s(j)` tells whether position `j` is in S.
pub fn scp_sequence(len: usize, c: u32, c_prime: u32, in_s: impl Fn(usize) -> bool) -> Vec<u32> {
    let mut col = Vec::with_capacity(len);
    for j in 0..len {
        let x = match j {
            0 => c,
            1 => c_prime,
            _ if col[j - 1] != 1 => 1,
            _ if in_s(j - 1) => col[j - 2],
            _ => 5 - col[j - 2],
        };
        col.push(x);
    }
    col
}

/// Runs SCP along an oriented path, starting from its lowest-index endpoint.
/// The result is indexed by vertex.
pub fn scp(op: &OrientedGraph, cfg: &ScpConfig) -> Result<Coloring> {
    let seq = walk(op, Family::Path)?;
    if let Some(&v) = cfg.s.iter().find(|&&v| v >= seq.len()) {
        return Err(Error::InvalidArgument(format!("scp set contains vertex {v} outside the path")));
    }
    let colors = scp_sequence(seq.len(), cfg.c, cfg.c_prime, |j| cfg.s.contains(&seq[j]));
    let mut out = vec![0; seq.len()];
    for (j, &v) in seq.iter().enumerate() {
        out[v] = colors[j];
    }
    Coloring::new(out)
}

/// Color of the last vertex of SCP with `(1, alpha)` on a path with an even
/// number `n` of vertices, where `s_size` vertices of S sit at color-1 positions.
pub fn scp_endpoint_color(n: usize, alpha: u32, s_size: usize) -> Result<u32> {
    if n % 2 == 1 || n < 2 {
        return Err(Error::InvalidArgument(format!("scp endpoint color needs an even path order, got {n}")));
    }
    if alpha != 2 && alpha != 3 {
        return Err(Error::InvalidArgument(format!("alpha must be 2 or 3, got {alpha}")));
    }
    let even = s_size % 2 == 0;
    Ok(if (even && n % 4 == 2) || (!even && n % 4 == 0) { alpha } else { 5 - alpha })
}
