//! Oriented cycles and oriented generalized coronae of cycles.

use std::fmt;
use std::str::FromStr;

use super::path::color_oriented_path_corona;
use super::scp::scp_sequence;
use super::{corona_layout, pcn_two_witness, walk};
use crate::coloring::{is_packing_coloring_oriented, Coloring};
use crate::digraph::{weak_directed_distances, OrientedGraph};
use crate::error::{Error, Result};
use crate::graph::{CoronaLayout, Family};
use crate::solver::{exists_packing_k_coloring, Decision, SearchBudget};

/// Why an oriented cycle corona has the packing chromatic number it has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Bipartite, with one side made only of sources and sinks.
    BipartiteSourcesSinks,
    /// Directed spine cycle of length at least 5 not divisible by 4.
    DirectedCycleBadLength,
    /// `C_4` spine with one source and one sink, both with a pendant making
    /// them neither source nor sink.
    FourCycleObstruction,
    /// `n ≡ 0 (mod 4)`, spine split into a directed path of length 3 and a
    /// directed path in the opposite direction, both ends blocked by pendants.
    OppositeDirectedPaths,
    /// Directed triangle whose three vertices all have in- and out-pendants.
    DirectedTriangleMixedPendants,
    /// Exhaustive search found no packing 3-coloring.
    NoThreeColoring,
    Generic3,
}

impl Reason {
    pub fn name(self) -> &'static str {
        match self {
            Reason::BipartiteSourcesSinks => "bipartite-sources-sinks",
            Reason::DirectedCycleBadLength => "directed-cycle-bad-length",
            Reason::FourCycleObstruction => "four-cycle-obstruction",
            Reason::OppositeDirectedPaths => "opposite-directed-paths",
            Reason::DirectedTriangleMixedPendants => "directed-triangle-mixed-pendants",
            Reason::NoThreeColoring => "no-three-coloring",
            Reason::Generic3 => "generic-3",
        }
    }

    pub fn value(self) -> u32 {
        match self {
            Reason::BipartiteSourcesSinks => 2,
            Reason::Generic3 => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Reason {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Reason::*;
        [
            BipartiteSourcesSinks,
            DirectedCycleBadLength,
            FourCycleObstruction,
            OppositeDirectedPaths,
            DirectedTriangleMixedPendants,
            NoThreeColoring,
            Generic3,
        ]
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown reason {s:?}")))
    }
}

/// How the witness coloring was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessRoute {
    Construction,
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub value: u32,
    pub reason: Reason,
    pub route: WitnessRoute,
}

impl Classification {
    fn new(reason: Reason, route: WitnessRoute) -> Self {
        Self { value: reason.value(), reason, route }
    }
}

/// Packing 4-coloring of the undirected `C_n`, n ≥ 5, n ≢ 0 (mod 4).
fn four_coloring_cycle(n: usize) -> Vec<u32> {
    let tail: &[u32] = match n % 4 {
        1 => &[1, 2, 1, 3, 4],
        2 => &[1, 2, 1, 3, 1, 4],
        3 => &[1, 2, 1, 3, 2, 1, 4],
        _ => &[],
    };
    let mut v: Vec<u32> = [1, 2, 1, 3].iter().copied().cycle().take(n - tail.len()).collect();
    v.extend_from_slice(tail);
    v
}

/// `(n, dir)` view of a cycle: position k is vertex `start + dir*k (mod n)`.
fn at(n: usize, start: usize, reflect: bool, k: usize) -> usize {
    let k = k % n;
    if reflect {
        (start + n - k) % n
    } else {
        (start + k) % n
    }
}

fn place(n: usize, start: usize, reflect: bool, seq: &[u32]) -> Vec<u32> {
    let mut col = vec![0; n];
    for (k, &c) in seq.iter().enumerate() {
        col[at(n, start, reflect, k)] = c;
    }
    col
}

fn repeat(block: &[u32], times: usize) -> Vec<u32> {
    block.iter().copied().cycle().take(block.len() * times).collect()
}

fn search(og: &OrientedGraph, k: u32) -> Result<Option<Coloring>> {
    match exists_packing_k_coloring(&weak_directed_distances(og), k, &SearchBudget::default()) {
        Decision::Yes(c) => Ok(Some(c)),
        Decision::No => Ok(None),
        Decision::Indeterminate => Err(Error::Indeterminate),
    }
}

/// Packing chromatic number of an oriented cycle with a witness.
pub fn pcn_oriented_cycle(oc: &OrientedGraph) -> Result<(u32, Coloring)> {
    let seq = walk(oc, Family::Cycle)?;
    let n = seq.len();
    if let Some(w) = pcn_two_witness(oc) {
        return Ok((2, w));
    }
    let by_walk = |pos: Vec<u32>| {
        let mut col = vec![0; n];
        for (k, &v) in seq.iter().enumerate() {
            col[v] = pos[k];
        }
        Coloring::new(col)
    };
    let fwd: Vec<bool> = (0..n).map(|k| oc.has_arc(seq[k], seq[(k + 1) % n])).collect();
    let directed = fwd.iter().all(|&f| f) || fwd.iter().all(|&f| !f);
    let mut candidates = Vec::new();
    if directed {
        if n >= 5 && n % 4 != 0 {
            return Ok((4, by_walk(four_coloring_cycle(n))?));
        }
        candidates.push(if n == 3 { vec![1, 2, 3] } else { repeat(&[1, 2, 1, 3], n / 4) });
    } else {
        // anchor at the first source or sink along the walk
        let s = (0..n).find(|&k| fwd[k] != fwd[(k + n - 1) % n]).unwrap_or(0);
        let m = n / 4;
        let pat: Vec<u32> = match n % 4 {
            1 => [vec![1, 2, 3, 1], repeat(&[2, 1, 3, 1], m - 1), vec![2]].concat(),
            2 => [vec![1], repeat(&[2, 1, 3, 1], m), vec![2]].concat(),
            3 => [vec![1, 3], repeat(&[1, 2, 1, 3], m), vec![2]].concat(),
            _ => repeat(&[1, 2, 1, 3], m),
        };
        for reflect in [false, true] {
            candidates.push(place(n, s, reflect, &pat));
        }
    }
    for pos in candidates {
        let col = by_walk(pos)?;
        if is_packing_coloring_oriented(oc, &col) {
            return Ok((3, col));
        }
    }
    match search(oc, 3)? {
        Some(c) => Ok((3, c)),
        None => Err(Error::Internal("oriented cycle without a packing 3-coloring".into())),
    }
}

struct Corona<'a> {
    og: &'a OrientedGraph,
    layout: CoronaLayout,
    n: usize,
}

impl<'a> Corona<'a> {
    fn next(&self, i: usize) -> usize {
        (i + 1) % self.n
    }

    fn prev(&self, i: usize) -> usize {
        (i + self.n - 1) % self.n
    }

    fn cycle_source(&self, i: usize) -> bool {
        self.og.has_arc(i, self.next(i)) && self.og.has_arc(i, self.prev(i))
    }

    fn cycle_sink(&self, i: usize) -> bool {
        self.og.has_arc(self.next(i), i) && self.og.has_arc(self.prev(i), i)
    }

    /// Source or sink of the spine cycle.
    fn in_s(&self, i: usize) -> bool {
        self.cycle_source(i) || self.cycle_sink(i)
    }

    /// Source or sink of the spine cycle that is neither in the whole graph.
    fn in_s_star(&self, i: usize) -> bool {
        self.in_s(i) && !self.og.is_source(i) && !self.og.is_sink(i)
    }

    fn directed(&self) -> bool {
        (0..self.n).all(|i| !self.in_s(i))
    }

    fn mixed_pendants(&self, i: usize) -> bool {
        let mut ps = self.layout.pendants(i);
        let first_in = self.og.has_arc(ps.next().unwrap_or(i), i);
        self.layout.pendants(i).any(|z| self.og.has_arc(z, i) != first_in)
    }

    /// Completes a spine coloring with colors 1..=3 to the pendants so that
    /// (P) holds at every spine vertex of color 1.
    fn extend(&self, spine: &[u32]) -> Coloring {
        let mut col = vec![0u32; self.layout.vertex_count()];
        col[..self.n].copy_from_slice(spine);
        for i in 0..self.n {
            let (pred, succ) = (self.prev(i), self.next(i));
            let alpha = if self.og.has_arc(pred, i) {
                spine[pred]
            } else if self.og.has_arc(succ, i) {
                spine[succ]
            } else {
                5 - spine[pred]
            };
            for z in self.layout.pendants(i) {
                col[z] = match (spine[i], self.og.has_arc(z, i)) {
                    (1, true) => alpha,
                    (1, false) => 5 - alpha,
                    _ => 1,
                };
            }
        }
        Coloring::new(col).expect("colors are positive")
    }

    fn try_spine(&self, spine: &[u32]) -> Option<Coloring> {
        if spine.iter().any(|&c| c == 0 || c > 3) {
            return None;
        }
        let col = self.extend(spine);
        is_packing_coloring_oriented(self.og, &col).then_some(col)
    }

    /// Pendant colors of a directed spine after a coloring along its direction.
    fn extend_directed(&self, spine: &[u32]) -> Coloring {
        let mut col = vec![0u32; self.layout.vertex_count()];
        col[..self.n].copy_from_slice(spine);
        for i in 0..self.n {
            let (pred, succ) =
                if self.og.has_arc(self.prev(i), i) { (self.prev(i), self.next(i)) } else { (self.next(i), self.prev(i)) };
            for z in self.layout.pendants(i) {
                col[z] = if self.og.has_arc(z, i) { spine[pred] } else { spine[succ] };
            }
        }
        Coloring::new(col).expect("colors are positive")
    }

    /// Packing 4-coloring: a spine source gets 4, its pendants 1, and the
    /// remaining path corona is 3-colored.
    fn remove_source(&self) -> Result<Coloring> {
        let s = (0..self.n)
            .find(|&i| self.cycle_source(i))
            .ok_or_else(|| Error::Internal("spine cycle has no source".into()))?;
        let (n, p) = (self.n, self.layout.p);
        let spine: Vec<usize> = (1..n).map(|k| (s + k) % n).collect();
        let mut keep = spine.clone();
        for &i in &spine {
            keep.extend(self.layout.pendants(i));
        }
        let sub = self.og.induced(&keep)?.with_base_layout(Some(CoronaLayout { family: Family::Path, n: n - 1, p }))?;
        let sub_col = color_oriented_path_corona(&sub)?;
        let mut col = vec![1u32; self.layout.vertex_count()];
        for (j, &v) in keep.iter().enumerate() {
            col[v] = sub_col.get(j);
        }
        col[s] = 4;
        Coloring::new(col)
    }

    /// SCP along the whole cycle from `start`, with `S` given by `in_s`.
    fn scp_cycle(&self, start: usize, c: u32, c2: u32, in_s: impl Fn(usize) -> bool) -> Vec<u32> {
        let n = self.n;
        let seq = scp_sequence(n, c, c2, |k| in_s((start + k) % n));
        place(n, start, false, &seq)
    }

    /// Fixed colors on a stretch starting at view position 0, the rest of the
    /// cycle filled by SCP with `S = S*`.
    fn segment_fill(&self, start: usize, reflect: bool, seg: &[u32]) -> Option<Vec<u32>> {
        let n = self.n;
        if seg.len() > n {
            return None;
        }
        let mut pos = seg.to_vec();
        for k in seg.len()..n {
            let c = if pos[k - 1] != 1 {
                1
            } else if self.in_s_star(at(n, start, reflect, k - 1)) {
                pos[k - 2]
            } else {
                5 - pos[k - 2]
            };
            pos.push(c);
        }
        Some(place(n, start, reflect, &pos))
    }

    /// The three documented obstructions to a packing 3-coloring.
    fn obstruction(&self) -> Option<Reason> {
        let n = self.n;
        if self.directed() {
            return (n >= 5 && n % 4 != 0).then_some(Reason::DirectedCycleBadLength);
        }
        let s: Vec<usize> = (0..n).filter(|&i| self.in_s(i)).collect();
        if n % 4 != 0 || s.len() != 2 || !s.iter().all(|&i| self.in_s_star(i)) {
            return None;
        }
        let d = (s[1] - s[0]).min(n - (s[1] - s[0]));
        match (n, d) {
            (4, 1) => Some(Reason::FourCycleObstruction),
            (_, 3) if n >= 8 => Some(Reason::OppositeDirectedPaths),
            _ => None,
        }
    }

    /// Spine colorings following the constructive case analysis, in order.
    fn candidates(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut out = Vec::new();
        let s_all: Vec<usize> = (0..n).filter(|&i| self.in_s(i)).collect();
        if n % 2 == 1 {
            let x0 = *s_all.iter().find(|&&i| self.cycle_source(i)).unwrap_or(&s_all[0]);
            let first = self.scp_cycle(x0, 2, 1, |i| self.in_s(i));
            if first[self.prev(x0)] == 3 {
                out.push(first);
            } else {
                out.push(self.scp_cycle(self.next(x0), 3, 1, |i| self.in_s(i)));
            }
            return out;
        }
        let want = (n / 2) % 2;
        for part in [0, 1] {
            let star: Vec<usize> = (part..n).step_by(2).filter(|&i| self.in_s_star(i)).collect();
            let extra: Vec<usize> = (part..n).step_by(2).filter(|&i| self.in_s(i) && !self.in_s_star(i)).collect();
            let chosen = if star.len() % 2 == want {
                Some(None)
            } else {
                extra.first().map(|&v| Some(v))
            };
            if let Some(add) = chosen {
                out.push(self.scp_cycle(part, 1, 2, |i| self.in_s_star(i) || Some(i) == add));
            }
        }
        let star: Vec<usize> = (0..n).filter(|&i| self.in_s_star(i)).collect();
        if star.len() == 2 && s_all.len() == 2 && n % 4 == 0 {
            let src = star.iter().copied().find(|&i| self.cycle_source(i)).unwrap_or(star[0]);
            let other = star.iter().copied().find(|&i| i != src).unwrap_or(star[1]);
            let i = (other + n - src) % n;
            let pat = if i == 1 {
                [vec![1, 2], repeat(&[3, 1, 2, 1], (n - 4) / 4), vec![3, 2]].concat()
            } else if i % 4 == 1 {
                [vec![1], repeat(&[2, 1, 3, 1], (i - 1) / 4), vec![2], repeat(&[3, 1, 2, 1], (n - 3 - i) / 4), vec![3, 2]]
                    .concat()
            } else if i % 4 == 3 && i >= 7 {
                [vec![1, 2, 3], repeat(&[1, 2, 1, 3], (i - 3) / 4), vec![2], repeat(&[1, 3, 1, 2], (n - 1 - i) / 4)].concat()
            } else {
                Vec::new()
            };
            if pat.len() == n {
                out.push(place(n, src, false, &pat));
            }
        }
        // rewrites around a pair a, b of S* at odd distance along a directed stretch
        let mut pairs: Vec<(usize, usize, bool, usize)> = Vec::new();
        for &a in &star {
            for reflect in [false, true] {
                let mut d = 1;
                while d < n && !self.in_s(at(n, a, reflect, d)) {
                    d += 1;
                }
                let b = at(n, a, reflect, d);
                if d < n && d % 2 == 1 && self.in_s_star(b) {
                    pairs.push((d, a, reflect, b));
                }
            }
        }
        let rank = |d: usize| if d == 1 { 0 } else if d % 4 == 1 { 1 } else { 2 };
        pairs.sort_by_key(|&(d, a, reflect, _)| (rank(d), d, a, reflect));
        for (d, a, reflect, _) in pairs {
            let seg_start = |back: usize| at(n, a, !reflect, back);
            let found = if d == 1 {
                self.segment_fill(seg_start(2), reflect, &[1, 3, 2, 1, 2, 3, 1])
            } else if d % 4 == 1 {
                let seg = [vec![1, 3, 2, 1], repeat(&[2, 1, 3, 1], (d - 1) / 4), vec![2, 3, 1]].concat();
                self.segment_fill(seg_start(3), reflect, &seg)
            } else if d >= 7 {
                let seg = [vec![1, 2, 3], repeat(&[1, 2, 1, 3], (d - 3) / 4), vec![2, 1, 2]].concat();
                self.segment_fill(seg_start(1), reflect, &seg)
            } else {
                None
            };
            out.extend(found);
        }
        out
    }
}

/// Which of the documented value-4 conditions an oriented `C_n⊙pK_1`
/// meets: a directed spine of bad length, or a single source and sink, both
/// blocked by pendants, splitting the spine into directed paths of lengths 3
/// and `n - 3` with `n ≡ 0 (mod 4)`. Other orientations may still need 4 colors.
pub fn stated_obstruction(og: &OrientedGraph) -> Result<Option<Reason>> {
    let layout = corona_layout(og, Family::Cycle)?;
    Ok(Corona { og, layout, n: layout.n }.obstruction())
}

/// Classifies an oriented `C_n⊙pK_1` by its packing chromatic number and
/// returns a witness coloring with that many colors.
pub fn classify_oriented_cycle_corona(og: &OrientedGraph) -> Result<(Classification, Coloring)> {
    use Reason::*;
    use WitnessRoute::*;
    let layout = corona_layout(og, Family::Cycle)?;
    let c = Corona { og, layout, n: layout.n };
    let n = c.n;
    if let Some(w) = pcn_two_witness(og) {
        return Ok((Classification::new(BipartiteSourcesSinks, Construction), w));
    }
    let finish = |reason: Reason, built: Option<Coloring>| -> Result<(Classification, Coloring)> {
        if let Some(col) = built.filter(|col| is_packing_coloring_oriented(og, col)) {
            return Ok((Classification::new(reason, Construction), col));
        }
        match search(og, reason.value())? {
            Some(col) => Ok((Classification::new(reason, Search), col)),
            None => Err(Error::Internal(format!("no packing {}-coloring for {reason}", reason.value()))),
        }
    };
    if c.directed() {
        if c.obstruction().is_some() {
            let order: Vec<usize> = (0..n).map(|k| at(n, 0, !og.has_arc(0, 1), k)).collect();
            let mut spine = vec![0; n];
            for (k, &c) in four_coloring_cycle(n).iter().enumerate() {
                spine[order[k]] = c;
            }
            return finish(DirectedCycleBadLength, Some(c.extend_directed(&spine)));
        }
        if n == 3 && (0..3).all(|i| c.mixed_pendants(i)) {
            let mut col = vec![1u32; layout.vertex_count()];
            col[..3].copy_from_slice(&[2, 3, 4]);
            return finish(DirectedTriangleMixedPendants, Some(Coloring::new(col)?));
        }
        let forward = og.has_arc(0, 1);
        let spine = if n == 3 {
            let v = (0..3).find(|&i| !c.mixed_pendants(i)).unwrap_or(0);
            let (pred, succ) = if forward { (c.prev(v), c.next(v)) } else { (c.next(v), c.prev(v)) };
            let all_in = og.has_arc(layout.pendant(v, 0), v);
            let mut s = vec![0; 3];
            s[v] = 1;
            s[pred] = if all_in { 2 } else { 3 };
            s[succ] = 5 - s[pred];
            s
        } else {
            place(n, 0, !forward, &repeat(&[1, 2, 1, 3], n / 4))
        };
        return finish(Generic3, c.try_spine(&spine));
    }
    if let Some(reason) = c.obstruction() {
        return finish(reason, Some(c.remove_source()?));
    }
    // every good 3-coloring of the spine extends
    let cycle_witness = {
        let spine = og.induced(&(0..n).collect::<Vec<_>>())?;
        let (_, w) = pcn_oriented_cycle(&spine)?;
        w.into_inner()
    };
    let mut tries = vec![cycle_witness];
    tries.extend(c.candidates());
    for spine in &tries {
        if let Some(col) = c.try_spine(spine) {
            return Ok((Classification::new(Generic3, Construction), col));
        }
    }
    match search(og, 3)? {
        Some(col) => Ok((Classification::new(Generic3, Search), col)),
        None => finish(NoThreeColoring, Some(c.remove_source()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{enumerate_orientations, orient_arcs};
    use crate::graph::Graph;
    use crate::solver::pcn;

    fn solver_pcn(og: &OrientedGraph) -> u32 {
        pcn(&weak_directed_distances(og), &SearchBudget::default()).unwrap().0
    }

    #[test]
    fn four_colorings_of_cycles() {
        let g = |n| Graph::cycle(n).unwrap();
        for n in 5..40 {
            if n % 4 != 0 {
                let col = Coloring::new(four_coloring_cycle(n)).unwrap();
                assert!(crate::coloring::is_packing_coloring_graph(&g(n), &col), "n={n}");
            }
        }
    }

    #[test]
    fn cycles_match_solver() {
        for n in 3..=9 {
            for oc in enumerate_orientations(&Graph::cycle(n).unwrap(), 24).unwrap() {
                let (k, w) = pcn_oriented_cycle(&oc).unwrap();
                assert!(is_packing_coloring_oriented(&oc, &w) && w.max_color() == k);
                assert_eq!(k, solver_pcn(&oc), "{:?}", oc.dirs());
            }
        }
    }

    #[test]
    fn cycle_examples() {
        let directed = |n: usize| OrientedGraph::from_arcs(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap();
        assert_eq!(pcn_oriented_cycle(&directed(5)).unwrap().0, 4);
        assert_eq!(pcn_oriented_cycle(&directed(8)).unwrap().0, 3);
        let alt = OrientedGraph::from_arcs(6, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]).unwrap();
        assert_eq!(pcn_oriented_cycle(&alt).unwrap().0, 2);
    }

    fn corona(n: usize, p: usize, spine: &[(usize, usize)], pendant_in: impl Fn(usize, usize) -> bool) -> OrientedGraph {
        let g = Graph::family(Family::Cycle, n, p).unwrap();
        let l = *g.layout().unwrap();
        let mut arcs = spine.to_vec();
        for i in 0..n {
            for j in 0..p {
                let z = l.pendant(i, j);
                arcs.push(if pendant_in(i, j) { (z, i) } else { (i, z) });
            }
        }
        orient_arcs(&g, &arcs).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let (cl, w) = classify_oriented_cycle_corona(&corona(5, 1, &c5, |i, _| i % 2 == 0)).unwrap();
        assert_eq!((cl.value, cl.reason), (4, Reason::DirectedCycleBadLength));
        assert_eq!(w.max_color(), 4);

        // source 0, sink 3, both blocked by a pendant
        let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
        let og = corona(4, 1, &c4, |i, _| i == 0);
        assert_eq!(classify_oriented_cycle_corona(&og).unwrap().0.reason, Reason::FourCycleObstruction);
        assert_eq!(solver_pcn(&og), 4);

        let c8 = [(0, 1), (1, 2), (2, 3), (0, 7), (7, 6), (6, 5), (5, 4), (4, 3)];
        let og = corona(8, 1, &c8, |i, _| i == 0);
        let (cl, w) = classify_oriented_cycle_corona(&og).unwrap();
        assert_eq!((cl.value, cl.reason), (4, Reason::OppositeDirectedPaths));
        assert!(is_packing_coloring_oriented(&og, &w));
        assert_eq!(solver_pcn(&og), 4);

        let alt = [(0, 1), (2, 1), (2, 3), (0, 3)];
        let og = corona(4, 2, &alt, |i, _| i % 2 == 1);
        assert_eq!(classify_oriented_cycle_corona(&og).unwrap().0.value, 2);
    }

    #[test]
    fn directed_triangles() {
        let c3 = [(0, 1), (1, 2), (2, 0)];
        for p in 1..=3 {
            for mask in 0..1u32 << (3 * p) {
                let og = corona(3, p, &c3, |i, j| (mask >> (i * p + j)) & 1 == 1);
                let (cl, w) = classify_oriented_cycle_corona(&og).unwrap();
                assert!(is_packing_coloring_oriented(&og, &w));
                assert_eq!(cl.value, solver_pcn(&og), "p={p} mask={mask:b}");
                assert_eq!(cl.route, WitnessRoute::Construction);
            }
        }
    }

    #[test]
    fn small_coronae_match_solver() {
        for n in 3..=5 {
            let g = Graph::family(Family::Cycle, n, 1).unwrap();
            for og in enumerate_orientations(&g, 24).unwrap() {
                let (cl, w) = classify_oriented_cycle_corona(&og).unwrap();
                assert!(is_packing_coloring_oriented(&og, &w));
                assert_eq!(w.max_color(), cl.value);
                assert_eq!(cl.value, solver_pcn(&og), "n={n} {:?}", og.dirs());
            }
        }
    }

    #[test]
    fn reason_names_round_trip() {
        for r in ["generic-3", "four-cycle-obstruction", "bipartite-sources-sinks"] {
            assert_eq!(r.parse::<Reason>().unwrap().name(), r);
        }
    }
}
