//! Exact search for packing colorings over a [`DistanceMatrix`].
//!
//! Backtracking in a static order (descending degree, ties by index) with
//! forward checking: every placement of color `c` at `v` blocks `c` on the ball
//! `B_c(v)`, and a branch dies as soon as an uncolored vertex has no color left.
//! Decision search also orders colors on twin vertices (equal distance rows,
//! e.g. pendants of one spine vertex); counting does not.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{is_packing_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix};

pub use crate::coloring::{first_violation, Violation};

pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest color the search may use.
    pub max_color: u32,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_color: u32::MAX, node_limit: Some(DEFAULT_NODE_LIMIT), time_limit: None }
    }
}

impl SearchBudget {
    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), ..Default::default() }
    }
}

/// Worker count and witness policy. With `deterministic` the witness is the
/// lexicographically smallest valid assignment in search order, whatever the
/// thread count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub threads: usize,
    pub deterministic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(Coloring),
    No,
    Indeterminate,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PcnOutcome {
    Exact { k: u32, witness: Coloring },
    /// Budget ran out; the true value lies in `lower..=upper`.
    Indeterminate { lower: u32, upper: u32 },
}

impl PcnOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            PcnOutcome::Exact { k, .. } => Some(*k),
            PcnOutcome::Indeterminate { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountOutcome {
    Exact(u64),
    Indeterminate { at_least: u64 },
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    node_limit: u64,
    flush: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(b: &SearchBudget) -> Self {
        Shared {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            node_limit: b.node_limit.unwrap_or(u64::MAX),
            flush: b.node_limit.unwrap_or(u64::MAX).clamp(1, 1024),
            deadline: b.time_limit.map(|t| Instant::now() + t),
        }
    }

    fn exhausted(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

/// Static part of one k-search.
struct Problem {
    n: usize,
    k: usize,
    order: Vec<usize>,
    ball: Vec<Vec<u32>>,
    /// `ball_end[v * (k + 1) + c]`: prefix of `ball[v]` within distance `c`.
    ball_end: Vec<u32>,
    twin_prev: Vec<Option<usize>>,
}

/// Search order: descending degree, ties by index.
pub fn search_order(dm: &DistanceMatrix) -> Vec<usize> {
    let mut order: Vec<usize> = (0..dm.len()).collect();
    let deg: Vec<usize> = (0..dm.len()).map(|v| dm.degree(v)).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    order
}

fn twins(dm: &DistanceMatrix, order: &[usize]) -> Vec<Option<usize>> {
    let n = dm.len();
    let mut prev = vec![None; n];
    let nbrs: Vec<Vec<usize>> =
        (0..n).map(|v| (0..n).filter(|&u| dm.get(u, v) == Distance::Finite(1)).collect()).collect();
    let mut last_in_class: Vec<(usize, usize)> = Vec::new();
    for &v in order {
        let found = last_in_class.iter_mut().find(|(rep, _)| {
            nbrs[*rep] == nbrs[v] && (0..n).all(|w| w == *rep || w == v || dm.get(*rep, w) == dm.get(v, w))
        });
        match found {
            Some(entry) => {
                prev[v] = Some(entry.1);
                entry.1 = v;
            }
            None => last_in_class.push((v, v)),
        }
    }
    prev
}

impl Problem {
    fn new(dm: &DistanceMatrix, k: usize, symmetry: bool) -> Self {
        let n = dm.len();
        let order = search_order(dm);
        let mut ball = Vec::with_capacity(n);
        let mut ball_end = vec![0u32; n * (k + 1)];
        for v in 0..n {
            let mut b: Vec<(u32, u32)> = (0..n)
                .filter(|&u| u != v)
                .filter_map(|u| match dm.get(u, v) {
                    Distance::Finite(d) if (d as usize) <= k => Some((d, u as u32)),
                    _ => None,
                })
                .collect();
            b.sort_unstable();
            for c in 0..=k {
                ball_end[v * (k + 1) + c] = b.partition_point(|&(d, _)| d as usize <= c) as u32;
            }
            ball.push(b.into_iter().map(|(_, u)| u).collect());
        }
        let twin_prev = if symmetry { twins(dm, &order) } else { vec![None; n] };
        Problem { n, k, order, ball, ball_end, twin_prev }
    }
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct State<'a> {
    pb: &'a Problem,
    color: Vec<u32>,
    blocked: Vec<u32>,
    avail: Vec<u32>,
    shared: &'a Shared,
    local_nodes: u64,
    count: u64,
    counting: bool,
}

impl<'a> State<'a> {
    fn new(pb: &'a Problem, shared: &'a Shared, counting: bool) -> Self {
        State {
            pb,
            color: vec![0; pb.n],
            blocked: vec![0; pb.n * (pb.k + 1)],
            avail: vec![pb.k as u32; pb.n],
            shared,
            local_nodes: 0,
            count: 0,
            counting,
        }
    }

    /// Places `c` at `v`; false when some uncolored vertex is left without options.
    fn place(&mut self, v: usize, c: usize) -> bool {
        let k1 = self.pb.k + 1;
        self.color[v] = c as u32;
        let end = self.pb.ball_end[v * k1 + c] as usize;
        let mut ok = true;
        for &u in &self.pb.ball[v][..end] {
            let u = u as usize;
            let b = &mut self.blocked[u * k1 + c];
            if *b == 0 {
                self.avail[u] -= 1;
                if self.avail[u] == 0 && self.color[u] == 0 {
                    ok = false;
                }
            }
            *b += 1;
        }
        ok
    }

    fn unplace(&mut self, v: usize, c: usize) {
        let k1 = self.pb.k + 1;
        let end = self.pb.ball_end[v * k1 + c] as usize;
        for &u in &self.pb.ball[v][..end] {
            let u = u as usize;
            let b = &mut self.blocked[u * k1 + c];
            *b -= 1;
            if *b == 0 {
                self.avail[u] += 1;
            }
        }
        self.color[v] = 0;
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        let s = self.shared;
        if self.local_nodes % s.flush == 0 {
            let total = s.nodes.fetch_add(s.flush, Ordering::Relaxed) + s.flush;
            if total > s.node_limit || s.deadline.is_some_and(|d| Instant::now() >= d) {
                s.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.exhausted()
    }

    fn options(&self, v: usize) -> std::ops::RangeInclusive<usize> {
        let lo = match self.pb.twin_prev[v] {
            Some(t) => self.color[t] as usize,
            None => 1,
        };
        lo.max(1)..=self.pb.k
    }

    fn dfs(&mut self, pos: usize, cancel: &dyn Fn() -> bool) -> Flow {
        if pos == self.pb.n {
            if self.counting {
                self.count += 1;
                return Flow::Exhausted;
            }
            return Flow::Found;
        }
        let v = self.pb.order[pos];
        for c in self.options(v) {
            if self.blocked[v * (self.pb.k + 1) + c] != 0 {
                continue;
            }
            if !self.tick() || cancel() {
                return Flow::Abort;
            }
            let ok = self.place(v, c);
            if ok {
                match self.dfs(pos + 1, cancel) {
                    Flow::Found => return Flow::Found,
                    Flow::Abort => {
                        self.unplace(v, c);
                        return Flow::Abort;
                    }
                    Flow::Exhausted => {}
                }
            }
            self.unplace(v, c);
        }
        Flow::Exhausted
    }

    fn witness(&self) -> Coloring {
        Coloring::new(self.color.clone()).expect("complete assignment")
    }
}

fn decide(dm: &DistanceMatrix, k: usize, shared: &Shared, opts: &SearchOptions) -> Decision {
    let n = dm.len();
    if n == 0 {
        return Decision::Yes(Coloring::new(Vec::new()).unwrap());
    }
    if k == 0 {
        return Decision::No;
    }
    let pb = Problem::new(dm, k, true);
    let threads = opts.threads.max(1);
    if threads == 1 {
        let mut st = State::new(&pb, shared, false);
        return match st.dfs(0, &|| false) {
            Flow::Found => Decision::Yes(st.witness()),
            Flow::Exhausted => Decision::No,
            Flow::Abort => Decision::Indeterminate,
        };
    }
    // split on the colors of the first vertex in the order
    let first = pb.order[0];
    let branches: Vec<usize> = (1..=k).collect();
    let best = AtomicUsize::new(usize::MAX);
    let run = |c: usize| -> (usize, Decision) {
        let mut st = State::new(&pb, shared, false);
        if !st.place(first, c) && pb.n > 1 {
            return (c, Decision::No);
        }
        let cancel = || {
            let b = best.load(Ordering::Relaxed);
            if opts.deterministic { b < c } else { b != usize::MAX }
        };
        let out = match st.dfs(1, &cancel) {
            Flow::Found => {
                best.fetch_min(c, Ordering::Relaxed);
                Decision::Yes(st.witness())
            }
            Flow::Exhausted => Decision::No,
            Flow::Abort => Decision::Indeterminate,
        };
        (c, out)
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
    let results: Vec<(usize, Decision)> = match pool {
        Ok(p) => p.install(|| branches.par_iter().map(|&c| run(c)).collect()),
        Err(_) => branches.iter().map(|&c| run(c)).collect(),
    };
    let cut = best.load(Ordering::Relaxed);
    if cut != usize::MAX {
        if opts.deterministic {
            let lower_open = results.iter().any(|(c, d)| *c < cut && *d == Decision::Indeterminate);
            if lower_open {
                return Decision::Indeterminate;
            }
            return results.into_iter().find(|(c, _)| *c == cut).map(|x| x.1).unwrap();
        }
        return results.into_iter().find(|(_, d)| d.is_yes()).map(|x| x.1).unwrap();
    }
    if results.iter().any(|(_, d)| *d == Decision::Indeterminate) {
        Decision::Indeterminate
    } else {
        Decision::No
    }
}

/// Is there a packing coloring with colors `1..=k`?
pub fn exists_packing_k_coloring(dm: &DistanceMatrix, k: u32, budget: &SearchBudget) -> Decision {
    exists_packing_k_coloring_with(dm, k, budget, &SearchOptions::default())
}

pub fn exists_packing_k_coloring_with(
    dm: &DistanceMatrix,
    k: u32,
    budget: &SearchBudget,
    opts: &SearchOptions,
) -> Decision {
    let shared = Shared::new(budget);
    let k = k.min(dm.len().max(1) as u32);
    let d = decide(dm, k as usize, &shared, opts);
    if let Decision::Yes(w) = &d {
        assert!(is_packing_coloring(dm, w), "solver produced an invalid witness");
    }
    d
}

/// First-fit in search order with unbounded colors.
pub fn greedy_coloring(dm: &DistanceMatrix) -> Coloring {
    let n = dm.len();
    let mut col = vec![0u32; n];
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    for v in search_order(dm) {
        let mut banned: Vec<bool> = vec![false; n + 2];
        for &u in &placed {
            let c = col[u];
            if dm.get(u, v).within(c) && (c as usize) < banned.len() {
                banned[c as usize] = true;
            }
        }
        col[v] = (1..).find(|&c| !banned[c]).unwrap() as u32;
        placed.push(v);
    }
    Coloring::new(col).expect("colors start at 1")
}

pub fn packing_chromatic_number(dm: &DistanceMatrix, budget: &SearchBudget) -> PcnOutcome {
    packing_chromatic_number_with(dm, budget, &SearchOptions::default())
}

/// Iterative deepening upward from 1; the greedy coloring caps the search.
pub fn packing_chromatic_number_with(
    dm: &DistanceMatrix,
    budget: &SearchBudget,
    opts: &SearchOptions,
) -> PcnOutcome {
    if dm.is_empty() {
        return PcnOutcome::Exact { k: 0, witness: Coloring::new(Vec::new()).unwrap() };
    }
    let greedy = greedy_coloring(dm);
    let ub = greedy.max_color();
    let shared = Shared::new(budget);
    for k in 1..ub {
        if k > budget.max_color {
            return PcnOutcome::Indeterminate { lower: k, upper: ub };
        }
        match decide(dm, k as usize, &shared, opts) {
            Decision::Yes(w) => {
                assert!(is_packing_coloring(dm, &w), "solver produced an invalid witness");
                return PcnOutcome::Exact { k, witness: w };
            }
            Decision::No => {}
            Decision::Indeterminate => return PcnOutcome::Indeterminate { lower: k, upper: ub },
        }
    }
    if ub > budget.max_color {
        return PcnOutcome::Indeterminate { lower: ub, upper: ub };
    }
    PcnOutcome::Exact { k: ub, witness: greedy }
}

/// Number of labeled packing colorings with colors in `1..=k`.
pub fn count_packing_k_colorings(dm: &DistanceMatrix, k: u32, budget: &SearchBudget) -> CountOutcome {
    if dm.is_empty() {
        return CountOutcome::Exact(1);
    }
    if k == 0 {
        return CountOutcome::Exact(0);
    }
    let shared = Shared::new(budget);
    let pb = Problem::new(dm, k as usize, false);
    let mut st = State::new(&pb, &shared, true);
    match st.dfs(0, &|| false) {
        Flow::Abort => CountOutcome::Indeterminate { at_least: st.count },
        _ => CountOutcome::Exact(st.count),
    }
}

/// Convenience: exact pcn or an error on exhaustion.
pub fn pcn(dm: &DistanceMatrix, budget: &SearchBudget) -> Result<(u32, Coloring)> {
    match packing_chromatic_number(dm, budget) {
        PcnOutcome::Exact { k, witness } => Ok((k, witness)),
        PcnOutcome::Indeterminate { .. } => Err(Error::Indeterminate),
    }
}
