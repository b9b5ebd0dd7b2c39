//! Verification suites: each checks one family of results over a grid of
//! parameters and reports every grid point.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_form::{
    construct_coloring, forced_color_lower_bound, pcn_closed_form, cycle_3k1_composition, FamilyQuery, GraphFamily,
    SpinePosition,
};
use crate::coloring::{has_property_p, is_packing_coloring_oriented, Coloring};
use crate::digraph::{enumerate_orientations, orient, weak_directed_distances, OrientedGraph};
use crate::error::{Error, Result};
use crate::graph::{distances, Distance, DistanceMatrix, Family, Graph};
use crate::library as lib;
use crate::oriented::{
    classify_oriented_cycle_corona, color_oriented_tree, is_pcn_two, pcn_oriented_cycle, pcn_oriented_path,
    pcn_oriented_path_corona, scp, scp_endpoint_color, stated_obstruction, ScpConfig,
};
use crate::pattern::{is_compatible, is_valid_pattern, parse_pattern, ApplyOptions};
use crate::solver::{exists_packing_k_coloring, packing_chromatic_number, Decision, PcnOutcome, SearchBudget};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Overrides the main size bound of a suite.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub budget: SearchBudget,
    /// Worker threads; 0 uses every core.
    pub threads: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: None, seed: DEFAULT_SEED, budget: SearchBudget::default(), threads: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Indeterminate,
}

impl Status {
    fn check(ok: bool, msg: impl FnOnce() -> String) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail(msg())
        }
    }

    fn from_result(r: Result<Status>) -> Status {
        match r {
            Ok(s) => s,
            Err(Error::Indeterminate) => Status::Indeterminate,
            Err(e) => Status::Fail(e.to_string()),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("PASS"),
            Status::Fail(m) => write!(f, "FAIL ({m})"),
            Status::Indeterminate => f.write_str("INDETERMINATE"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PointResult {
    pub label: String,
    pub status: Status,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: &'static str,
    pub title: &'static str,
    pub points: Vec<PointResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| matches!(p.status, Status::Fail(_))).count()
    }

    pub fn indeterminate(&self) -> usize {
        self.points.iter().filter(|p| p.status == Status::Indeterminate).count()
    }
}

type Check = Box<dyn Fn() -> Result<Status> + Send + Sync>;

struct Point {
    label: String,
    check: Check,
}

fn point(label: impl Into<String>, f: impl Fn() -> Result<Status> + Send + Sync + 'static) -> Point {
    Point { label: label.into(), check: Box::new(f) }
}

pub struct Suite {
    pub id: &'static str,
    pub title: &'static str,
    build: fn(&VerifyConfig) -> Vec<Point>,
}

pub fn suites() -> Vec<Suite> {
    let s = |id, title, build| Suite { id, title, build };
    vec![
        s("plain", "paths and cycles", plain as fn(&VerifyConfig) -> Vec<Point>),
        s("CrPn", "P_n⊙K_1", crpn),
        s("CrCn", "C_n⊙K_1", crcn),
        s("PnpK1", "P_n⊙pK_1, p ≥ 4", pnpk1),
        s("Pn2K1", "P_n⊙2K_1", pn2k1),
        s("Pn3K1", "P_n⊙3K_1", pn3k1),
        s("CnpK1", "C_n⊙pK_1, p ≥ 4", cnpk1),
        s("Cn2K1", "C_n⊙2K_1", cn2k1),
        s("Cn3K1", "C_n⊙3K_1", cn3k1),
        s("library", "stored patterns", library),
        s("blocks", "C_n⊙3K_1 6-color patterns and their compositions", blocks),
        s("forced", "color 1 on a spine vertex forces degree + 1 colors", forced),
        s("orPn", "oriented paths", or_pn),
        s("orCn", "oriented cycles", or_cn),
        s("orPnpK1", "oriented P_n⊙pK_1", or_pnpk1),
        s("orCnpK1", "oriented C_n⊙pK_1", or_cnpk1),
        s("scp", "standard coloring procedure parity", scp_suite),
        s("ortree", "oriented trees", or_tree),
        s("subgraph", "induced subgraphs never need more colors", subgraph),
        s("orientation", "orientations never need more colors", orientation),
    ]
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(id: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    let all = suites();
    let chosen: Vec<&Suite> = if id == "all" {
        all.iter().collect()
    } else {
        let s = all
            .iter()
            .find(|s| s.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {id:?}")))?;
        vec![s]
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(chosen
        .into_iter()
        .map(|s| {
            let points = (s.build)(cfg);
            let results = pool.install(|| {
                points
                    .par_iter()
                    .map(|p| PointResult { label: p.label.clone(), status: Status::from_result((p.check)()) })
                    .collect()
            });
            SuiteReport { id: s.id, title: s.title, points: results }
        })
        .collect())
}

fn query(f: GraphFamily, n: usize, p: usize) -> Result<FamilyQuery> {
    FamilyQuery::new(f, n, p)
}

/// Solver confirmation that `k` colors are needed: no packing (k-1)-coloring.
fn needs(dm: &DistanceMatrix, k: u32, budget: &SearchBudget) -> Result<bool> {
    if k <= 1 {
        return Ok(true);
    }
    match exists_packing_k_coloring(dm, k - 1, budget) {
        Decision::No => Ok(true),
        Decision::Yes(_) => Ok(false),
        Decision::Indeterminate => Err(Error::Indeterminate),
    }
}

fn solver_pcn(dm: &DistanceMatrix, budget: &SearchBudget) -> Result<u32> {
    match packing_chromatic_number(dm, budget) {
        PcnOutcome::Exact { k, .. } => Ok(k),
        PcnOutcome::Indeterminate { .. } => Err(Error::Indeterminate),
    }
}

/// Closed form plus construction for every n in `build`, and solver
/// optimality for every n in `solve`.
fn family_points(
    cfg: &VerifyConfig,
    f: GraphFamily,
    ps: &[usize],
    build: std::ops::RangeInclusive<usize>,
    solve: std::ops::RangeInclusive<usize>,
) -> Vec<Point> {
    let solve_hi = cfg.max_n.unwrap_or(*solve.end());
    let mut out = Vec::new();
    for &p in ps {
        for n in *build.start()..=(*build.end()).max(solve_hi) {
            let with_solver = n >= *solve.start() && n <= solve_hi;
            if !with_solver && !build.contains(&n) {
                continue;
            }
            let budget = cfg.budget.clone();
            out.push(point(format!("{f} n={n} p={p}"), move || {
                let q = query(f, n, p)?;
                let k = pcn_closed_form(&q)?;
                // validated inside, with exactly k colors
                construct_coloring(&q)?;
                if !with_solver {
                    return Ok(Status::Pass);
                }
                let ok = needs(&distances(&q.graph()?), k, &budget)?;
                Ok(Status::check(ok, || format!("a packing {}-coloring exists", k - 1)))
            }));
        }
    }
    out
}

fn plain(cfg: &VerifyConfig) -> Vec<Point> {
    let mut v = family_points(cfg, GraphFamily::Path, &[0], 1..=200, 1..=16);
    v.extend(family_points(cfg, GraphFamily::Cycle, &[0], 3..=200, 3..=16));
    v
}

fn crpn(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::PathCorona, &[1], 1..=200, 1..=12)
}

fn crcn(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::CycleCorona, &[1], 3..=200, 3..=10)
}

fn pnpk1(cfg: &VerifyConfig) -> Vec<Point> {
    let mut v = family_points(cfg, GraphFamily::PathCorona, &[4], 1..=120, 1..=8);
    v.extend(family_points(cfg, GraphFamily::PathCorona, &[5, 6], 1..=120, 1..=4));
    v
}

fn pn2k1(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::PathCorona, &[2], 1..=200, 1..=12)
}

fn pn3k1(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::PathCorona, &[3], 1..=200, 1..=10)
}

fn cnpk1(cfg: &VerifyConfig) -> Vec<Point> {
    let mut v = family_points(cfg, GraphFamily::CycleCorona, &[4], 3..=120, 3..=7);
    v.extend(family_points(cfg, GraphFamily::CycleCorona, &[5, 6], 3..=120, 3..=5));
    v
}

fn cn2k1(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::CycleCorona, &[2], 3..=200, 3..=9)
}

fn cn3k1(cfg: &VerifyConfig) -> Vec<Point> {
    family_points(cfg, GraphFamily::CycleCorona, &[3], 3..=300, 3..=8)
}

fn library(_: &VerifyConfig) -> Vec<Point> {
    lib::all()
        .into_iter()
        .map(|st| {
            point(format!("{} p={}", st.text, st.p), move || {
                let opts = match st.defaults {
                    Some(d) => ApplyOptions::with_defaults(d),
                    None => ApplyOptions::default(),
                };
                let pat = parse_pattern(st.text)?;
                Ok(Status::check(is_valid_pattern(&pat, st.p, &opts), || "invalid".into()))
            })
        })
        .collect()
}

fn blocks(cfg: &VerifyConfig) -> Vec<Point> {
    let opts = || ApplyOptions::with_defaults(&lib::CYCLE_3K1_PENDANTS);
    let mut v = Vec::new();
    for (n, text) in lib::CYCLE_3K1_BLOCKS {
        v.push(point(format!("pattern n={n}"), move || {
            let pat = parse_pattern(text)?;
            Ok(Status::check(pat.len() == n && is_valid_pattern(&pat, 3, &opts()), || "invalid".into()))
        }));
    }
    v.push(point("pairwise compatible (169 pairs)", move || {
        let pats: Vec<_> = lib::CYCLE_3K1_BLOCKS.iter().map(|(_, t)| parse_pattern(t)).collect::<Result<_>>()?;
        let bad: Vec<String> = pats
            .iter()
            .enumerate()
            .flat_map(|(i, u)| pats.iter().enumerate().map(move |(j, w)| (i, u, j, w)))
            .filter(|(_, u, _, w)| !is_compatible(u, &w.linear(), 3, &opts()))
            .map(|(i, _, j, _)| format!("{}+{}", lib::CYCLE_3K1_BLOCKS[i].0, lib::CYCLE_3K1_BLOCKS[j].0))
            .collect();
        Ok(Status::check(bad.is_empty(), || format!("incompatible: {}", bad.join(", "))))
    }));
    v.push(point("C_n⊙2K_1 base self-compatible", || {
        let base = parse_pattern(lib::CYCLE_2K1_BASE)?;
        Ok(Status::check(is_compatible(&base, &base.linear(), 2, &ApplyOptions::default()), || "not compatible".into()))
    }));
    let hi = cfg.max_n.unwrap_or(300);
    for n in 14..=hi {
        if lib::CYCLE_3K1_SEVEN.contains(&n) {
            continue;
        }
        v.push(point(format!("composition n={n}"), move || {
            let pat = cycle_3k1_composition(n).ok_or_else(|| Error::Internal(format!("no composition for {n}")))?;
            let ok = pat.len() == n && pat.max_color() == 6 && is_valid_pattern(&pat, 3, &opts());
            Ok(Status::check(ok, || "composition invalid".into()))
        }));
    }
    v
}

/// Smallest number of colors for the closed neighborhood of `v` when `v`
/// has color 1, by exhaustive search.
fn star_colors_with_one(dm: &DistanceMatrix, v: usize) -> u32 {
    let nb: Vec<usize> = (0..dm.len()).filter(|&u| dm.get(v, u) == Distance::Finite(1)).collect();
    for k in 1u32.. {
        let mut col = vec![0u32; nb.len()];
        if fill_star(dm, &nb, &mut col, 0, k) {
            return k;
        }
    }
    unreachable!()
}

fn fill_star(dm: &DistanceMatrix, nb: &[usize], col: &mut [u32], i: usize, k: u32) -> bool {
    if i == nb.len() {
        return true;
    }
    for c in 2..=k {
        if (0..i).all(|j| col[j] != c || !dm.get(nb[i], nb[j]).within(c)) {
            col[i] = c;
            if fill_star(dm, nb, col, i + 1, k) {
                return true;
            }
        }
    }
    false
}

fn forced(cfg: &VerifyConfig) -> Vec<Point> {
    let hi = cfg.max_n.unwrap_or(8);
    let mut v = Vec::new();
    let cases = [
        (GraphFamily::PathCorona, SpinePosition::Endpoint, 0usize, 2usize),
        (GraphFamily::PathCorona, SpinePosition::Interior, 1, 3),
        (GraphFamily::CycleCorona, SpinePosition::Cycle, 0, 3),
    ];
    for (f, pos, vertex, min_n) in cases {
        for p in 1..=6 {
            for n in min_n..=hi.max(min_n) {
                v.push(point(format!("{f} n={n} p={p} {pos:?}"), move || {
                    let q = query(f, n, p)?;
                    let bound = forced_color_lower_bound(&q, pos)?;
                    let exact = star_colors_with_one(&distances(&q.graph()?), vertex);
                    Ok(Status::check(bound == exact, || format!("bound {bound}, exhaustive {exact}")))
                }));
            }
        }
    }
    v.push(point("C_n⊙4K_1 extension around a forced 1", || {
        let pat = parse_pattern(lib::CYCLE_P4_FORCED)?;
        Ok(Status::check(is_valid_pattern(&pat, 4, &ApplyOptions::default()) && pat.max_color() == 7, || {
            "invalid".into()
        }))
    }));
    v
}

fn exhaustive<F>(g: &Graph, f: F) -> Result<Status>
where
    F: Fn(&OrientedGraph) -> Result<Option<String>> + Sync,
{
    let orientations: Vec<OrientedGraph> = enumerate_orientations(g, 24)?.collect();
    let errs: Vec<String> = orientations
        .par_iter()
        .map(|og| f(og))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Status::check(errs.is_empty(), || format!("{} mismatches, first: {}", errs.len(), errs[0])))
}

fn arcs_of(og: &OrientedGraph) -> String {
    og.arcs().map(|(t, h)| format!("{t}>{h}")).collect::<Vec<_>>().join(" ")
}

/// Value and witness agreement with the solver on one orientation.
fn agree(og: &OrientedGraph, value: u32, witness: &Coloring, budget: &SearchBudget) -> Result<Option<String>> {
    if !is_packing_coloring_oriented(og, witness) || witness.max_color() != value {
        return Ok(Some(format!("bad witness on {}", arcs_of(og))));
    }
    let k = solver_pcn(&weak_directed_distances(og), budget)?;
    Ok((k != value).then(|| format!("value {value} but solver {k} on {}", arcs_of(og))))
}

fn or_pn(cfg: &VerifyConfig) -> Vec<Point> {
    let hi = cfg.max_n.unwrap_or(14);
    (1..=hi)
        .map(|n| {
            let budget = cfg.budget.clone();
            point(format!("oriented P_{n}"), move || {
                exhaustive(&Graph::path(n)?, |og| {
                    let (k, w) = pcn_oriented_path(og)?;
                    agree(og, k, &w, &budget)
                })
            })
        })
        .collect()
}

fn or_cn(cfg: &VerifyConfig) -> Vec<Point> {
    let hi = cfg.max_n.unwrap_or(14);
    (3..=hi)
        .map(|n| {
            let budget = cfg.budget.clone();
            point(format!("oriented C_{n}"), move || {
                exhaustive(&Graph::cycle(n)?, |og| {
                    let (k, w) = pcn_oriented_cycle(og)?;
                    if (k == 2) != is_pcn_two(og) {
                        return Ok(Some(format!("2-case mismatch on {}", arcs_of(og))));
                    }
                    agree(og, k, &w, &budget)
                })
            })
        })
        .collect()
}

fn or_pnpk1(cfg: &VerifyConfig) -> Vec<Point> {
    let hi = cfg.max_n.unwrap_or(8);
    let mut v = Vec::new();
    for p in 1..=3usize {
        for n in 1..=hi {
            if (n - 1) + n * p > 16 {
                continue;
            }
            let budget = cfg.budget.clone();
            v.push(point(format!("oriented P_{n}⊙{p}K_1"), move || {
                exhaustive(&Graph::family(Family::Path, n, p)?, |og| {
                    let (k, w) = pcn_oriented_path_corona(og)?;
                    if k == 3 && !has_property_p(og, &w) {
                        return Ok(Some(format!("(P) fails on {}", arcs_of(og))));
                    }
                    agree(og, k, &w, &budget)
                })
            }));
        }
    }
    v
}

fn or_cnpk1(cfg: &VerifyConfig) -> Vec<Point> {
    let hi = cfg.max_n.unwrap_or(7);
    let mut v = Vec::new();
    for p in 1..=2usize {
        for n in 3..=hi {
            if n + n * p > 16 {
                continue;
            }
            let budget = cfg.budget.clone();
            v.push(point(format!("oriented C_{n}⊙{p}K_1 values"), move || {
                exhaustive(&Graph::family(Family::Cycle, n, p)?, |og| {
                    let (c, w) = classify_oriented_cycle_corona(og)?;
                    agree(og, c.value, &w, &budget)
                })
            }));
            v.push(point(format!("oriented C_{n}⊙{p}K_1 value 4 iff a stated condition holds"), move || {
                exhaustive(&Graph::family(Family::Cycle, n, p)?, |og| {
                    let (c, _) = classify_oriented_cycle_corona(og)?;
                    let stated = stated_obstruction(og)?.is_some();
                    Ok((stated != (c.value == 4)).then(|| format!("value {} on {}", c.value, arcs_of(og))))
                })
            }));
        }
    }
    v
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Random orientation with independent fair coins per edge.
pub fn random_orientation(g: &Graph, rng: &mut impl RngExt) -> OrientedGraph {
    let dirs: Vec<bool> = (0..g.edge_count()).map(|_| rng.random_bool(0.5)).collect();
    orient(g, &dirs).expect("one direction per edge")
}

/// Random labelled tree: vertex i > 0 hangs from a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut impl RngExt) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    Graph::new(n.max(1), edges).expect("tree edges are distinct")
}

/// A random path of even order with random arcs and a random valid SCP set,
/// as `(path, S, alpha)`.
pub fn random_scp_instance(rng: &mut impl RngExt) -> (OrientedGraph, Vec<usize>, u32) {
    let n = 2 * rng.random_range(2..=25);
    let og = random_orientation(&Graph::path(n).expect("n >= 4"), rng);
    let s: Vec<usize> = (1..n)
        .filter(|&i| i % 2 == 0 && (og.is_source(i) || og.is_sink(i)) && rng.random_bool(0.5))
        .collect();
    (og, s, rng.random_range(2..=3))
}

fn scp_suite(cfg: &VerifyConfig) -> Vec<Point> {
    let seed = cfg.seed;
    let samples = cfg.max_n.unwrap_or(1000);
    vec![point(format!("{samples} random instances, seed {seed}"), move || {
        let mut r = rng(seed, 1);
        for _ in 0..samples {
            let (og, s, alpha) = random_scp_instance(&mut r);
            let n = og.vertex_count();
            let col = scp(&og, &ScpConfig::new(1, alpha, s.iter().copied())?)?;
            let expect = scp_endpoint_color(n, alpha, s.len())?;
            if col.get(n - 1) != expect {
                return Ok(Status::Fail(format!("endpoint {} expected {expect} on {}", col.get(n - 1), arcs_of(&og))));
            }
            if !is_packing_coloring_oriented(&og, &col) {
                return Ok(Status::Fail(format!("conflict inside the path {}", arcs_of(&og))));
            }
        }
        Ok(Status::Pass)
    })]
}

fn or_tree(cfg: &VerifyConfig) -> Vec<Point> {
    let seed = cfg.seed;
    let samples = cfg.max_n.unwrap_or(1000);
    vec![point(format!("{samples} random trees up to 200 vertices, seed {seed}"), move || {
        let mut r = rng(seed, 2);
        for _ in 0..samples {
            let n = r.random_range(1..=200);
            let t = random_orientation(&random_tree(n, &mut r), &mut r);
            let col = color_oriented_tree(&t)?;
            if col.max_color() > 3 || !has_property_p(&t, &col) || !is_packing_coloring_oriented(&t, &col) {
                return Ok(Status::Fail(format!("bad coloring on {}", arcs_of(&t))));
            }
        }
        Ok(Status::Pass)
    })]
}

/// A small random corona query the solver handles quickly.
pub fn random_small_query(rng: &mut impl RngExt) -> FamilyQuery {
    loop {
        let corona = rng.random_bool(0.75);
        let cycle = rng.random_bool(0.5);
        let f = match (corona, cycle) {
            (true, true) => GraphFamily::CycleCorona,
            (true, false) => GraphFamily::PathCorona,
            (false, true) => GraphFamily::Cycle,
            (false, false) => GraphFamily::Path,
        };
        let p = if corona { rng.random_range(1..=3) } else { 0 };
        let n = rng.random_range(1..=(24 / (p + 1)).max(3));
        if let Ok(q) = FamilyQuery::new(f, n, p) {
            return q;
        }
    }
}

fn subgraph(cfg: &VerifyConfig) -> Vec<Point> {
    let seed = cfg.seed;
    let samples = cfg.max_n.unwrap_or(500);
    let budget = cfg.budget.clone();
    vec![point(format!("{samples} random induced subgraphs, seed {seed}"), move || {
        let mut r = rng(seed, 3);
        for _ in 0..samples {
            let q = random_small_query(&mut r);
            let g = q.graph()?;
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|_| r.random_bool(0.7)).collect();
            let host = pcn_closed_form(&q)?;
            let sub = solver_pcn(&distances(&g.induced(&keep)?), &budget)?;
            if sub > host {
                return Ok(Status::Fail(format!("{q}: subgraph needs {sub} > {host}")));
            }
        }
        Ok(Status::Pass)
    })]
}

fn orientation(cfg: &VerifyConfig) -> Vec<Point> {
    let seed = cfg.seed;
    let samples = cfg.max_n.unwrap_or(200);
    let budget = cfg.budget.clone();
    vec![point(format!("{samples} random orientations, seed {seed}"), move || {
        let mut r = rng(seed, 4);
        for _ in 0..samples {
            let q = random_small_query(&mut r);
            let og = random_orientation(&q.graph()?, &mut r);
            let undirected = pcn_closed_form(&q)?;
            let oriented = solver_pcn(&weak_directed_distances(&og), &budget)?;
            if oriented > undirected {
                return Ok(Status::Fail(format!("{q}: orientation needs {oriented} > {undirected}")));
            }
        }
        Ok(Status::Pass)
    })]
}
