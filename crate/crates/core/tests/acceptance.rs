//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are expected to fail for the reason
//! recorded there; the run still errors if such a criterion fails for any
//! other reason, or starts passing.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use packcol::closed_form::{construct_coloring, pcn_closed_form, cycle_3k1_composition, FamilyQuery, GraphFamily};
use packcol::coloring::{has_property_p, is_packing_coloring, is_packing_coloring_graph, is_packing_coloring_oriented};
use packcol::library as lib;
use packcol::oriented::{
    classify_oriented_cycle_corona, color_oriented_tree, pcn_oriented_cycle, scp, scp_endpoint_color, ScpConfig,
};
use packcol::pattern::{is_compatible, is_valid_pattern, parse_pattern, ApplyOptions};
use packcol::solver::{count_packing_k_colorings, packing_chromatic_number, CountOutcome, PcnOutcome, SearchBudget};
use packcol::{distances, enumerate_orientations, orient, weak_directed_distances, Family, Graph, OrientedGraph};

const SEED: u64 = 0x5eed_0001;

/// Criteria expected to fail, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    5,
    "the stated value-4 conditions miss value-4 orientations (first at n = 6); values still match the solver",
)];

// Wall-clock budgets per criterion.
const LIMITS: [Duration; 10] = [
    Duration::from_secs(60),
    Duration::from_secs(600),
    Duration::from_secs(600),
    Duration::from_secs(60),
    Duration::from_secs(900),
    Duration::from_secs(300),
    Duration::from_secs(10),
    Duration::from_secs(30),
    Duration::from_secs(10),
    Duration::from_secs(300),
];

struct Outcome {
    pass: bool,
    detail: String,
    /// Failure matches the documented gap exactly.
    known: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into(), known: false }
    }
}

fn q(f: GraphFamily, n: usize, p: usize) -> FamilyQuery {
    FamilyQuery::new(f, n, p).unwrap()
}

fn exact_pcn(g: &Graph, budget: &SearchBudget) -> Option<u32> {
    match packing_chromatic_number(&distances(g), budget) {
        PcnOutcome::Exact { k, .. } => Some(k),
        PcnOutcome::Indeterminate { .. } => None,
    }
}

fn oriented_pcn(og: &OrientedGraph) -> u32 {
    match packing_chromatic_number(&weak_directed_distances(og), &SearchBudget::default()) {
        PcnOutcome::Exact { k, .. } => k,
        PcnOutcome::Indeterminate { .. } => panic!("default budget exhausted on a small oriented graph"),
    }
}

fn c1_constructive() -> Outcome {
    let mut queries = Vec::new();
    for n in 1..=300 {
        queries.push(q(GraphFamily::Path, n, 0));
        if n >= 3 {
            queries.push(q(GraphFamily::Cycle, n, 0));
        }
        for p in 1..=6 {
            queries.push(q(GraphFamily::PathCorona, n, p));
            if n >= 3 {
                queries.push(q(GraphFamily::CycleCorona, n, p));
            }
        }
    }
    let bad: Vec<String> = queries
        .par_iter()
        .filter_map(|q| {
            let g = q.graph().unwrap();
            let k = pcn_closed_form(q).unwrap();
            let ok = match construct_coloring(q) {
                // the matrix checker is independent of the one used inside construct_coloring
                Ok(c) if g.vertex_count() <= 400 => c.max_color() == k && is_packing_coloring(&distances(&g), &c),
                Ok(c) => c.max_color() == k && is_packing_coloring_graph(&g, &c),
                Err(_) => false,
            };
            (!ok).then(|| q.to_string())
        })
        .collect();
    // every composition length is exercised above; also check them on their own
    let comps_ok = (14..=300)
        .filter(|n| !lib::CYCLE_3K1_SEVEN.contains(n))
        .all(|n| cycle_3k1_composition(n).is_some_and(|p| p.len() == n));
    Outcome::new(
        bad.is_empty() && comps_ok,
        format!("{} queries, {} bad{}", queries.len(), bad.len(), bad.first().map(|b| format!(", first {b}")).unwrap_or_default()),
    )
}

fn c2_solver() -> Outcome {
    use GraphFamily::*;
    let budget = SearchBudget::default();
    let mut grid: Vec<(FamilyQuery, Option<u32>)> = Vec::new();
    let crpn = [2, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5];
    for n in 1..=12 {
        grid.push((q(PathCorona, n, 1), Some(crpn[n - 1])));
        grid.push((q(PathCorona, n, 2), (n == 12).then_some(6)));
    }
    for n in 3..=8 {
        grid.push((q(CycleCorona, n, 1), None));
    }
    for n in 1..=10 {
        grid.push((q(PathCorona, n, 3), None));
    }
    for n in 3..=7 {
        for p in 2..=4 {
            grid.push((q(CycleCorona, n, p), None));
        }
    }
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|(q, pinned)| {
            let cf = pcn_closed_form(q).unwrap();
            match exact_pcn(&q.graph().unwrap(), &budget) {
                None => Some(format!("{q}: indeterminate")),
                Some(k) if k != cf || pinned.is_some_and(|v| v != k) => Some(format!("{q}: solver {k}, closed form {cf}")),
                Some(_) => None,
            }
        })
        .collect();
    Outcome::new(bad.is_empty(), format!("{} instances, {} mismatches {}", grid.len(), bad.len(), bad.join("; ")))
}

fn c3_stretch() -> Outcome {
    use GraphFamily::*;
    let budget = SearchBudget { time_limit: Some(Duration::from_secs(120)), ..Default::default() };
    let mut notes = Vec::new();
    let mut pass = true;
    for (q, want) in [(q(CycleCorona, 9, 2), 7), (q(CycleCorona, 11, 4), 8), (q(CycleCorona, 11, 3), 7)] {
        match exact_pcn(&q.graph().unwrap(), &budget) {
            Some(k) => {
                pass &= k == want;
                notes.push(format!("{q}: {k}"));
            }
            None => notes.push(format!("{q}: indeterminate within budget")),
        }
    }
    let big = q(PathCorona, 35, 4);
    let c = construct_coloring(&big).unwrap();
    let ok = c.max_color() <= 7 && is_packing_coloring_graph(&big.graph().unwrap(), &c);
    pass &= ok;
    notes.push(format!("{big}: {}-coloring constructed", c.max_color()));
    Outcome::new(pass, notes.join(", "))
}

fn c4_count() -> Outcome {
    let g = q(GraphFamily::PathCorona, 9, 1).graph().unwrap();
    let r = count_packing_k_colorings(&distances(&g), 4, &SearchBudget::default());
    Outcome::new(r == CountOutcome::Exact(2), format!("{r:?}"))
}

/// The stated value-4 conditions, read directly off the spine.
fn stated_value_four(og: &OrientedGraph, n: usize) -> bool {
    let fwd: Vec<bool> = (0..n).map(|i| og.has_arc(i, (i + 1) % n)).collect();
    if fwd.iter().all(|&f| f == fwd[0]) {
        return n >= 5 && !n.is_multiple_of(4);
    }
    if !n.is_multiple_of(4) {
        return false;
    }
    let spine_in = |v: usize| [(v + n - 1) % n, (v + 1) % n].iter().filter(|&&u| og.has_arc(u, v)).count();
    let sources: Vec<usize> = (0..n).filter(|&v| spine_in(v) == 0).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| spine_in(v) == 2).collect();
    if sources.len() != 1 || sinks.len() != 1 {
        return false;
    }
    let (s, t) = (sources[0], sinks[0]);
    let d = (s + n - t) % n;
    let gap = d.min(n - d);
    // the source has an in-pendant and the sink an out-pendant
    let pendant = |v: usize, into: bool| og.base().neighbors(v).iter().any(|&z| z >= n && og.has_arc(z, v) == into);
    let blocked = pendant(s, true) && pendant(t, false);
    blocked && ((n == 4 && gap == 1) || (n >= 8 && gap == 3))
}

fn c5_oriented_coronae() -> Outcome {
    let mut checked = 0usize;
    let mut value_bad = Vec::new();
    let mut extra_four = Vec::new();
    let mut stated_not_four = 0usize;
    for n in 3..=7 {
        let g = Graph::family(Family::Cycle, n, 1).unwrap();
        let all: Vec<OrientedGraph> = enumerate_orientations(&g, 16).unwrap().collect();
        let rows: Vec<(bool, u32, bool)> = all
            .par_iter()
            .map(|og| {
                let (c, w) = classify_oriented_cycle_corona(og).unwrap();
                let k = oriented_pcn(og);
                let witness_ok = is_packing_coloring_oriented(og, &w) && w.max_color() == c.value;
                (c.value == k && witness_ok, k, stated_value_four(og, n))
            })
            .collect();
        checked += rows.len();
        for (ok, k, stated) in rows {
            if !ok {
                value_bad.push(n);
            }
            match (k == 4, stated) {
                (true, false) => extra_four.push(n),
                (false, true) => stated_not_four += 1,
                _ => {}
            }
        }
    }
    let values = value_bad.is_empty();
    let characterized = extra_four.is_empty() && stated_not_four == 0;
    let detail = format!(
        "{checked} orientations; value mismatches {}; value-4 without a stated condition {} (n = {:?}); stated but not 4: {stated_not_four}",
        value_bad.len(),
        extra_four.len(),
        {
            let mut ns = extra_four.clone();
            ns.dedup();
            ns
        }
    );
    Outcome { pass: values && characterized, detail, known: values && stated_not_four == 0 }
}

/// Packing 2-colorable: even cycle with one side all sources or sinks.
fn two_side(og: &OrientedGraph, n: usize) -> bool {
    let extreme = |v: usize| og.has_arc(v, (v + 1) % n) == og.has_arc(v, (v + n - 1) % n);
    n.is_multiple_of(2) && (0..2).any(|side| (side..n).step_by(2).all(extreme))
}

fn c6_oriented_cycles() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 3..=14 {
        let all: Vec<OrientedGraph> = enumerate_orientations(&Graph::cycle(n).unwrap(), 16).unwrap().collect();
        total += all.len();
        let errs = all
            .par_iter()
            .filter(|og| {
                let (k, w) = pcn_oriented_cycle(og).unwrap();
                k != oriented_pcn(og) || (k == 2) != two_side(og, n) || !is_packing_coloring_oriented(og, &w)
            })
            .count();
        if errs > 0 {
            bad.push(format!("n={n}: {errs}"));
        }
    }
    Outcome::new(bad.is_empty(), format!("{total} orientations, mismatches {:?}", bad))
}

fn c7_scp() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = 2 * rng.random_range(2..=30);
        let dirs: Vec<bool> = (0..n - 1).map(|_| rng.random_bool(0.5)).collect();
        let og = orient(&Graph::path(n).unwrap(), &dirs).unwrap();
        let extreme = |v: usize| og.has_arc(v, v - 1) == og.has_arc(v, v + 1);
        // odd positions counted from 1, never the first vertex
        let s: Vec<usize> = (2..n - 1).step_by(2).filter(|&v| extreme(v) && rng.random_bool(0.5)).collect();
        let alpha = rng.random_range(2..=3u32);
        let col = scp(&og, &ScpConfig::new(1, alpha, s.iter().copied()).unwrap()).unwrap();
        let stated = if s.len().is_multiple_of(2) == (n % 4 == 2) { alpha } else { 5 - alpha };
        let endpoint = scp_endpoint_color(n, alpha, s.len()).unwrap();
        if endpoint != col.get(n - 1) || endpoint != stated || !is_packing_coloring_oriented(&og, &col) {
            bad += 1;
        }
    }
    Outcome::new(bad == 0, format!("1000 instances, {bad} bad"))
}

fn c8_trees() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.random_range(1..=200usize);
        let mut parent_edges = Vec::new();
        for v in 1..n {
            parent_edges.push((rng.random_range(0..v), v));
        }
        let t = Graph::new(n, parent_edges).unwrap();
        let dirs: Vec<bool> = (0..t.edge_count()).map(|_| rng.random_bool(0.5)).collect();
        let ot = orient(&t, &dirs).unwrap();
        let c = color_oriented_tree(&ot).unwrap();
        if c.max_color() > 3 || !is_packing_coloring(&weak_directed_distances(&ot), &c) || !has_property_p(&ot, &c) {
            bad += 1;
        }
    }
    Outcome::new(bad == 0, format!("1000 trees, {bad} bad"))
}

fn c9_patterns() -> Outcome {
    let stored = lib::all();
    let invalid: Vec<&str> = stored
        .iter()
        .filter(|s| {
            let opts = s.defaults.map(ApplyOptions::with_defaults).unwrap_or_default();
            !is_valid_pattern(&parse_pattern(s.text).unwrap(), s.p, &opts)
        })
        .map(|s| s.text)
        .collect();
    let opts = ApplyOptions::with_defaults(&lib::CYCLE_3K1_PENDANTS);
    let pats: Vec<_> = lib::CYCLE_3K1_BLOCKS.iter().map(|(_, t)| parse_pattern(t).unwrap()).collect();
    let mut pairs = 0;
    let mut incompatible = 0;
    for u in &pats {
        for v in &pats {
            pairs += 1;
            if !is_compatible(u, &v.linear(), 3, &opts) {
                incompatible += 1;
            }
        }
    }
    let base = parse_pattern(lib::CYCLE_2K1_BASE).unwrap();
    let self_compatible = base.len() == 7 && is_compatible(&base, &base.linear(), 2, &ApplyOptions::default());
    Outcome::new(
        invalid.is_empty() && pairs == 169 && incompatible == 0 && self_compatible,
        format!(
            "{} stored patterns, invalid {:?}; {pairs} pairs, {incompatible} incompatible; base self-compatible: {self_compatible}",
            stored.len(),
            invalid
        ),
    )
}

fn random_query(rng: &mut ChaCha8Rng) -> FamilyQuery {
    let f = if rng.random_bool(0.5) { GraphFamily::PathCorona } else { GraphFamily::CycleCorona };
    let p = rng.random_range(1..=3);
    let n = rng.random_range(3..=(20 / (p + 1)).max(4));
    q(f, n, p)
}

fn c10_monotone() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let budget = SearchBudget::default();
    let subs: Vec<(FamilyQuery, Vec<usize>)> = (0..500)
        .map(|_| {
            let q = random_query(&mut rng);
            let keep = (0..q.graph().unwrap().vertex_count()).filter(|_| rng.random_bool(0.6)).collect();
            (q, keep)
        })
        .collect();
    let sub_bad = subs
        .par_iter()
        .filter(|(q, keep)| {
            let host = pcn_closed_form(q).unwrap();
            let sub = q.graph().unwrap().induced(keep).unwrap();
            exact_pcn(&sub, &budget).is_none_or(|k| k > host)
        })
        .count();
    let ors: Vec<(FamilyQuery, Vec<bool>)> = (0..200)
        .map(|_| {
            let q = random_query(&mut rng);
            let m = q.graph().unwrap().edge_count();
            (q, (0..m).map(|_| rng.random_bool(0.5)).collect())
        })
        .collect();
    let or_bad = ors
        .par_iter()
        .filter(|(q, dirs)| {
            let og = orient(&q.graph().unwrap(), dirs).unwrap();
            oriented_pcn(&og) > pcn_closed_form(q).unwrap()
        })
        .count();
    Outcome::new(sub_bad == 0 && or_bad == 0, format!("500 subgraph pairs, {sub_bad} bad; 200 orientation pairs, {or_bad} bad"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("constructive validity sweep", c1_constructive),
        ("solver equals closed form", c2_solver),
        ("stretch tightness", c3_stretch),
        ("counting 4-colorings of P_9⊙K_1", c4_count),
        ("oriented C_n⊙K_1 classification", c5_oriented_coronae),
        ("oriented cycles", c6_oriented_cycles),
        ("scp endpoint parity", c7_scp),
        ("oriented trees", c8_trees),
        ("pattern library", c9_patterns),
        ("monotonicity", c10_monotone),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i as u32 + 1;
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if took > LIMITS[i] {
            o.pass = false;
            o.known = false;
            o.detail.push_str(&format!("; over the {:?} budget", LIMITS[i]));
        }
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id} {name}: {verdict} [{:.1}s] {}", took.as_secs_f64(), o.detail);
        match KNOWN_FAILURES.iter().find(|(k, _)| *k == id) {
            Some((_, why)) if !o.pass && o.known => println!("  known failure: {why}"),
            Some(_) if o.pass => unexpected.push(format!("criterion {id} now passes; update KNOWN_FAILURES")),
            _ if !o.pass => unexpected.push(format!("criterion {id} failed")),
            _ => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            eprintln!("{u}");
        }
        ExitCode::FAILURE
    }
}
