use proptest::prelude::*;

use packcol::closed_form::{construct_coloring, pcn_closed_form, FamilyQuery, GraphFamily};
use packcol::coloring::{
    first_violation, graph_violation, has_property_p, is_packing_coloring, oriented_violation,
};
use packcol::io::{parse_coloring, parse_graph, write_coloring, write_graph, write_oriented, GraphFile};
use packcol::oriented::{color_oriented_path_corona, color_oriented_tree, scp, ScpConfig};
use packcol::pattern::{parse_pattern, Pattern, Token};
use packcol::solver::{
    exists_packing_k_coloring, greedy_coloring, packing_chromatic_number, Decision, PcnOutcome, SearchBudget,
};
use packcol::{distances, orient, weak_directed_distances, Coloring, Distance, Family, Graph, OrientedGraph};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Path), Just(Family::Cycle)]
}

fn corona() -> impl Strategy<Value = Graph> {
    (family(), 1usize..12, 0usize..4).prop_filter_map("cycle needs n >= 3", |(f, n, p)| Graph::family(f, n, p).ok())
}

fn small_corona() -> impl Strategy<Value = Graph> {
    (family(), 1usize..7, 0usize..3).prop_filter_map("cycle needs n >= 3", |(f, n, p)| Graph::family(f, n, p).ok())
}

fn oriented(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = OrientedGraph> {
    g.prop_flat_map(|g| {
        let m = g.edge_count();
        prop::collection::vec(any::<bool>(), m).prop_map(move |d| orient(&g, &d).unwrap())
    })
}

fn with_coloring<T: std::fmt::Debug + Clone>(
    s: impl Strategy<Value = (T, usize)>,
    max: u32,
) -> impl Strategy<Value = (T, Coloring)> {
    s.prop_flat_map(move |(x, n)| {
        (Just(x), prop::collection::vec(1..=max, n).prop_map(|c| Coloring::new(c).unwrap()))
    })
}

fn random_tree() -> impl Strategy<Value = OrientedGraph> {
    (1usize..40).prop_flat_map(|n| {
        (prop::collection::vec(any::<prop::sample::Index>(), n - 1), prop::collection::vec(any::<bool>(), n - 1))
            .prop_map(move |(parents, dirs)| {
                let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
                orient(&Graph::new(n, edges).unwrap(), &dirs).unwrap()
            })
    })
}

/// One-way distances from `s` along arcs.
fn directed_bfs(og: &OrientedGraph, s: usize) -> Vec<Option<u32>> {
    let mut d = vec![None; og.vertex_count()];
    d[s] = Some(0);
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in og.out_neighbors(x) {
            if d[y].is_none() {
                d[y] = Some(d[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    d
}

fn check_metric(dm: &packcol::DistanceMatrix, triangle: bool) -> Result<(), TestCaseError> {
    let n = dm.len();
    for u in 0..n {
        prop_assert_eq!(dm.get(u, u), Distance::Finite(0));
        for v in 0..n {
            prop_assert_eq!(dm.get(u, v), dm.get(v, u));
            for w in (0..n).filter(|_| triangle) {
                if let (Distance::Finite(a), Distance::Finite(b)) = (dm.get(u, v), dm.get(v, w)) {
                    prop_assert!(dm.get(u, w).within(a + b));
                }
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn layout_counts((f, n, p) in (family(), 1usize..30, 0usize..7)) {
        prop_assume!(f == Family::Path || n >= 3);
        let g = Graph::family(f, n, p).unwrap();
        let spine_edges = if f == Family::Path { n - 1 } else { n };
        prop_assert_eq!(g.vertex_count(), n * (p + 1));
        prop_assert_eq!(g.edge_count(), spine_edges + n * p);
        let l = g.layout().unwrap();
        for i in 0..n {
            for j in 0..p {
                let z = l.pendant(i, j);
                prop_assert_eq!(z, n + i * p + j);
                prop_assert_eq!(g.neighbors(z), &[i]);
            }
        }
        for &(u, v) in g.edges() {
            prop_assert!(u < v && v < g.vertex_count());
        }
    }

    #[test]
    fn undirected_metric(g in corona()) {
        check_metric(&distances(&g), true)?;
    }

    #[test]
    fn weak_directed_metric(og in oriented(corona())) {
        let dm = weak_directed_distances(&og);
        // no triangle inequality: 0->1<-2 has d(0,1) = d(1,2) = 1 and d(0,2) > 2 or unreachable
        check_metric(&dm, false)?;
        let one_way: Vec<Vec<Option<u32>>> = (0..dm.len()).map(|s| directed_bfs(&og, s)).collect();
        for u in 0..dm.len() {
            for v in 0..dm.len() {
                let want = match (one_way[u][v], one_way[v][u]) {
                    (Some(a), Some(b)) => Distance::Finite(a.min(b)),
                    (Some(a), None) | (None, Some(a)) => Distance::Finite(a),
                    (None, None) => Distance::Unreachable,
                };
                prop_assert_eq!(dm.get(u, v), want);
            }
        }
        // reversing every arc keeps the weak distance
        prop_assert_eq!(&dm, &weak_directed_distances(&og.reversed()));
        let und = distances(og.base());
        for u in 0..dm.len() {
            for v in 0..dm.len() {
                prop_assert!(dm.get(u, v) >= und.get(u, v));
            }
        }
    }

    #[test]
    fn checkers_agree((g, col) in with_coloring(corona().prop_map(|g| { let n = g.vertex_count(); (g, n) }), 4)) {
        let a = first_violation(&distances(&g), &col).unwrap();
        let b = graph_violation(&g, &col).unwrap();
        prop_assert_eq!(a.is_none(), b.is_none());
        if let Some(v) = b {
            prop_assert_eq!(col.get(v.u), col.get(v.v));
            prop_assert_eq!(distances(&g).get(v.u, v.v), Distance::Finite(v.distance));
        }
    }

    #[test]
    fn oriented_checkers_agree((og, col) in with_coloring(oriented(corona()).prop_map(|og| { let n = og.vertex_count(); (og, n) }), 4)) {
        let dm = weak_directed_distances(&og);
        let a = first_violation(&dm, &col).unwrap();
        let b = oriented_violation(&og, &col).unwrap();
        prop_assert_eq!(a.is_none(), b.is_none());
        if let Some(v) = b {
            prop_assert_eq!(dm.get(v.u, v.v), Distance::Finite(v.distance));
        }
    }

    #[test]
    fn solver_bounds(g in small_corona()) {
        let dm = distances(&g);
        let greedy = greedy_coloring(&dm);
        prop_assert!(is_packing_coloring(&dm, &greedy));
        let PcnOutcome::Exact { k, witness } = packing_chromatic_number(&dm, &SearchBudget::default()) else {
            return Err(TestCaseError::fail("indeterminate on a small graph"));
        };
        prop_assert!(k <= greedy.max_color());
        prop_assert_eq!(witness.max_color(), k);
        prop_assert!(is_packing_coloring(&dm, &witness));
        prop_assert_eq!(exists_packing_k_coloring(&dm, k - 1, &SearchBudget::default()), Decision::No);
        prop_assert!(exists_packing_k_coloring(&dm, k + 1, &SearchBudget::default()).is_yes());
    }

    #[test]
    fn orientation_never_needs_more(og in oriented(small_corona())) {
        let b = SearchBudget::default();
        let o = packing_chromatic_number(&weak_directed_distances(&og), &b).value().unwrap();
        let u = packing_chromatic_number(&distances(og.base()), &b).value().unwrap();
        prop_assert!(o <= u);
    }

    #[test]
    fn constructions_are_exact((cycle, corona, n, p) in (any::<bool>(), any::<bool>(), 1usize..80, 1usize..7)) {
        let f = match (cycle, corona) {
            (false, false) => GraphFamily::Path,
            (true, false) => GraphFamily::Cycle,
            (false, true) => GraphFamily::PathCorona,
            (true, true) => GraphFamily::CycleCorona,
        };
        let p = if corona { p } else { 0 };
        prop_assume!(!cycle || n >= 3);
        let q = FamilyQuery::new(f, n, p).unwrap();
        let c = construct_coloring(&q).unwrap();
        prop_assert_eq!(c.max_color(), pcn_closed_form(&q).unwrap());
        prop_assert!(is_packing_coloring(&distances(&q.graph().unwrap()), &c));
    }

    #[test]
    fn oriented_path_coronae(og in oriented((1usize..10, 1usize..4).prop_map(|(n, p)| Graph::family(Family::Path, n, p).unwrap()))) {
        let c = color_oriented_path_corona(&og).unwrap();
        prop_assert!(c.max_color() <= 3);
        prop_assert!(is_packing_coloring(&weak_directed_distances(&og), &c));
        prop_assert!(has_property_p(&og, &c));
    }

    #[test]
    fn oriented_trees(t in random_tree()) {
        let c = color_oriented_tree(&t).unwrap();
        prop_assert!(c.max_color() <= 3);
        prop_assert!(is_packing_coloring(&weak_directed_distances(&t), &c));
        prop_assert!(has_property_p(&t, &c));
    }

    #[test]
    fn scp_colors_paths(
        (og, alpha, first_is_one) in oriented((2usize..40).prop_map(|n| Graph::path(n).unwrap()))
            .prop_flat_map(|og| (Just(og), 2u32..=3, any::<bool>()))
    ) {
        let n = og.vertex_count();
        let ones = if first_is_one { 0 } else { 1 };
        // S: interior 1-vertices that are sources or sinks
        let s = (1..n.saturating_sub(1))
            .filter(|&v| v % 2 == ones && og.has_arc(v, v - 1) == og.has_arc(v, v + 1));
        let cfg = if first_is_one { ScpConfig::new(1, alpha, s) } else { ScpConfig::new(alpha, 1, s) }.unwrap();
        let c = scp(&og, &cfg).unwrap();
        prop_assert!(c.max_color() <= 3);
        prop_assert!(is_packing_coloring(&weak_directed_distances(&og), &c));
    }

    #[test]
    fn graph_files_round_trip(og in oriented(corona())) {
        // files carry no layout, and P_1⊙K_1 reads back as P_2, so compare structure
        let g = og.base();
        let GraphFile::Undirected(h) = parse_graph(&write_graph(g)).unwrap() else {
            return Err(TestCaseError::fail("undirected file parsed as oriented"));
        };
        prop_assert_eq!((h.vertex_count(), h.edges()), (g.vertex_count(), g.edges()));
        let GraphFile::Oriented(oh) = parse_graph(&write_oriented(&og)).unwrap() else {
            return Err(TestCaseError::fail("oriented file parsed as undirected"));
        };
        prop_assert_eq!(oh.vertex_count(), og.vertex_count());
        prop_assert_eq!(oh.arcs().collect::<Vec<_>>(), og.arcs().collect::<Vec<_>>());
        if let Some(l) = h.layout() {
            let f = Graph::family(l.family, l.n, l.p).unwrap();
            prop_assert_eq!(f.edges(), g.edges());
        }
    }

    #[test]
    fn coloring_files_round_trip(colors in prop::collection::vec(1u32..20, 0..50)) {
        let c = Coloring::new(colors).unwrap();
        prop_assert_eq!(parse_coloring(&write_coloring(&c), Some(c.len())).unwrap(), c);
    }

    #[test]
    fn patterns_round_trip(
        tokens in prop::collection::vec(
            (1u8..10, prop::option::of(prop::collection::vec(1u8..10, 1..4))),
            1..20,
        ),
        circular in any::<bool>(),
    ) {
        let tokens: Vec<Token> = tokens
            .into_iter()
            .map(|(c, l)| Token { color: c, pendants: if c == 1 { l } else { None } })
            .collect();
        let pat = Pattern::new(tokens, circular).unwrap();
        prop_assert_eq!(parse_pattern(&pat.to_string()).unwrap(), pat);
    }
}
