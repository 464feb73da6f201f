mod common;

use common::{contains_shape, lambda, matrix, walk_is_certificate, Shape};
use proptest::prelude::*;
use scoco::classes::CaterpillarPlan;
use scoco::{
    brute_force_ordering, canonical_code, caterpillar_ordering, find_ordered_pattern, forces,
    generate_replicated_caterpillar, has_circuit, parse_graph, recognize, scan, serialize, verify_certificate,
    verify_scc_ordering, DiagonalMode, Graph, GraphFormat, OracleQuery, OrderedPair, PairSet, PatternKind,
    VertexOrdering,
};

fn graph(max_n: usize, mode: DiagonalMode) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, mode, edges).unwrap()
        })
    })
}

fn graph_with_ordering(max_n: usize, mode: DiagonalMode) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    graph(max_n, mode).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(move |(g, p)| (g, VertexOrdering::new(p, n).unwrap()))
    })
}

fn shape_of(kind: PatternKind) -> (Shape, bool) {
    match kind {
        PatternKind::Slash => (Shape::Slash, false),
        PatternKind::Gamma => (Shape::Gamma, false),
        PatternKind::I2 => (Shape::I2, false),
        PatternKind::PrincipalSlash => (Shape::Slash, true),
        PatternKind::PrincipalGamma => (Shape::Gamma, true),
        PatternKind::PrincipalI2 => (Shape::I2, true),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_code_ignores_labels((g, o) in graph_with_ordering(9, DiagonalMode::Reflexive)) {
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.permuted(&o)).unwrap());
    }

    #[test]
    fn formats_round_trip(g in graph(12, DiagonalMode::Reflexive), loopless in any::<bool>()) {
        let g = if loopless { g.with_mode(DiagonalMode::Irreflexive) } else { g };
        for f in [GraphFormat::Matrix, GraphFormat::EdgeList, GraphFormat::Graph6] {
            if f == GraphFormat::Matrix && g.n() == 0 {
                continue;
            }
            let text = serialize(&g, f);
            prop_assert_eq!(&parse_graph(text.as_bytes(), f, g.mode()).unwrap(), &g, "{}", f);
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph(12, DiagonalMode::Reflexive)) {
        let h = g.complement();
        prop_assert_eq!(h.mode(), DiagonalMode::Irreflexive);
        prop_assert_eq!(h.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(&h.complement(), &g);
    }

    #[test]
    fn scan_agrees_with_quartic_check((g, o) in graph_with_ordering(8, DiagonalMode::Reflexive), flip in any::<bool>()) {
        let g = if flip { g.complement() } else { g };
        let m = matrix(&g);
        for kind in PatternKind::ALL.into_iter().filter(|k| k.required_mode() == g.mode()) {
            let (shape, principal) = shape_of(kind);
            let hit = scan(&g, &o, kind).unwrap();
            prop_assert_eq!(hit.is_some(), contains_shape(&m, o.as_slice(), shape, principal), "{}", kind);
            if let Some(w) = hit {
                let at = |i: usize, j: usize| m[o.as_slice()[i]][o.as_slice()[j]];
                prop_assert!(kind.matches(at, w.rows, w.cols));
                prop_assert_eq!(w.row_vertices, (o.as_slice()[w.rows.0], o.as_slice()[w.rows.1]));
            }
        }
    }

    #[test]
    fn ordered_pattern_witnesses_hold((g, o) in graph_with_ordering(9, DiagonalMode::Reflexive)) {
        let slash = scan(&g, &o, PatternKind::Slash).unwrap();
        let pattern = find_ordered_pattern(&g, &o).unwrap();
        prop_assert_eq!(slash.is_some(), pattern.is_some());
        if let Some(w) = pattern {
            let pos = o.positions();
            prop_assert!(w.vertices.windows(2).all(|p| pos[p[0]] < pos[p[1]]));
            let k = w.vertices.len();
            for a in 0..k {
                for b in a + 1..k {
                    let listed = w.kind.edges().contains(&(a, b));
                    prop_assert_eq!(g.has_edge(w.vertices[a], w.vertices[b]), listed);
                }
            }
        }
    }

    #[test]
    fn verdicts_are_sound(g in graph(20, DiagonalMode::Reflexive)) {
        let verdict = recognize(&g).unwrap();
        if let Some(o) = verdict.ordering() {
            prop_assert!(verify_scc_ordering(&g, o).unwrap().is_valid());
            prop_assert!(!contains_shape(&matrix(&g), o.as_slice(), Shape::Slash, false));
        }
        if let Some(c) = verdict.certificate() {
            prop_assert!(verify_certificate(&g, c));
            let walk: Vec<_> = c.walk.iter().map(|p| (p.u, p.v)).collect();
            prop_assert!(walk_is_certificate(&g, (c.pair.u, c.pair.v), &walk));
        }
    }

    #[test]
    fn forcing_matches_its_definition(g in graph(8, DiagonalMode::Reflexive), picks in proptest::collection::vec((0usize..8, 0usize..8, 0usize..8, 0usize..8), 20)) {
        let n = g.n();
        prop_assume!(n >= 2);
        for (a, b, c, d) in picks {
            let (a, b, c, d) = (a % n, b % n, c % n, d % n);
            if a == b || c == d {
                continue;
            }
            let p = OrderedPair::new(a, b);
            let q = OrderedPair::new(c, d);
            prop_assert_eq!(forces(&g, p, q).unwrap(), lambda(&g, (a, b), (c, d)));
            prop_assert_eq!(forces(&g, p, q).unwrap(), forces(&g, q, p).unwrap());
        }
    }

    #[test]
    fn oracle_ignores_labels((g, o) in graph_with_ordering(7, DiagonalMode::Reflexive), kinds in proptest::sample::subsequence(vec![PatternKind::Slash, PatternKind::Gamma, PatternKind::PrincipalSlash, PatternKind::PrincipalGamma], 1..=2)) {
        let a = brute_force_ordering(&OracleQuery::new(g.clone(), kinds.clone()).unwrap()).unwrap();
        let b = brute_force_ordering(&OracleQuery::new(g.permuted(&o), kinds.clone()).unwrap()).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(found) = a {
            let m = matrix(&g);
            for k in kinds {
                let (s, p) = shape_of(k);
                prop_assert!(!contains_shape(&m, found.as_slice(), s, p));
            }
        }
    }

    #[test]
    fn circuits(arcs in proptest::collection::vec((0usize..7, 0usize..7), 0..14)) {
        let pairs: Vec<OrderedPair> = arcs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| OrderedPair::new(u, v)).collect();
        let set = PairSet::from_pairs(7, pairs.iter().copied());
        match has_circuit(&set) {
            Some(c) => {
                prop_assert!(c.iter().all(|p| set.contains(*p)));
                prop_assert!(c.windows(2).all(|w| w[0].v == w[1].u));
                prop_assert_eq!(c.last().unwrap().v, c[0].u);
            }
            None => {
                // Acyclic: repeatedly removing sources empties the arc set.
                let mut left: Vec<OrderedPair> = set.pairs().collect();
                let mut alive: Vec<bool> = vec![true; 7];
                for _ in 0..7 {
                    if let Some(s) = (0..7).find(|&x| alive[x] && !left.iter().any(|p| p.v == x)) {
                        alive[s] = false;
                        left.retain(|p| p.u != s);
                    }
                }
                prop_assert!(left.is_empty());
            }
        }
    }

    #[test]
    fn generated_caterpillars_are_members(spine in 1usize..7, leaves in proptest::collection::vec(0usize..3, 0..7), shadows in proptest::collection::btree_set(1usize..6, 0..3), reps in 1usize..3, rot in 0usize..20) {
        let leaves: Vec<usize> = leaves.into_iter().take(spine).collect();
        let replicate: Vec<(usize, usize)> = shadows.into_iter().filter(|&i| i < spine).map(|i| (i, reps)).collect();
        let plan = CaterpillarPlan::from_counts(spine, &leaves, &replicate).unwrap();
        match generate_replicated_caterpillar(&plan) {
            Ok(g) => {
                prop_assert!(recognize(&g).unwrap().is_member());
                prop_assert!(scoco::bipartite_scc_check(&g).unwrap().is_yes());
                let n = g.n();
                let rotated = VertexOrdering::new((0..n).map(|i| (i + rot) % n).collect(), n).unwrap();
                for h in [g.clone(), g.permuted(&VertexOrdering::identity(n).reversed()), g.permuted(&rotated)] {
                    let o = caterpillar_ordering(&h).unwrap();
                    prop_assert!(verify_scc_ordering(&h, &o).unwrap().is_valid());
                }
            }
            Err(_) => prop_assert!(plan.validate().is_err()),
        }
    }
}
