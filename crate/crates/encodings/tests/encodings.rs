use encodings::*;
use graph_core::family::{biclique, complete, independent, path, subdivided_star, union_all};
use graph_core::gen::{random_graph, shuffled};
use graph_core::{complement, ColoredGraph};
use permgroup::iso_coset;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn builtin(name: &str) -> Encoding {
    builtin_encodings().into_iter().find(|(n, _)| *n == name).expect("known fixture").1
}

/// Independent check of the two budget conditions.
fn oracle_valid(g: &ColoredGraph, enc: &Encoding, phi: &[usize]) -> bool {
    for v in 0..g.n() {
        for j in 0..enc.k() {
            let others = (0..g.n()).filter(|&u| u != v && phi[u] == j);
            let count = match enc.l(phi[v], j) {
                Adj::A => others.filter(|&u| !g.has_edge(u, v)).count(),
                Adj::N => others.filter(|&u| g.has_edge(u, v)).count(),
            };
            if let Ln::Finite(b) = enc.ln(phi[v], j) {
                if count > b as usize {
                    return false;
                }
            }
        }
    }
    true
}

/// All `k^n` maps, as an exhaustive encodability oracle.
fn oracle_encodable(g: &ColoredGraph, enc: &Encoding) -> bool {
    let (n, k) = (g.n(), enc.k());
    let total = k.pow(n as u32);
    (0..total).any(|mut code| {
        let phi: Vec<usize> = (0..n)
            .map(|_| {
                let x = code % k;
                code /= k;
                x
            })
            .collect();
        oracle_valid(g, enc, &phi)
    })
}

/// Tries all bijections.
fn oracle_iso(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    fn go(a: &ColoredGraph, b: &ColoredGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if go(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

fn random_encoding(k: usize, rng: &mut ChaCha8Rng) -> Encoding {
    let mut e = Encoding::new(k);
    for i in 0..k {
        for j in 0..k {
            let adj = if rng.gen_bool(0.5) { Adj::A } else { Adj::N };
            let ln = match rng.gen_range(0..5) {
                0 => Ln::Inf,
                b => Ln::Finite(b - 1),
            };
            e.set(i, j, adj, ln);
        }
    }
    e
}

#[test]
fn fixtures_exclude_their_graphs() {
    let star_1030 = subdivided_star(&[1, 0, 3, 0]).unwrap();
    let star_1020 = subdivided_star(&[1, 0, 2, 0]).unwrap();
    let cases: Vec<(&str, ColoredGraph)> = vec![
        ("2k2k1-k4", complete(4)),
        ("p6-p4p2-k4", path(6)),
        ("p6-p4p2-k4", union_all(&[path(4), path(2)])),
        ("p6-p4p2-k4", complete(4)),
        ("h1030-k4", star_1030),
        ("h1030-k4", complete(4)),
        ("h1020-k5", star_1020),
        ("h1020-k5", complete(5)),
    ];
    for (name, h) in cases {
        let enc = builtin(name);
        assert!(class_excludes(&enc, &h), "{name} should exclude a graph on {} vertices", h.n());
        assert!(!oracle_encodable(&h, &enc), "{name}: oracle disagrees");
    }
}

/// Under the budget conditions as stated, these two graphs do have encoding
/// maps, so the corresponding exclusions do not hold.
#[test]
fn fixtures_encode_some_named_graphs() {
    let twok2k1 = union_all(&[complete(2), complete(2), complete(1)]);
    let enc = builtin("2k2k1-k4");
    assert!(oracle_valid(&twok2k1, &enc, &[0, 1, 0, 1, 0]));
    assert!(!class_excludes(&enc, &twok2k1));

    let twop3k1 = union_all(&[path(3), path(3), complete(1)]);
    let enc = builtin("bip-2p3k1");
    assert!(oracle_valid(&twop3k1, &enc, &[1, 0, 1, 1, 0, 1, 0]));
    assert!(!class_excludes(&enc, &twop3k1));
}

#[test]
fn fixtures_admit_smaller_graphs() {
    assert!(!class_excludes(&builtin("2k2k1-k4"), &complete(3)));
    assert!(!class_excludes(&builtin("h1020-k5"), &complete(4)));
    assert!(!class_excludes(&builtin("p6-p4p2-k4"), &path(5)));
}

#[test]
fn triangle_map() {
    let enc = builtin("2k2k1-k4");
    let k3 = complete(3);
    assert!(oracle_valid(&k3, &enc, &[0, 2, 1]));
    let found = find_encoding_map(&k3, &enc).map.expect("K3 is encodable");
    assert!(oracle_valid(&k3, &enc, &found));
    let mut labels = found.clone();
    labels.sort();
    assert_eq!(labels, vec![0, 1, 2]);
}

#[test]
fn exhaustion_reports_nodes() {
    let res = find_encoding_map(&complete(4), &builtin("2k2k1-k4"));
    assert!(res.map.is_none());
    assert!(res.nodes > 0);
}

#[test]
fn search_matches_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut yes = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=4);
        if k == 4 && n == 7 && rng.gen_bool(0.7) {
            continue;
        }
        let g = random_graph(n, rng.gen_range(0.2..0.8), &mut rng);
        let enc = random_encoding(k, &mut rng);
        let res = find_encoding_map(&g, &enc);
        if let Some(phi) = &res.map {
            assert!(oracle_valid(&g, &enc, phi));
            assert!(is_encoding_map(&g, &enc, phi));
            yes += 1;
        }
        assert_eq!(res.map.is_some(), oracle_encodable(&g, &enc));
    }
    assert!(yes > 20, "too few encodable samples: {yes}");
}

#[test]
fn fixture_witnesses() {
    assert_eq!(is_simple_path_encoding(&builtin("2k2k1-k4")).unwrap().labels, vec![0, 1, 2]);
    assert_eq!(is_simple_path_encoding(&builtin("bip-2p3k1")).unwrap().labels, vec![0, 1, 2, 3]);
    assert_eq!(is_simple_path_encoding(&builtin("h1020-k5")).unwrap().labels, vec![0, 1, 2, 3]);
    assert_eq!(is_simple_path_encoding(&Encoding::new(4)), None);
}

#[test]
fn asymmetric_l_has_no_witness() {
    let mut e = builtin("2k2k1-k4");
    e.set_l(0, 1, Adj::A);
    assert_eq!(is_simple_path_encoding(&e), None);
    assert!(check_witness(&e, &PathWitness { labels: vec![0, 1, 2] }).is_err());
}

#[test]
fn invalid_witness_rejected() {
    let enc = builtin("2k2k1-k4");
    for labels in [vec![0], vec![1, 0, 2], vec![0, 1, 0], vec![0, 1]] {
        let w = PathWitness { labels };
        assert!(matches!(reduce_into_class(&path(3), &enc, &w), Err(EncodingError::InvalidWitness(_))));
    }
}

#[test]
fn reduction_vertex_count_and_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in ["2k2k1-k4", "p6-p4p2-k4", "bip-2p3k1", "h1020-k5"] {
        let enc = builtin(name);
        let w = is_simple_path_encoding(&enc).unwrap();
        let t = w.labels.len();
        for _ in 0..5 {
            let g = random_graph(rng.gen_range(2..7), 0.5, &mut rng);
            let (n, m) = (g.n(), g.edge_count());
            let r = reduce_into_class(&g, &enc, &w).unwrap();
            assert_eq!(r.graph.n(), n + m + 2 * m * (t - 2));
            assert!(r.graph.is_uncolored());
            assert!(oracle_valid(&r.graph, &enc, &r.phi), "{name}");
        }
    }
}

#[test]
fn reduction_with_two_labels() {
    let mut enc = Encoding::new(2);
    enc.set_ln(0, 1, Ln::Inf);
    enc.set_ln(1, 0, Ln::Finite(2));
    let w = is_simple_path_encoding(&enc).unwrap();
    assert_eq!(w.labels, vec![0, 1]);
    let g = path(4);
    let r = reduce_into_class(&g, &enc, &w).unwrap();
    assert_eq!(r.graph.n(), 4 + 3);
    assert_eq!(r.graph.edge_count(), 6);
    assert!(oracle_valid(&r.graph, &enc, &r.phi));
}

#[test]
fn normalized_k5_reduces_into_class() {
    let enc = builtin("2k2k1-k4");
    let w = is_simple_path_encoding(&enc).unwrap();
    let g = normalize_for_reduction(&complete(5));
    assert!(in_reduction_class(&g));
    let r = reduce_into_class(&g, &enc, &w).unwrap();
    let found = find_encoding_map(&r.graph, &enc).map.expect("encodable");
    assert!(oracle_valid(&r.graph, &enc, &found));
    assert!(oracle_valid(&r.graph, &enc, &r.phi));
}

#[test]
fn normalize_edgeless() {
    let g = normalize_for_reduction(&independent(5));
    assert!(in_reduction_class(&g));
    assert_eq!((g.n() - 5) % 6, 0);
    assert!(!in_reduction_class(&independent(5)));
}

#[test]
fn normalize_fixpoint() {
    // complete tripartite graph with parts of size 5: n = 15, m = 75, degree 10, co-degree 4
    let g = complement(&union_all(&[complete(5), complete(5), complete(5)]));
    assert!(in_reduction_class(&g));
    let h = normalize_for_reduction(&g);
    assert_eq!(h.n(), g.n());
    assert_eq!(h.edges(), g.edges());
    assert!(!in_reduction_class(&biclique(5, 5)));
}

#[test]
fn normalize_respects_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(1..=7);
        let a = random_graph(n, 0.5, &mut rng);
        let b = if rng.gen_bool(0.5) { shuffled(&a, &mut rng) } else { random_graph(n, 0.5, &mut rng) };
        let expected = oracle_iso(&a, &b);
        let (na, nb) = (normalize_for_reduction(&a), normalize_for_reduction(&b));
        assert_eq!(!iso_coset(&na, &nb).is_empty(), expected);
    }
}

#[test]
fn reduction_is_faithful_on_normalized_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let enc = builtin("2k2k1-k4");
    let w = is_simple_path_encoding(&enc).unwrap();
    let (mut iso, mut non) = (0, 0);
    for i in 0..60 {
        let n = rng.gen_range(3..=5);
        let a = random_graph(n, 0.5, &mut rng);
        let b = if i % 2 == 0 { shuffled(&a, &mut rng) } else { random_graph(n, 0.5, &mut rng) };
        let (na, nb) = (normalize_for_reduction(&a), normalize_for_reduction(&b));
        let expected = !iso_coset(&na, &nb).is_empty();
        let ra = reduce_into_class(&na, &enc, &w).unwrap().graph;
        let rb = reduce_into_class(&nb, &enc, &w).unwrap().graph;
        assert_eq!(!iso_coset(&ra, &rb).is_empty(), expected, "pair {i}");
        if expected {
            iso += 1;
        } else {
            non += 1;
        }
    }
    assert!(iso >= 25 && non >= 10, "iso {iso}, non-iso {non}");
}

fn bounded_degree_encoding(c: u32, dense: bool) -> Encoding {
    let mut e = Encoding::new(1);
    e.set(0, 0, if dense { Adj::A } else { Adj::N }, Ln::Finite(c));
    e
}

/// All graphs on `n` vertices, one per edge subset.
fn all_graphs(n: usize) -> Vec<ColoredGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            ColoredGraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

#[test]
fn single_label_bounded_degree_matches_oracle() {
    for dense in [false, true] {
        let enc = bounded_degree_encoding(2, dense);
        for n in 1..=5 {
            let pool: Vec<ColoredGraph> = all_graphs(n)
                .into_iter()
                .filter(|g| {
                    let degs = g.degree_sequence();
                    degs.iter().all(|&d| if dense { n - 1 - d <= 2 } else { d <= 2 })
                })
                .collect();
            let step = (pool.len() / 12).max(1);
            let sample: Vec<&ColoredGraph> = pool.iter().step_by(step).collect();
            for a in &sample {
                for b in &sample {
                    let want = if oracle_iso(a, b) { LnVerdict::Isomorphic } else { LnVerdict::NonIsomorphic };
                    assert_eq!(bounded_ln_iso(a, b, &enc).unwrap(), want);
                }
            }
        }
    }
}

#[test]
fn single_label_random_pairs_up_to_seven() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let enc = bounded_degree_encoding(2, false);
    let mut checked = 0;
    while checked < 60 {
        let n = rng.gen_range(6..=7);
        let a = graph_core::gen::random_bounded_degree(n, 2, 20, &mut rng);
        let b = if rng.gen_bool(0.5) {
            shuffled(&a, &mut rng)
        } else {
            graph_core::gen::random_bounded_degree(n, 2, 20, &mut rng)
        };
        let want = if oracle_iso(&a, &b) { LnVerdict::Isomorphic } else { LnVerdict::NonIsomorphic };
        assert_eq!(bounded_ln_iso(&a, &b, &enc).unwrap(), want);
        checked += 1;
    }
}

#[test]
fn identical_inputs_are_isomorphic() {
    let enc = builtin("2k2k1-k4");
    let mut finite = enc.clone();
    finite.set_ln(0, 1, Ln::Finite(3));
    let g = complete(3);
    assert_eq!(bounded_ln_iso(&g, &g, &finite).unwrap(), LnVerdict::Isomorphic);
}

#[test]
fn unbounded_budget_rejected() {
    let g = complete(3);
    assert_eq!(bounded_ln_iso(&g, &g, &builtin("2k2k1-k4")), Err(EncodingError::InfiniteBudget));
}

#[test]
fn neither_encodable_is_undetermined() {
    let enc = bounded_degree_encoding(1, false);
    let (a, b) = (complete(4), complement(&path(4)));
    assert_eq!(bounded_ln_iso(&a, &b, &enc).unwrap(), LnVerdict::Undetermined);
}

#[test]
fn one_encodable_input_suffices() {
    let enc = bounded_degree_encoding(1, false);
    let a = complete(3);
    let b = union_all(&[complete(2), complete(1)]);
    assert_eq!(bounded_ln_iso(&a, &b, &enc).unwrap(), LnVerdict::NonIsomorphic);
    assert_eq!(bounded_ln_iso(&b, &a, &enc).unwrap(), LnVerdict::NonIsomorphic);
}

/// Random graph on `c` classes whose color valence is at most `c`, with the
/// encoding describing it.
fn valence_instance(n: usize, c: usize, rng: &mut ChaCha8Rng) -> (ColoredGraph, Encoding) {
    let class: Vec<usize> = (0..n).map(|v| v % c).collect();
    let mut enc = Encoding::new(c);
    for i in 0..c {
        for j in i..c {
            let adj = if rng.gen_bool(0.5) { Adj::A } else { Adj::N };
            enc.set_l_sym(i, j, adj);
        }
    }
    for i in 0..c {
        for j in 0..c {
            enc.set_ln(i, j, Ln::Finite(c as u32));
        }
    }
    loop {
        let mut g = ColoredGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                let base = enc.l(class[u], class[v]) == Adj::A;
                if base != rng.gen_bool(0.15) {
                    g.add_edge(u, v);
                }
            }
        }
        if is_encoding_map(&g, &enc, &class) {
            return (g, enc);
        }
    }
}

#[test]
fn bounded_color_valence_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..40 {
        let c = rng.gen_range(2..=3);
        let n = rng.gen_range(4..=8);
        let (a, enc) = valence_instance(n, c, &mut rng);
        let b = match i % 3 {
            0 => shuffled(&a, &mut rng),
            1 => valence_instance(n, c, &mut rng).0,
            _ => {
                let mut b = a.clone();
                b.toggle_edge(0, 1);
                shuffled(&b, &mut rng)
            }
        };
        let want = if oracle_iso(&a, &b) { LnVerdict::Isomorphic } else { LnVerdict::NonIsomorphic };
        assert_eq!(bounded_ln_iso(&a, &b, &enc).unwrap(), want, "instance {i}");
    }
}

#[test]
fn twin_merge_doubles_budgets() {
    let mut e = Encoding::new(3);
    e.set_l_sym(0, 2, Adj::A);
    e.set_l_sym(1, 2, Adj::A);
    e.set_ln(0, 2, Ln::Finite(1));
    e.set_ln(1, 2, Ln::Finite(3));
    let (m, proj) = merge_twin_labels(&e);
    assert_eq!(m.k(), 2);
    assert_eq!(proj, vec![0, 0, 1]);
    assert_eq!(m.ln(0, 1), Ln::Finite(6));
    assert_eq!(m.l(0, 1), Adj::A);
    assert_eq!(m.ln(1, 1), Ln::Finite(0));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = ColoredGraph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn found_maps_validate(g in arb_graph(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let enc = random_encoding(rng.gen_range(1..=3), &mut rng);
        if let Some(phi) = find_encoding_map(&g, &enc).map {
            prop_assert!(oracle_valid(&g, &enc, &phi));
        }
    }

    #[test]
    fn constructed_labels_validate(g in arb_graph(6)) {
        for (_, enc) in builtin_encodings() {
            let w = is_simple_path_encoding(&enc).expect("fixtures are path encodings");
            let r = reduce_into_class(&g, &enc, &w).unwrap();
            prop_assert!(is_encoding_map(&r.graph, &enc, &r.phi));
        }
    }

    #[test]
    fn encodability_is_invariant(g in arb_graph(6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let enc = random_encoding(3, &mut rng);
        let h = shuffled(&g, &mut rng);
        prop_assert_eq!(find_encoding_map(&g, &enc).map.is_some(), find_encoding_map(&h, &enc).map.is_some());
    }

    #[test]
    fn format_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let enc = random_encoding(rng.gen_range(1..=4), &mut rng);
        prop_assert_eq!(parse_encoding(&write_encoding(&enc)).unwrap(), enc);
    }
}
