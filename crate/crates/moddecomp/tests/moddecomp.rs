use std::collections::BTreeSet;

use graph_core::family::{biclique, complete, cycle, path};
use graph_core::gen::{random_bipartite, random_graph, random_permutation};
use graph_core::{complement, disjoint_union, join_universal, ColorTable, ColoredGraph};
use moddecomp::{
    classical_functor, decomposition_invariant, degree_dependence_modules, is_colored_module, is_nontrivial_module,
    is_uncolored_module, nc_closure, nc_closure_ordered, quotient, reversibility_case, ClassicalFunctor,
    DecompositionFunctor, DegreeDependenceFunctor, InvariantValue, KeepOne, ModError, ModuleFamily,
    ReversibilityCase,
};
use permgroup::canonical_form;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use refinement::{color_valence, refined_graph};

fn brute_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
    fn rec(g1: &ColoredGraph, g2: &ColoredGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g1.n() {
            return true;
        }
        for w in 0..g2.n() {
            if used[w] || g1.color(v) != g2.color(w) || (0..v).any(|u| g1.has_edge(u, v) != g2.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if rec(g1, g2, map, used) {
                return true;
            }
            used[w] = false;
            map.pop();
        }
        false
    }
    g1.n() == g2.n() && rec(g1, g2, &mut Vec::new(), &mut vec![false; g2.n()])
}

/// Every uncolored module of size between 2 and n-1, by subset enumeration.
fn brute_modules(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|m| m.len() >= 2 && m.len() < n)
        .filter(|m| {
            (0..n).filter(|z| !m.contains(z)).all(|z| {
                let k = m.iter().filter(|&&x| g.has_edge(z, x)).count();
                k == 0 || k == m.len()
            })
        })
        .collect()
}

fn canonical_inv(g: &ColoredGraph, _: &mut ColorTable) -> Result<InvariantValue, ModError> {
    Ok(InvariantValue(canonical_form(g).certificate.to_bytes()))
}

/// Complete for edgeless and complete graphs only.
fn trivial_graph_inv(g: &ColoredGraph, _: &mut ColorTable) -> Result<InvariantValue, ModError> {
    let mut colors = g.colors().to_vec();
    colors.sort_unstable();
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(g.n() as u64).to_le_bytes());
    bytes.extend_from_slice(&(g.edge_count() as u64).to_le_bytes());
    for c in colors {
        bytes.extend_from_slice(&c.to_le_bytes());
    }
    Ok(InvariantValue(bytes))
}

fn classical_invariant(
    g: &ColoredGraph,
    table: &mut ColorTable,
    prime: fn(&ColoredGraph, &mut ColorTable) -> Result<InvariantValue, ModError>,
) -> (InvariantValue, usize) {
    let mut prime = prime;
    let (inv, stats) = decomposition_invariant(g, &ClassicalFunctor, &KeepOne, &mut prime, table).unwrap();
    (inv, stats.prime_calls)
}

fn random_cograph(n: usize, rng: &mut ChaCha8Rng) -> ColoredGraph {
    if n == 1 {
        return ColoredGraph::empty(1);
    }
    let k = rng.gen_range(1..n);
    let a = random_cograph(k, rng);
    let b = random_cograph(n - k, rng);
    let u = disjoint_union(&a, &b);
    if rng.gen_bool(0.5) {
        u
    } else {
        let mut j = u.clone();
        for x in 0..k {
            for y in k..n {
                j.add_edge(x, y);
            }
        }
        j
    }
}

fn sets(fam: &ModuleFamily) -> BTreeSet<Vec<usize>> {
    fam.modules.iter().cloned().collect()
}

#[test]
fn module_predicates() {
    let k33 = biclique(3, 3);
    assert!(is_colored_module(&k33, &[2]));
    assert!(!is_nontrivial_module(&k33, &[2]));
    assert!(is_colored_module(&k33, &[0, 1, 2]));
    assert!(is_nontrivial_module(&k33, &[0, 1, 2]));
    assert!(!is_colored_module(&path(4), &[0, 1]));
}

#[test]
fn matching_pair_is_colored_but_not_classical() {
    // A = {0,1,2}, B = {3,4,5}; A' = {0,1}, B' = {3,4} matched 0-3, 1-4
    let edges = [(0, 3), (1, 4), (0, 5), (1, 5), (2, 3), (2, 4), (2, 5)];
    let g = ColoredGraph::from_edges(6, &edges).unwrap().with_colors(vec![0, 0, 0, 1, 1, 1]);
    assert!(g.is_connected());
    assert!(is_colored_module(&g, &[0, 1, 3, 4]));
    assert!(!is_uncolored_module(&g, &[0, 1, 3, 4]));
    for m in brute_modules(&g) {
        assert!(m.iter().all(|v| ![0, 1, 3, 4].contains(v)), "classical module {m:?}");
    }
}

#[test]
fn classical_functor_examples() {
    let two_triangles = disjoint_union(&complete(3), &complete(3));
    assert_eq!(sets(&classical_functor(&two_triangles)), BTreeSet::from([vec![0, 1, 2], vec![3, 4, 5]]));
    assert_eq!(sets(&classical_functor(&biclique(3, 3))), BTreeSet::from([vec![0, 1, 2], vec![3, 4, 5]]));
    let p4 = path(4);
    assert!(brute_modules(&p4).is_empty());
    assert_eq!(sets(&classical_functor(&p4)), (0..4).map(|v| vec![v]).collect());
}

#[test]
fn classical_functor_matches_maximal_modules_on_prime_like_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    for _ in 0..400 {
        let n = rng.gen_range(4..9);
        let g = random_graph(n, 0.5, &mut rng);
        if !g.is_connected() || !complement(&g).is_connected() {
            continue;
        }
        let all = brute_modules(&g);
        let maximal: BTreeSet<Vec<usize>> = all
            .iter()
            .filter(|m| !all.iter().any(|o| o.len() > m.len() && m.iter().all(|x| o.contains(x))))
            .cloned()
            .collect();
        let fam = classical_functor(&g);
        let got: BTreeSet<Vec<usize>> = fam.modules.iter().filter(|m| m.len() > 1).cloned().collect();
        assert_eq!(got, maximal, "{g:?}");
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn quotient_examples() {
    let mut t = ColorTable::new();
    let p4 = path(4);
    let fam = classical_functor(&p4);
    let q = quotient(&p4, &fam, &KeepOne, &[None, None, None, None], &mut t).unwrap();
    assert_eq!(q.n(), 4);
    assert_eq!(q.edges(), p4.edges());

    let k33 = biclique(3, 3).with_colors(vec![1, 1, 1, 2, 2, 2]);
    let fam = classical_functor(&k33);
    let inv = |g: &ColoredGraph| Some(InvariantValue(canonical_form(g).certificate.to_bytes()));
    let invs: Vec<_> = fam.modules.iter().map(|m| inv(&k33.induced(m))).collect();
    let q = quotient(&k33, &fam, &KeepOne, &invs, &mut t).unwrap();
    assert_eq!(q.n(), 2);
    assert_eq!(q.edge_count(), 1);
    assert_ne!(q.color(0), q.color(1));

    let k222 = complement(&disjoint_union(&disjoint_union(&complete(2), &complete(2)), &complete(2)));
    let fam = classical_functor(&k222);
    assert_eq!(fam.modules.len(), 3);
    let invs: Vec<_> = fam.modules.iter().map(|m| inv(&k222.induced(m))).collect();
    let q = quotient(&k222, &fam, &KeepOne, &invs, &mut t).unwrap();
    assert!(brute_iso(&q.uncolored(), &complete(3)));

    let bad = ModuleFamily { modules: vec![vec![0, 1]], nontrivial: vec![false] };
    assert_eq!(quotient(&p4, &bad, &KeepOne, &[None], &mut t), Err(ModError::NotAPartition));
}

#[test]
fn reversibility_examples() {
    let two_triangles = disjoint_union(&complete(3), &complete(3));
    let fam = classical_functor(&two_triangles);
    assert_eq!(reversibility_case(&two_triangles, &fam, &KeepOne), ReversibilityCase::Singletons);
    let single = ModuleFamily::new(&complete(3), vec![vec![0, 1, 2]]);
    assert_eq!(reversibility_case(&complete(3), &single, &KeepOne), ReversibilityCase::OneTrivial);

    // replacement that keeps every vertex, so only the structural case applies
    struct KeepAll;
    impl moddecomp::ReplacementOperator for KeepAll {
        fn replace(&self, g: &ColoredGraph, m: &[usize], _: &mut ColorTable) -> Result<Vec<(usize, u32)>, ModError> {
            Ok(m.iter().map(|&v| (v, g.color(v))).collect())
        }
    }
    assert_eq!(reversibility_case(&two_triangles, &fam, &KeepAll), ReversibilityCase::ConnectedNonAdjacent);
    let k33 = biclique(3, 3);
    let fam = classical_functor(&k33);
    assert_eq!(reversibility_case(&k33, &fam, &KeepAll), ReversibilityCase::Unknown);
}

#[test]
fn prime_input_goes_straight_to_prime_invariant() {
    let mut t = ColorTable::new();
    let p4 = path(4);
    let (inv, calls) = classical_invariant(&p4, &mut t, canonical_inv);
    assert_eq!(calls, 1);
    assert_eq!(inv, canonical_inv(&p4, &mut t).unwrap());
}

#[test]
fn cograph_invariant_is_complete() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut t = ColorTable::new();
    let graphs: Vec<ColoredGraph> = (0..160).map(|i| random_cograph(1 + i % 6, &mut rng)).collect();
    let invs: Vec<InvariantValue> = graphs.iter().map(|g| classical_invariant(g, &mut t, trivial_graph_inv).0).collect();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            assert_eq!(invs[i] == invs[j], brute_iso(&graphs[i], &graphs[j]), "{:?} {:?}", graphs[i], graphs[j]);
        }
    }
}

#[test]
fn decomposition_invariant_is_complete_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let mut t = ColorTable::new();
    let mut graphs = Vec::new();
    for i in 0..200 {
        let n = 1 + i % 7;
        let g = random_graph(n, rng.gen_range(0.2..0.8), &mut rng);
        let g = if i % 3 == 0 { g.with_colors((0..n).map(|_| rng.gen_range(0..2)).collect()) } else { g };
        graphs.push(g.permuted(&random_permutation(n, &mut rng)));
        graphs.push(g);
    }
    let mut results = Vec::new();
    for g in &graphs {
        let (inv, calls) = classical_invariant(g, &mut t, canonical_inv);
        assert!(calls <= (g.n() * g.n()).max(1));
        results.push(inv);
    }
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len().min(i + 40) {
            assert_eq!(results[i] == results[j], brute_iso(&graphs[i], &graphs[j]), "{:?} {:?}", graphs[i], graphs[j]);
        }
    }
}

#[test]
fn degree_dependence_examples() {
    for k in 2..5 {
        let mut g = ColoredGraph::empty(0);
        for _ in 0..k {
            g = disjoint_union(&g, &complete(3));
        }
        let fam = degree_dependence_modules(&g, 2).unwrap();
        let want: BTreeSet<Vec<usize>> = (0..k).map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2]).collect();
        assert_eq!(sets(&fam), want);
    }
    for k in 3..5 {
        let mut g = ColoredGraph::empty(0);
        for _ in 0..k {
            g = disjoint_union(&g, &cycle(5));
        }
        let fam = degree_dependence_modules(&g, 2).unwrap();
        let want: BTreeSet<Vec<usize>> = (0..k).map(|i| (5 * i..5 * i + 5).collect()).collect();
        assert_eq!(sets(&fam), want);
    }
}

#[test]
fn wheel_is_rejected() {
    let wheel = join_universal(&cycle(8), 1, 0);
    assert!(matches!(degree_dependence_modules(&wheel, 3), Err(ModError::Precondition(_))));
    let refined = refined_graph(&wheel);
    assert!(matches!(degree_dependence_modules(&refined, 3), Err(ModError::Precondition(_))));
}

#[test]
fn degree_dependence_modules_are_colored_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut checked = 0;
    for _ in 0..300 {
        let h = random_graph(rng.gen_range(3..7), 0.5, &mut rng);
        let copies = rng.gen_range(2..6);
        let mut g = ColoredGraph::empty(0);
        for _ in 0..copies {
            g = disjoint_union(&g, &h);
        }
        if rng.gen_bool(0.5) {
            g = complement(&g);
        }
        let g = refined_graph(&g.permuted(&random_permutation(g.n(), &mut rng)));
        let c = color_valence(&g);
        match degree_dependence_modules(&g, c) {
            Ok(fam) => {
                assert!(fam.is_partition(g.n()));
                fam.verify(&g).unwrap();
                checked += 1;
            }
            Err(ModError::Precondition(_)) => {}
            Err(e) => panic!("{e} on {g:?}"),
        }
    }
    assert!(checked > 30, "only {checked}");
}

#[test]
fn nc_closure_examples() {
    let g = random_bipartite(3, 3, 0.0, &mut ChaCha8Rng::seed_from_u64(1));
    assert_eq!(nc_closure(&g, 0), vec![0]);
    let twins = biclique(3, 2).with_colors(vec![0, 0, 0, 1, 1]);
    assert_eq!(nc_closure(&twins, 1), vec![0, 1, 2]);
}

#[test]
fn nc_closures_are_nested_and_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for _ in 0..200 {
        let a = rng.gen_range(2..8);
        let g = random_bipartite(a, rng.gen_range(2..8), rng.gen_range(0.1..0.6), &mut rng);
        let closures: Vec<BTreeSet<usize>> = (0..a).map(|v| nc_closure(&g, v).into_iter().collect()).collect();
        for v in 0..a {
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            let again: BTreeSet<usize> = nc_closure_ordered(&g, v, &order).into_iter().collect();
            assert_eq!(again, closures[v]);
            for w in 0..a {
                let (x, y) = (&closures[v], &closures[w]);
                assert!(x.is_disjoint(y) || x.is_subset(y) || y.is_subset(x), "{g:?}");
            }
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = (ColoredGraph, u64)> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_graph(n, 0.5, &mut rng), seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn classical_functor_is_isomorphism_invariant((g, seed) in arb_graph(9)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a);
        let perm = random_permutation(g.n(), &mut rng);
        let h = g.permuted(&perm);
        let fg = classical_functor(&g);
        let fh = classical_functor(&h);
        fg.verify(&g).unwrap();
        let mapped: BTreeSet<Vec<usize>> = fg.modules.iter().map(|m| {
            let mut x: Vec<usize> = m.iter().map(|&v| perm[v]).collect();
            x.sort_unstable();
            x
        }).collect();
        prop_assert_eq!(mapped, sets(&fh));
        prop_assert!(fg.is_partition(g.n()));
    }

    #[test]
    fn degree_dependence_functor_is_isomorphism_invariant(k in 2usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = cycle(rng.gen_range(4..7));
        let mut g = ColoredGraph::empty(0);
        for _ in 0..k + 1 {
            g = disjoint_union(&g, &h);
        }
        let perm = random_permutation(g.n(), &mut rng);
        let f = DegreeDependenceFunctor { c: 2 };
        let fg = f.decompose(&g).unwrap();
        let fh = f.decompose(&g.permuted(&perm)).unwrap();
        let mapped: BTreeSet<Vec<usize>> = fg.modules.iter().map(|m| {
            let mut x: Vec<usize> = m.iter().map(|&v| perm[v]).collect();
            x.sort_unstable();
            x
        }).collect();
        prop_assert_eq!(mapped, sets(&fh));
    }
}
