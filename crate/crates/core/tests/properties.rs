use fortress::brute;
use fortress::forcing::{closure, closure_with_rng, is_fort, BitGraph};
use fortress::forts::is_minimal_fort;
use fortress::graph6::{parse_graph6, to_graph6};
use fortress::structure::star_centers;
use fortress::trees::{random_tree, tree_canonical_form};
use fortress::{FamilySpec, Graph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, u64, u64)> {
    graph(max_n).prop_flat_map(|g| {
        let full = (1u64 << g.n()) - 1;
        (Just(g), 0..=full, 0..=full)
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn set(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_mask(g.n(), mask)
}

proptest! {
    #[test]
    fn closure_is_extensive_and_idempotent((g, s, _) in graph_and_sets(12)) {
        let s = set(&g, s);
        let cl = closure(&g, &s).final_blue;
        prop_assert!(s.is_subset(&cl));
        prop_assert_eq!(closure(&g, &cl).final_blue, cl);
    }

    #[test]
    fn closure_is_monotone((g, a, b) in graph_and_sets(12)) {
        let small = set(&g, a & b);
        let large = set(&g, a);
        prop_assert!(closure(&g, &small).final_blue.is_subset(&closure(&g, &large).final_blue));
    }

    #[test]
    fn closure_ignores_force_order((g, s, _) in graph_and_sets(12), seed in any::<u64>()) {
        let s = set(&g, s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = closure_with_rng(&g, &s, &mut rng);
        let fixed = closure(&g, &s);
        prop_assert_eq!(&random.final_blue, &fixed.final_blue);
        prop_assert_eq!(random.forces.len(), fixed.final_blue.len() - s.len());
    }

    #[test]
    fn closure_kernels_agree((g, s, _) in graph_and_sets(12)) {
        let bg = BitGraph::new(&g).unwrap();
        let queue = closure(&g, &set(&g, s)).final_blue.to_mask().unwrap();
        prop_assert_eq!(bg.closure(s), queue);
        prop_assert_eq!(brute::closure_by_sweeps(&g, s), queue);
    }

    #[test]
    fn forces_are_legal((g, s, _) in graph_and_sets(10)) {
        let trace = closure(&g, &set(&g, s));
        let mut blue = set(&g, s);
        for &(u, v) in &trace.forces {
            prop_assert!(blue.contains(u) && !blue.contains(v));
            let whites: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !blue.contains(w)).collect();
            prop_assert_eq!(whites, vec![v]);
            blue.insert(v);
        }
        prop_assert_eq!(blue, trace.final_blue);
    }

    #[test]
    fn unforced_part_is_a_fort((g, s, _) in graph_and_sets(12)) {
        let cl = closure(&g, &set(&g, s)).final_blue;
        let rest = cl.complement();
        prop_assert!(rest.is_empty() || is_fort(&g, &rest));
    }

    #[test]
    fn minimal_fort_criterion_matches_definition(g in graph(8)) {
        let minimal = brute::minimal_forts(&g).unwrap();
        for w in brute::all_forts(&g).unwrap() {
            prop_assert_eq!(is_minimal_fort(&g, &set(&g, w)), minimal.contains(&w));
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(15)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(t in tree(14), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..t.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let relabelled = t.relabel(&perm).unwrap();
        prop_assert_eq!(tree_canonical_form(&t).unwrap(), tree_canonical_form(&relabelled).unwrap());
    }

    #[test]
    fn star_rounds_partition_the_tree(t in tree(16)) {
        let d = star_centers(&t);
        let mut seen = d.residual.clone();
        for layer in &d.layers {
            prop_assert!(layer.centers.is_subset(&layer.removed));
            prop_assert!(layer.removed.is_disjoint(&seen));
            seen = seen.union(&layer.removed);
        }
        prop_assert_eq!(seen, t.vertices());
    }
}

#[test]
fn graph6_matches_reference_strings() {
    let petersen = FamilySpec::Petersen.generate().unwrap();
    assert_eq!(to_graph6(&petersen).unwrap(), "IheA@GUAo");
    let t = Graph::from_edge_list(7, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6)]).unwrap();
    assert_eq!(to_graph6(&t).unwrap(), "F[`A?");
    assert_eq!(parse_graph6("F[`A?").unwrap(), t);
    let k64 = FamilySpec::Complete(64).generate().unwrap();
    assert!(to_graph6(&k64).unwrap().starts_with("~?@?~~"));
}
