//! Explicit fort constructions checked against the definitional oracle.

use fortress::brute;
use fortress::structure::{
    fort_spanning_path, has_double_pendant, is_fort_spanning_path, leaf_to_leaf_fort,
};
use fortress::trees::{enumerate_trees, random_tree};
use fortress::{Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn minimal_forts(t: &Graph) -> Vec<VertexSet> {
    brute::minimal_forts(t)
        .unwrap()
        .into_iter()
        .map(|m| VertexSet::from_mask(t.n(), m))
        .collect()
}

fn check_leaf_pairs(t: &Graph) {
    let forts = minimal_forts(t);
    let leaves = t.leaves();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            let w = leaf_to_leaf_fort(t, a, b).unwrap();
            assert!(
                forts.contains(&w),
                "{:?}: fort {w} for leaves {a},{b} is not minimal",
                t.edges().collect::<Vec<_>>()
            );
            assert!(w.contains(a) && w.contains(b));
        }
    }
}

fn check_spanning_paths(t: &Graph) {
    for w in minimal_forts(t) {
        for x in w.iter() {
            let path = fort_spanning_path(t, &w, x).unwrap();
            assert!(is_fort_spanning_path(t, &w, x, &path), "{path:?} for {w}");
        }
    }
}

#[test]
fn leaf_to_leaf_on_all_small_trees() {
    let mut checked = 0;
    for n in 2..=10 {
        for t in enumerate_trees(n).unwrap() {
            if !has_double_pendant(&t) {
                check_leaf_pairs(&t);
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn leaf_to_leaf_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 150 {
        let n = 8 + checked % 7;
        let t = random_tree(n, &mut rng);
        if !has_double_pendant(&t) {
            check_leaf_pairs(&t);
            checked += 1;
        }
    }
}

#[test]
fn spanning_paths_on_small_trees() {
    for n in 2..=9 {
        for t in enumerate_trees(n).unwrap() {
            check_spanning_paths(&t);
        }
    }
}
