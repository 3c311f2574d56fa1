//! Prüfer codes, random labelled trees, and enumeration of unlabelled trees.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by [`enumerate_trees`].
pub const MAX_ENUMERATED_ORDER: usize = 10;

/// Decodes a Prüfer sequence over `0..n`, where `n = seq.len() + 2`.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edge_list(n, &edges)
}

/// Uniform random labelled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_pruefer(&seq).expect("sequence in range")
        }
    }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical form.
///
/// Only Prüfer sequences whose label multiplicities are non-increasing in
/// the label are decoded: relabelling any tree by descending degree gives
/// such a sequence, so every class is still reached.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATED_ORDER).contains(&n) {
        return Err(Error::TreeSizeUnsupported {
            n,
            max: MAX_ENUMERATED_ORDER,
        });
    }
    match n {
        1 => return Ok(vec![Graph::empty(1)]),
        2 => return Ok(vec![tree_from_pruefer(&[])?]),
        _ => {}
    }
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let mut counts = Vec::new();
    for_each_partition(n - 2, n, n - 2, &mut counts, &mut |counts| {
        let mut remaining = counts.to_vec();
        let mut seq = Vec::with_capacity(n - 2);
        for_each_arrangement(&mut remaining, &mut seq, n - 2, &mut |seq| {
            let tree = tree_from_pruefer(seq).expect("valid sequence");
            let key = tree_canonical_form(&tree).expect("decoded tree");
            classes.entry(key).or_insert(tree);
        });
    });
    Ok(classes.into_values().collect())
}

/// Non-increasing vectors of at most `parts` positive entries summing to `total`.
fn for_each_partition(
    total: usize,
    parts: usize,
    max_part: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if total == 0 {
        f(acc);
        return;
    }
    if acc.len() == parts {
        return;
    }
    for part in (1..=max_part.min(total)).rev() {
        acc.push(part);
        for_each_partition(total - part, parts, part, acc, f);
        acc.pop();
    }
}

fn for_each_arrangement(
    remaining: &mut [usize],
    seq: &mut Vec<usize>,
    len: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if seq.len() == len {
        f(seq);
        return;
    }
    for label in 0..remaining.len() {
        if remaining[label] > 0 {
            remaining[label] -= 1;
            seq.push(label);
            for_each_arrangement(remaining, seq, len, f);
            seq.pop();
            remaining[label] += 1;
        }
    }
}

/// Isomorphism-invariant encoding of a tree.
///
/// The tree is rooted at its center (at the smaller of the two encodings
/// when it has two centers) and encoded as nested parentheses with child
/// encodings sorted.
pub fn tree_canonical_form(g: &Graph) -> Result<Vec<u8>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let centers = tree_centers(g);
    let form = centers
        .iter()
        .map(|&c| encode_rooted(g, c, usize::MAX))
        .min()
        .expect("a tree has a center");
    Ok(form)
}

/// The one or two vertices minimising eccentricity.
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in g.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(g, w, v))
        .collect();
    children.sort_unstable();
    let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pruefer_decoding() {
        // Textbook example: [3,3,3,4] on 6 vertices.
        let t = tree_from_pruefer(&[3, 3, 3, 4]).unwrap();
        assert_eq!(
            t.edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
        );
        assert!(tree_from_pruefer(&[]).unwrap().is_path());
        assert!(tree_from_pruefer(&[4]).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_trees(4).unwrap().len(), 2);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn canonical_form_invariance() {
        let p4 = FamilySpec::Path(4).generate().unwrap();
        let relabelled = p4.relabel(&[2, 0, 3, 1]).unwrap();
        assert_eq!(
            tree_canonical_form(&p4).unwrap(),
            tree_canonical_form(&relabelled).unwrap()
        );
        let star = FamilySpec::Star(3).generate().unwrap();
        assert_ne!(
            tree_canonical_form(&p4).unwrap(),
            tree_canonical_form(&star).unwrap()
        );
        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        assert_eq!(tree_canonical_form(&c4), Err(Error::NotATree));
    }

    #[test]
    fn centers() {
        assert_eq!(
            tree_centers(&FamilySpec::Path(5).generate().unwrap()),
            vec![2]
        );
        assert_eq!(
            tree_centers(&FamilySpec::Path(6).generate().unwrap()),
            vec![2, 3]
        );
    }
}
