//! Standard graph families and fixed example graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parameterised graph family.
///
/// Leg lengths count the vertices of a pendent path, excluding the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with `k` leaves.
    Star(usize),
    GeneralizedStar(Vec<usize>),
    DoubleGeneralizedStar(Vec<usize>, Vec<usize>),
    /// The spider with three legs of length two.
    Star222,
    Petersen,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) if *n == 0 => {
                bad("size must be positive")
            }
            FamilySpec::Cycle(n) if *n < 3 => bad("a cycle needs at least 3 vertices"),
            FamilySpec::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                bad("both parts must be nonempty")
            }
            FamilySpec::GeneralizedStar(legs) if legs.len() < 3 => {
                bad("a generalized star needs at least 3 legs")
            }
            FamilySpec::DoubleGeneralizedStar(a, b) if a.len() < 2 || b.len() < 2 => {
                bad("each center needs at least 2 legs")
            }
            FamilySpec::GeneralizedStar(legs) if legs.contains(&0) => bad("legs must be nonempty"),
            FamilySpec::DoubleGeneralizedStar(a, b) if a.contains(&0) || b.contains(&0) => {
                bad("legs must be nonempty")
            }
            _ => Ok(()),
        }
    }

    /// Canonical labelled instance of the family.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::Complete(n) => {
                let edges: Vec<_> = (0..*n)
                    .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edge_list(*n, &edges)
            }
            FamilySpec::CompleteBipartite(a, b) => {
                let edges: Vec<_> = (0..*a)
                    .flat_map(|u| (*a..a + b).map(move |v| (u, v)))
                    .collect();
                Graph::from_edge_list(a + b, &edges)
            }
            FamilySpec::Star(k) => {
                let edges: Vec<_> = (1..=*k).map(|v| (0, v)).collect();
                Graph::from_edge_list(k + 1, &edges)
            }
            FamilySpec::GeneralizedStar(legs) => {
                let mut edges = Vec::new();
                let n = attach_legs(0, 1, legs, &mut edges);
                Graph::from_edge_list(n, &edges)
            }
            FamilySpec::DoubleGeneralizedStar(a, b) => {
                let mut edges = vec![(0, 1)];
                let next = attach_legs(0, 2, a, &mut edges);
                let n = attach_legs(1, next, b, &mut edges);
                Graph::from_edge_list(n, &edges)
            }
            FamilySpec::Star222 => FamilySpec::GeneralizedStar(vec![2, 2, 2]).generate(),
            FamilySpec::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                Graph::from_edge_list(10, &edges)
            }
        }
    }
}

/// Appends pendent paths at `center`, numbering new vertices from `next`;
/// returns the next unused label.
fn attach_legs(
    center: usize,
    mut next: usize,
    legs: &[usize],
    edges: &mut Vec<(usize, usize)>,
) -> usize {
    for &len in legs {
        let mut prev = center;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    next
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            FamilySpec::Star(k) => write!(f, "star({k})"),
            FamilySpec::GeneralizedStar(l) => write!(f, "generalized_star({})", join(l)),
            FamilySpec::DoubleGeneralizedStar(a, b) => {
                write!(f, "double_generalized_star({};{})", join(a), join(b))
            }
            FamilySpec::Star222 => write!(f, "star222"),
            FamilySpec::Petersen => write!(f, "petersen"),
        }
    }
}

/// Tree on 18 vertices with two rounds of star centers.
///
/// Vertex `i` is `v{i+1}` for `i < 17`; vertex 17 is the extra pendant
/// `v10b` on `v9`. Centers: `{v3, v9, v15}` in the first round,
/// `{v5, v13}` in the second; the edge `v6 v7` survives.
pub fn layered_star_tree() -> Graph {
    const EDGES: [(usize, usize); 17] = [
        (1, 3),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (5, 8),
        (8, 9),
        (9, 10),
        (9, 18),
        (9, 11),
        (9, 12),
        (12, 13),
        (13, 14),
        (14, 15),
        (15, 16),
        (15, 17),
    ];
    let edges: Vec<_> = EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edge_list(18, &edges).expect("static edge list")
}

/// Leafy graph on 13 vertices: a triangle `0,1,2` with a pendant edge
/// `2-3`, and two or three leaves hung on each of `0..=3`.
pub fn leafy_triangle_graph() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (0, 2),
        (2, 3),
        (0, 4),
        (0, 5),
        (1, 6),
        (1, 7),
        (1, 8),
        (2, 9),
        (2, 10),
        (3, 11),
        (3, 12),
    ];
    Graph::from_edge_list(13, &edges).expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn path_six() {
        let g = FamilySpec::Path(6).generate().unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
        );
        assert_eq!(g.leaves().len(), 2);
    }

    #[test]
    fn star222_layout_and_degrees() {
        let g = FamilySpec::Star222.generate().unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6)]
        );
        assert_eq!(degree_multiset(&g), vec![3, 2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = FamilySpec::Petersen.generate().unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        // spokes and pentagram
        assert!(g.has_edge(0, 5) && g.has_edge(5, 7) && g.has_edge(5, 8));
        assert!(!g.has_edge(5, 6));
    }

    #[test]
    fn double_generalized_star_layout() {
        let g = FamilySpec::DoubleGeneralizedStar(vec![2, 1], vec![1, 1])
            .generate()
            .unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert!(g.is_tree());
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::GeneralizedStar(vec![1, 2]).generate().is_err());
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::Path(0).generate().is_err());
        assert!(FamilySpec::CompleteBipartite(0, 3).generate().is_err());
        assert!(FamilySpec::DoubleGeneralizedStar(vec![2], vec![2, 2])
            .generate()
            .is_err());
        assert!(FamilySpec::GeneralizedStar(vec![1, 0, 2])
            .generate()
            .is_err());
    }

    #[test]
    fn fixtures_are_well_formed() {
        let t = layered_star_tree();
        assert!(t.is_tree());
        assert_eq!(t.n(), 18);
        assert_eq!(t.degree(8), 5);
        let g = leafy_triangle_graph();
        assert_eq!(g.n(), 13);
        assert!(g.is_connected());
    }
}
