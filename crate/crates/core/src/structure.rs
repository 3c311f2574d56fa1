//! Tree structure: star centers, leafy graphs, shape classification, and
//! explicit minimal-fort constructions.
//!
//! Leg lengths count the vertices of a pendent path, excluding its center.
//! "High degree" means degree at least 3 in the host tree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::is_fort;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One round of simultaneous star removals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarLayer {
    /// Vertices with at least two pendant neighbors in this round's graph.
    pub centers: VertexSet,
    /// The centers together with their pendant neighbors.
    pub removed: VertexSet,
    /// Vertices of the graph left after this round.
    pub remaining: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarDecomposition {
    pub layers: Vec<StarLayer>,
    pub all_centers: VertexSet,
    /// Vertices surviving every round.
    pub residual: VertexSet,
}

impl StarDecomposition {
    pub fn residual_graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        g.induced_subgraph(&self.residual)
    }

    /// Whether the residual is a (possibly empty) disjoint union of `K_2`s.
    pub fn residual_is_matching(&self, g: &Graph) -> bool {
        let (h, _) = self.residual_graph(g);
        (0..h.n()).all(|v| h.degree(v) == 1)
    }
}

/// Repeated rounds of star removal until no vertex has a double pendant.
///
/// A round's centers are the vertices with a double pendant at the start of
/// the round. Their stars are then removed one at a time in index order,
/// each taking the center's pendant neighbors at the moment of removal, so a
/// vertex left as a leaf by an earlier removal in the round goes with its
/// center.
pub fn star_centers(g: &Graph) -> StarDecomposition {
    let n = g.n();
    let mut alive = g.vertices();
    let mut layers = Vec::new();
    let mut all_centers = VertexSet::empty(n);
    let pendants = |alive: &VertexSet, v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| {
                alive.contains(u)
                    && g.neighbors(u)
                        .iter()
                        .filter(|&&w| alive.contains(w))
                        .count()
                        == 1
            })
            .collect()
    };
    loop {
        let centers =
            VertexSet::from_members(n, alive.iter().filter(|&v| pendants(&alive, v).len() >= 2));
        if centers.is_empty() {
            break;
        }
        let mut removed = VertexSet::empty(n);
        for v in centers.iter() {
            for u in pendants(&alive, v) {
                alive.remove(u);
                removed.insert(u);
            }
            alive.remove(v);
            removed.insert(v);
        }
        all_centers = all_centers.union(&centers);
        layers.push(StarLayer {
            centers,
            removed,
            remaining: alive.clone(),
        });
    }
    StarDecomposition {
        layers,
        all_centers,
        residual: alive,
    }
}

pub fn has_double_pendant(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.pendant_neighbors(v).len() >= 2)
}

/// Every vertex of degree at least two has a double pendant.
pub fn is_leafy(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) < 2 || g.pendant_neighbors(v).len() >= 2)
}

/// A pendent path hanging off `center`, listed from the vertex adjacent to
/// the center out to the leaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Leg {
    pub center: usize,
    pub vertices: Vec<usize>,
}

impl Leg {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("legs are nonempty")
    }
}

/// The pendent path from `center` through its neighbor `start`, if the
/// branch at `start` is one.
pub fn pendent_leg(t: &Graph, center: usize, start: usize) -> Option<Leg> {
    if !t.has_edge(center, start) {
        return None;
    }
    let mut vertices = vec![start];
    let (mut prev, mut cur) = (center, start);
    loop {
        match t.degree(cur) {
            1 => return Some(Leg { center, vertices }),
            2 => {
                let next = *t.neighbors(cur).iter().find(|&&w| w != prev)?;
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// All pendent paths at `v`, ordered by their first vertex.
pub fn pendent_legs(t: &Graph, v: usize) -> Vec<Leg> {
    t.neighbors(v)
        .iter()
        .filter_map(|&u| pendent_leg(t, v, u))
        .collect()
}

/// A high-degree vertex together with its pendent paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendentGeneralizedStar {
    pub center: usize,
    pub legs: Vec<Leg>,
}

impl PendentGeneralizedStar {
    pub fn shortest_leg(&self) -> &Leg {
        self.legs
            .iter()
            .min_by_key(|l| (l.len(), l.vertices[0]))
            .expect("at least two legs")
    }

    pub fn leg_with_leaf(&self, leaf: usize) -> Option<&Leg> {
        self.legs.iter().find(|l| l.leaf() == leaf)
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

fn high_degree(t: &Graph) -> Vec<usize> {
    (0..t.n()).filter(|&v| t.degree(v) >= 3).collect()
}

/// High-degree vertices all but at most one of whose branches are pendent
/// paths (at least two of them), ordered by center.
pub fn pendent_generalized_stars(t: &Graph) -> Result<Vec<PendentGeneralizedStar>> {
    require_tree(t)?;
    Ok(high_degree(t)
        .into_iter()
        .filter_map(|v| {
            let legs = pendent_legs(t, v);
            (legs.len() >= 2 && legs.len() + 1 >= t.degree(v))
                .then_some(PendentGeneralizedStar { center: v, legs })
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeShape {
    Path {
        n: usize,
    },
    GeneralizedStar {
        center: usize,
        legs: Vec<usize>,
    },
    DoubleGeneralizedStar {
        centers: [usize; 2],
        legs: [Vec<usize>; 2],
    },
    /// Three legs of length two; also a generalized star.
    Star222 {
        center: usize,
    },
    Other,
}

impl TreeShape {
    pub fn is_generalized_star(&self) -> bool {
        matches!(
            self,
            TreeShape::GeneralizedStar { .. } | TreeShape::Star222 { .. }
        )
    }
}

pub fn tree_shape(t: &Graph) -> Result<TreeShape> {
    require_tree(t)?;
    let lengths = |v: usize| pendent_legs(t, v).iter().map(Leg::len).collect::<Vec<_>>();
    Ok(match high_degree(t)[..] {
        [] => TreeShape::Path { n: t.n() },
        [c] => {
            let legs = lengths(c);
            if legs == [2, 2, 2] {
                TreeShape::Star222 { center: c }
            } else {
                TreeShape::GeneralizedStar { center: c, legs }
            }
        }
        [u, v] if t.has_edge(u, v) => TreeShape::DoubleGeneralizedStar {
            centers: [u, v],
            legs: [lengths(u), lengths(v)],
        },
        _ => TreeShape::Other,
    })
}

/// Which end of a path is labelled first in the standard coloring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PathEnd {
    /// The endpoint with the smaller index.
    #[default]
    Low,
    High,
}

/// White vertices of the standard coloring of `path` (listed from `v_1`):
/// `v_{2j}` is blue whenever `2j < len`, everything else is white.
fn standard_whites(path: &[usize]) -> impl Iterator<Item = usize> + '_ {
    let len = path.len();
    path.iter()
        .enumerate()
        .filter(move |&(i, _)| {
            let label = i + 1;
            label % 2 == 1 || label == len
        })
        .map(|(_, &v)| v)
}

/// White vertices of the alternating pattern on a leg read from the center:
/// blue, white, blue, ... with the leaf always white.
fn alternating_whites(leg: &Leg) -> impl Iterator<Item = usize> + '_ {
    let len = leg.len();
    leg.vertices
        .iter()
        .enumerate()
        .filter(move |&(i, _)| i % 2 == 1 || i + 1 == len)
        .map(|(_, &v)| v)
}

/// The fort formed by the white vertices of the standard coloring of a path.
pub fn standard_path_fort(t: &Graph, end: PathEnd) -> Result<VertexSet> {
    let mut order = t.path_order()?;
    if end == PathEnd::High {
        order.reverse();
    }
    Ok(VertexSet::from_members(t.n(), standard_whites(&order)))
}

/// The pendent path at `center` starting at `start`, as an error when the
/// branch is not one.
pub fn leg_at(t: &Graph, center: usize, start: usize) -> Result<Leg> {
    pendent_leg(t, center, start).ok_or_else(|| {
        Error::Precondition(format!("branch {center}->{start} is not a pendent path"))
    })
}

/// The pendent path ending at `leaf`, found by walking inward to the first
/// high-degree vertex.
pub fn leg_to_leaf(t: &Graph, leaf: usize) -> Result<Leg> {
    let not_on_leg = || Error::Precondition(format!("vertex {leaf} does not end a pendent path"));
    if leaf >= t.n() || t.degree(leaf) != 1 {
        return Err(not_on_leg());
    }
    let mut vertices = vec![leaf];
    let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
    while t.degree(cur) == 2 {
        vertices.push(cur);
        let next = *t
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
    }
    if t.degree(cur) < 3 {
        return Err(not_on_leg());
    }
    vertices.reverse();
    Ok(Leg {
        center: cur,
        vertices,
    })
}

fn check_leg(t: &Graph, leg: &Leg) -> Result<()> {
    match leg
        .vertices
        .first()
        .and_then(|&s| pendent_leg(t, leg.center, s))
    {
        Some(ref actual) if actual == leg => Ok(()),
        _ => Err(Error::Precondition(format!(
            "{:?} is not a pendent path of vertex {}",
            leg.vertices, leg.center
        ))),
    }
}

/// Standard coloring on two pendent paths of one high-degree vertex, all
/// other vertices blue.
pub fn standard_two_leg_fort(t: &Graph, first: &Leg, second: &Leg) -> Result<VertexSet> {
    require_tree(t)?;
    check_leg(t, first)?;
    check_leg(t, second)?;
    if first.center != second.center {
        return Err(Error::Precondition(
            "legs hang from different vertices".into(),
        ));
    }
    if first.vertices[0] == second.vertices[0] {
        return Err(Error::Precondition("the two legs coincide".into()));
    }
    if t.degree(first.center) < 3 {
        return Err(Error::Precondition(format!(
            "vertex {} is not high degree",
            first.center
        )));
    }
    Ok(two_leg_whites(t.n(), first, second))
}

fn two_leg_whites(n: usize, first: &Leg, second: &Leg) -> VertexSet {
    VertexSet::from_members(
        n,
        standard_whites(&first.vertices).chain(standard_whites(&second.vertices)),
    )
}

fn reject_short_legs<'a>(legs: impl IntoIterator<Item = &'a Leg>) -> Result<()> {
    match legs.into_iter().find(|l| l.len() == 1) {
        Some(l) => Err(Error::Precondition(format!(
            "leg at vertex {} has length one",
            l.center
        ))),
        None => Ok(()),
    }
}

/// Generalized star without legs of length one: center white, its
/// neighbors blue, and the standard coloring on the rest of every leg.
pub fn adjusted_fort(t: &Graph) -> Result<VertexSet> {
    let center = match tree_shape(t)? {
        TreeShape::GeneralizedStar { center, .. } | TreeShape::Star222 { center } => center,
        _ => return Err(Error::Precondition("not a generalized star".into())),
    };
    let legs = pendent_legs(t, center);
    reject_short_legs(&legs)?;
    let mut w = VertexSet::empty(t.n());
    w.insert(center);
    for leg in &legs {
        for v in standard_whites(&leg.vertices[1..]) {
            w.insert(v);
        }
    }
    Ok(w)
}

fn adjusted_pgs_whites(r: &PendentGeneralizedStar) -> impl Iterator<Item = usize> + '_ {
    std::iter::once(r.center).chain(r.legs.iter().flat_map(alternating_whites))
}

/// Double generalized star without legs of length one: the adjusted pgs
/// colorings of both halves.
pub fn adjusted_pgs_fort(t: &Graph) -> Result<VertexSet> {
    if !matches!(tree_shape(t)?, TreeShape::DoubleGeneralizedStar { .. }) {
        return Err(Error::Precondition("not a double generalized star".into()));
    }
    let stars = pendent_generalized_stars(t)?;
    debug_assert_eq!(stars.len(), 2);
    reject_short_legs(stars.iter().flat_map(|r| &r.legs))?;
    Ok(VertexSet::from_members(
        t.n(),
        stars.iter().flat_map(adjusted_pgs_whites),
    ))
}

/// A minimal fort containing two given leaves of a tree without double
/// pendants.
///
/// Paths and generalized stars are handled directly. Otherwise the pendent
/// generalized star `R` with the smallest center `v` is cut down to its
/// shortest leg, the smaller tree is solved recursively, and the result is
/// lifted: unchanged if `v` is blue, with the alternating pattern added on
/// every leg of `R` if `v` is white, or with the retained leg's coloring moved
/// to the target leg when one requested leaf was cut away.
pub fn leaf_to_leaf_fort(t: &Graph, a: usize, b: usize) -> Result<VertexSet> {
    require_tree(t)?;
    if has_double_pendant(t) {
        return Err(Error::Precondition("tree has a double pendant".into()));
    }
    for x in [a, b] {
        if x >= t.n() || t.degree(x) != 1 {
            return Err(Error::Precondition(format!("vertex {x} is not a leaf")));
        }
    }
    if a == b {
        return Err(Error::Precondition("leaves must be distinct".into()));
    }
    Ok(leaf_to_leaf(t, a, b))
}

fn leaf_to_leaf(t: &Graph, a: usize, b: usize) -> VertexSet {
    let n = t.n();
    let high = high_degree(t);
    if high.is_empty() {
        return standard_path_fort(t, PathEnd::Low).expect("no high-degree vertex");
    }
    if let [c] = high[..] {
        let legs = pendent_legs(t, c);
        let find = |x: usize| {
            legs.iter()
                .find(|l| l.leaf() == x)
                .expect("every leaf ends a leg")
        };
        return two_leg_whites(n, find(a), find(b));
    }
    let stars = pendent_generalized_stars(t).expect("tree");
    let r = stars
        .first()
        .expect("two high-degree vertices give a pendent star");
    let v = r.center;
    match (r.leg_with_leaf(a), r.leg_with_leaf(b)) {
        (Some(la), Some(lb)) => two_leg_whites(n, la, lb),
        (in_a, in_b) => {
            let kept = r.shortest_leg();
            let cut: Vec<&Leg> = r.legs.iter().filter(|l| *l != kept).collect();
            let mut keep = t.vertices();
            for leg in &cut {
                for &x in &leg.vertices {
                    keep.remove(x);
                }
            }
            let (sub, old_of) = t.induced_subgraph(&keep);
            let mut new_of = vec![usize::MAX; n];
            for (i, &o) in old_of.iter().enumerate() {
                new_of[o] = i;
            }
            // (target leg in R, leaf outside R), if one leaf lies in R
            let target = match (in_a, in_b) {
                (Some(l), None) => Some((l, b)),
                (None, Some(l)) => Some((l, a)),
                _ => None,
            };
            let (sa, sb) = match target {
                Some((_, outside)) => (kept.leaf(), outside),
                None => (a, b),
            };
            let sub_fort = leaf_to_leaf(&sub, new_of[sa], new_of[sb]);
            let mut w = VertexSet::from_members(n, sub_fort.iter().map(|i| old_of[i]));
            if w.contains(v) {
                for leg in &r.legs {
                    for x in alternating_whites(leg) {
                        w.insert(x);
                    }
                }
            } else if let Some((leg, _)) = target {
                if leg != kept {
                    for &x in &kept.vertices {
                        w.remove(x);
                    }
                    for x in standard_whites(&leg.vertices) {
                        w.insert(x);
                    }
                }
            }
            w
        }
    }
}

/// A leaf-to-leaf path through `x` whose ends lie in the fort `w` and whose
/// vertices outside `w` have both path neighbors in `w`.
///
/// Walks outward from `x` in up to two directions; from a fort vertex it
/// steps to any further neighbor, and from a vertex outside the fort it
/// steps on to a second fort neighbor, which must exist.
pub fn fort_spanning_path(t: &Graph, w: &VertexSet, x: usize) -> Result<Vec<usize>> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(Error::Precondition(
            "tree needs at least two vertices".into(),
        ));
    }
    if !is_fort(t, w) {
        return Err(Error::Precondition("set is not a fort".into()));
    }
    if !w.contains(x) {
        return Err(Error::Precondition(format!(
            "vertex {x} is not in the fort"
        )));
    }
    let walk = |first: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let (mut prev, mut cur) = (x, first);
        loop {
            out.push(cur);
            if !w.contains(cur) {
                let next = *t
                    .neighbors(cur)
                    .iter()
                    .find(|&&y| y != prev && w.contains(y))
                    .expect("fort: a second neighbor inside");
                out.push(next);
                prev = cur;
                cur = next;
            }
            match t.neighbors(cur).iter().find(|&&y| y != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => return out,
            }
        }
    };
    let nbrs = t.neighbors(x);
    let mut path: Vec<usize> = match nbrs.get(1) {
        Some(&second) => walk(second).into_iter().rev().collect(),
        None => Vec::new(),
    };
    path.push(x);
    path.extend(walk(nbrs[0]));
    if path.first() > path.last() {
        path.reverse();
    }
    Ok(path)
}

/// Checks the defining properties of [`fort_spanning_path`]'s output.
pub fn is_fort_spanning_path(t: &Graph, w: &VertexSet, x: usize, path: &[usize]) -> bool {
    let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
        return false;
    };
    let mut seen = VertexSet::empty(t.n());
    let simple = path.iter().all(|&v| v < t.n() && seen.insert(v))
        && path.windows(2).all(|p| t.has_edge(p[0], p[1]));
    simple
        && path.len() >= 2
        && path.contains(&x)
        && [first, last]
            .iter()
            .all(|&e| t.degree(e) == 1 && w.contains(e))
        && path
            .windows(3)
            .all(|p| w.contains(p[1]) || (w.contains(p[0]) && w.contains(p[2])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{layered_star_tree, leafy_triangle_graph, FamilySpec};
    use crate::forts::is_minimal_fort;

    fn fam(f: FamilySpec) -> Graph {
        f.generate().unwrap()
    }

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    #[test]
    fn star_centers_of_p3_and_p6() {
        let d = star_centers(&fam(FamilySpec::Path(3)));
        assert_eq!(d.layers.len(), 1);
        assert_eq!(d.layers[0].centers.to_vec(), vec![1]);
        assert!(d.residual.is_empty());
        let p6 = fam(FamilySpec::Path(6));
        let d = star_centers(&p6);
        assert!(d.layers.is_empty());
        assert_eq!(d.residual, p6.vertices());
    }

    #[test]
    fn star_centers_of_layered_tree() {
        let t = layered_star_tree();
        let d = star_centers(&t);
        assert_eq!(d.layers.len(), 2);
        // v3, v9, v15 then v5, v13 (vertex i is v{i+1})
        assert_eq!(d.layers[0].centers.to_vec(), vec![2, 8, 14]);
        assert_eq!(d.layers[1].centers.to_vec(), vec![4, 12]);
        assert_eq!(d.residual.to_vec(), vec![5, 6]);
        assert!(d.residual_is_matching(&t));
    }

    #[test]
    fn leaves_created_within_a_round_are_removed() {
        // two double-pendant centers joined through vertex 2
        let t =
            Graph::from_edge_list(7, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6)]).unwrap();
        let d = star_centers(&t);
        assert_eq!(d.layers.len(), 1);
        assert_eq!(d.layers[0].centers.to_vec(), vec![0, 1]);
        assert!(d.residual.is_empty());
        assert!(d.residual_is_matching(&t));
    }

    #[test]
    fn leafy_examples() {
        assert!(is_leafy(&leafy_triangle_graph()));
        assert!(is_leafy(&fam(FamilySpec::Path(2))));
        assert!(!is_leafy(&fam(FamilySpec::Path(4))));
        assert!(is_leafy(&Graph::empty(1)));
    }

    #[test]
    fn shapes() {
        assert_eq!(
            tree_shape(&fam(FamilySpec::Star222)).unwrap(),
            TreeShape::Star222 { center: 0 }
        );
        assert!(TreeShape::Star222 { center: 0 }.is_generalized_star());
        assert_eq!(
            tree_shape(&fam(FamilySpec::Path(8))).unwrap(),
            TreeShape::Path { n: 8 }
        );
        assert!(pendent_generalized_stars(&fam(FamilySpec::Path(8)))
            .unwrap()
            .is_empty());
        assert_eq!(
            tree_shape(&fam(FamilySpec::GeneralizedStar(vec![1, 2, 3]))).unwrap(),
            TreeShape::GeneralizedStar {
                center: 0,
                legs: vec![1, 2, 3]
            }
        );
        assert_eq!(
            tree_shape(&fam(FamilySpec::DoubleGeneralizedStar(
                vec![2, 2],
                vec![3, 1]
            )))
            .unwrap(),
            TreeShape::DoubleGeneralizedStar {
                centers: [0, 1],
                legs: [vec![2, 2], vec![3, 1]]
            }
        );
        let t = layered_star_tree();
        assert_eq!(tree_shape(&t).unwrap(), TreeShape::Other);
        let centers: Vec<usize> = pendent_generalized_stars(&t)
            .unwrap()
            .iter()
            .map(|r| r.center)
            .collect();
        assert_eq!(centers, vec![2, 14]);
        assert_eq!(tree_shape(&fam(FamilySpec::Cycle(4))), Err(Error::NotATree));
    }

    #[test]
    fn standard_path_colorings() {
        let p5 = fam(FamilySpec::Path(5));
        assert_eq!(
            standard_path_fort(&p5, PathEnd::Low).unwrap(),
            set(5, &[0, 2, 4])
        );
        let p2 = fam(FamilySpec::Path(2));
        assert_eq!(
            standard_path_fort(&p2, PathEnd::Low).unwrap(),
            set(2, &[0, 1])
        );
        let p6 = fam(FamilySpec::Path(6));
        let w = standard_path_fort(&p6, PathEnd::Low).unwrap();
        assert_eq!(w, set(6, &[0, 2, 4, 5]));
        assert!(is_minimal_fort(&p6, &w));
        assert_eq!(
            standard_path_fort(&p6, PathEnd::High).unwrap(),
            set(6, &[0, 1, 3, 5])
        );
        assert_eq!(
            standard_path_fort(&fam(FamilySpec::Star(3)), PathEnd::Low),
            Err(Error::NotAPath)
        );
    }

    #[test]
    fn two_leg_colorings() {
        // legs: [1], [2,3], [4,5,6]
        let t = fam(FamilySpec::GeneralizedStar(vec![1, 2, 3]));
        let l1 = leg_at(&t, 0, 1).unwrap();
        let l2 = leg_at(&t, 0, 2).unwrap();
        let w = standard_two_leg_fort(&t, &l1, &l2).unwrap();
        assert_eq!(w, set(7, &[1, 2, 3]));
        assert!(is_minimal_fort(&t, &w));

        let s = fam(FamilySpec::Star222);
        let w = standard_two_leg_fort(&s, &leg_at(&s, 0, 1).unwrap(), &leg_at(&s, 0, 5).unwrap())
            .unwrap();
        assert_eq!(w.len(), 4);

        let k13 = fam(FamilySpec::Star(3));
        let w = standard_two_leg_fort(
            &k13,
            &leg_at(&k13, 0, 1).unwrap(),
            &leg_at(&k13, 0, 3).unwrap(),
        )
        .unwrap();
        assert_eq!(w, set(4, &[1, 3]));

        assert_eq!(leg_to_leaf(&t, 6).unwrap(), leg_at(&t, 0, 4).unwrap());
        assert_eq!(leg_to_leaf(&t, 1).unwrap(), l1);
        assert!(leg_to_leaf(&t, 5).is_err());
        assert!(leg_to_leaf(&fam(FamilySpec::Path(4)), 0).is_err());
        assert!(standard_two_leg_fort(&t, &l1, &l1).is_err());
        let d = fam(FamilySpec::DoubleGeneralizedStar(vec![1, 1], vec![1, 1]));
        let a = leg_at(&d, 0, 2).unwrap();
        let b = leg_at(&d, 1, 4).unwrap();
        assert!(standard_two_leg_fort(&d, &a, &b).is_err());
        let bogus = Leg {
            center: 0,
            vertices: vec![2],
        };
        assert!(standard_two_leg_fort(&t, &l1, &bogus).is_err());
    }

    #[test]
    fn adjusted_colorings() {
        let s = fam(FamilySpec::Star222);
        assert_eq!(adjusted_fort(&s).unwrap(), set(7, &[0, 2, 4, 6]));
        // legs [1,2], [3,4], [5,6,7]
        let t = fam(FamilySpec::GeneralizedStar(vec![2, 2, 3]));
        let w = adjusted_fort(&t).unwrap();
        assert_eq!(w, set(8, &[0, 2, 4, 6, 7]));
        assert!(is_minimal_fort(&t, &w));
        assert!(adjusted_fort(&fam(FamilySpec::GeneralizedStar(vec![1, 2, 2]))).is_err());
        assert!(adjusted_fort(&fam(FamilySpec::Path(5))).is_err());
    }

    #[test]
    fn adjusted_pgs_colorings() {
        // centers 0,1; legs of 0: [2,3],[4,5]; legs of 1: [6,7],[8,9]
        let d = fam(FamilySpec::DoubleGeneralizedStar(vec![2, 2], vec![2, 2]));
        let w = adjusted_pgs_fort(&d).unwrap();
        assert_eq!(w, set(10, &[0, 1, 3, 5, 7, 9]));
        assert!(is_minimal_fort(&d, &w));
        // legs of 0: [2,3],[4,5,6]; legs of 1: [7,8],[9,10]
        let d = fam(FamilySpec::DoubleGeneralizedStar(vec![2, 3], vec![2, 2]));
        let w = adjusted_pgs_fort(&d).unwrap();
        assert!(w.contains(5) && w.contains(6) && !w.contains(4));
        assert!(is_minimal_fort(&d, &w));
        assert!(adjusted_pgs_fort(&fam(FamilySpec::DoubleGeneralizedStar(
            vec![1, 2],
            vec![2, 2]
        )))
        .is_err());
        assert!(adjusted_pgs_fort(&fam(FamilySpec::Star222)).is_err());
    }

    #[test]
    fn leaf_to_leaf_examples() {
        let p5 = fam(FamilySpec::Path(5));
        assert_eq!(leaf_to_leaf_fort(&p5, 0, 4).unwrap(), set(5, &[0, 2, 4]));
        let t = fam(FamilySpec::GeneralizedStar(vec![2, 2, 3]));
        let l1 = leg_at(&t, 0, 1).unwrap();
        let l2 = leg_at(&t, 0, 3).unwrap();
        assert_eq!(
            leaf_to_leaf_fort(&t, 2, 4).unwrap(),
            standard_two_leg_fort(&t, &l1, &l2).unwrap()
        );
        assert!(leaf_to_leaf_fort(&fam(FamilySpec::Star(3)), 1, 2).is_err());
        assert!(leaf_to_leaf_fort(&p5, 0, 2).is_err());
        assert!(leaf_to_leaf_fort(&p5, 0, 0).is_err());
    }

    #[test]
    fn spanning_paths() {
        let p5 = fam(FamilySpec::Path(5));
        let w = set(5, &[0, 2, 4]);
        assert_eq!(fort_spanning_path(&p5, &w, 2).unwrap(), vec![0, 1, 2, 3, 4]);
        let k13 = fam(FamilySpec::Star(3));
        let w = set(4, &[1, 2]);
        assert_eq!(fort_spanning_path(&k13, &w, 1).unwrap(), vec![1, 0, 2]);
        assert!(fort_spanning_path(&k13, &set(4, &[1]), 1).is_err());
        assert!(fort_spanning_path(&k13, &w, 3).is_err());
    }
}
