//! Well-failed and well-forced classification.
//!
//! Trees go through the structural characterizations, which run in linear
//! time. Whenever the order is within the search limit the exact answer is
//! computed as well, and for trees the two must agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::SearchLimit;
use crate::forts::minimal_forts;
use crate::graph::Graph;
use crate::structure::{is_leafy, star_centers, tree_shape, TreeShape};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bruteforce,
    TreeFastpath,
    BothAgree,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::TreeFastpath => "tree_fastpath",
            Method::BothAgree => "both_agree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub well_failed: bool,
    pub well_forced: bool,
    pub method: Method,
    /// A smallest and a largest minimal fort, when the graph is not
    /// well-failed and the exact search ran.
    pub fort_witnesses: Option<[VertexSet; 2]>,
    /// Likewise for minimal zero forcing sets.
    pub zfs_witnesses: Option<[VertexSet; 2]>,
}

/// Lexicographically first sets of the smallest and largest size, if the
/// sizes differ. `sets` must be in canonical order.
fn witnesses(sets: &[VertexSet]) -> Option<[VertexSet; 2]> {
    let first = sets.first()?;
    let max = sets.iter().map(VertexSet::len).max()?;
    if first.len() == max {
        return None;
    }
    let largest = sets.iter().find(|s| s.len() == max)?;
    Some([first.clone(), largest.clone()])
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Paths on 1, 2, 3, 4 or 6 vertices, `star_{2,2,2}`, and leafy trees.
pub fn is_well_failed_tree_fastpath(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    Ok(match tree_shape(t)? {
        TreeShape::Path { n } => matches!(n, 1 | 2 | 3 | 4 | 6),
        TreeShape::Star222 { .. } => true,
        _ => is_leafy(t),
    })
}

/// Star removals leave only disjoint edges. `K_1` is well-forced.
pub fn is_well_forced_tree_fastpath(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    Ok(t.n() == 1 || star_centers(t).residual_is_matching(t))
}

pub fn classify(g: &Graph, limit: SearchLimit) -> Result<Classification> {
    if g.n() == 0 {
        return Err(Error::Precondition(
            "the null graph cannot be classified".into(),
        ));
    }
    let tree = g.is_tree();
    if tree && limit.check(g.n()).is_err() {
        return Ok(Classification {
            well_failed: is_well_failed_tree_fastpath(g)?,
            well_forced: is_well_forced_tree_fastpath(g)?,
            method: Method::TreeFastpath,
            fort_witnesses: None,
            zfs_witnesses: None,
        });
    }
    let report = minimal_forts(g, limit)?;
    let fort_witnesses = witnesses(&report.minimal_forts);
    let zfs_witnesses = witnesses(&report.minimal_zero_forcing_sets);
    let well_failed = fort_witnesses.is_none();
    let well_forced = zfs_witnesses.is_none();
    let method = if tree {
        let fast = (
            is_well_failed_tree_fastpath(g)?,
            is_well_forced_tree_fastpath(g)?,
        );
        if fast != (well_failed, well_forced) {
            return Err(Error::Disagreement(format!(
                "tree rules give (well_failed, well_forced) = {fast:?}, exact search gives {:?}",
                (well_failed, well_forced)
            )));
        }
        Method::BothAgree
    } else {
        Method::Bruteforce
    };
    Ok(Classification {
        well_failed,
        well_forced,
        method,
        fort_witnesses,
        zfs_witnesses,
    })
}

pub fn is_well_failed(g: &Graph, limit: SearchLimit) -> Result<bool> {
    Ok(classify(g, limit)?.well_failed)
}

pub fn is_well_forced(g: &Graph, limit: SearchLimit) -> Result<bool> {
    Ok(classify(g, limit)?.well_forced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{layered_star_tree, FamilySpec};

    fn fam(f: FamilySpec) -> Graph {
        f.generate().unwrap()
    }

    fn lim() -> SearchLimit {
        SearchLimit::default()
    }

    #[test]
    fn path5_has_witnesses() {
        let c = classify(&fam(FamilySpec::Path(5)), lim()).unwrap();
        assert!(!c.well_failed);
        assert_eq!(c.method, Method::BothAgree);
        let [small, large] = c.fort_witnesses.unwrap();
        assert_eq!(small.to_vec(), vec![0, 2, 4]);
        assert_eq!(large.to_vec(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn named_graphs() {
        let c7 = classify(&fam(FamilySpec::Cycle(7)), lim()).unwrap();
        assert!(c7.well_failed);
        assert_eq!(c7.method, Method::Bruteforce);
        assert!(is_well_failed(&fam(FamilySpec::Petersen), lim()).unwrap());
        assert!(!is_well_failed(&fam(FamilySpec::Cycle(6)), lim()).unwrap());
        assert!(is_well_failed(&fam(FamilySpec::Path(6)), lim()).unwrap());
    }

    #[test]
    fn well_forced_examples() {
        let p4 = fam(FamilySpec::Path(4));
        let c = classify(&p4, lim()).unwrap();
        assert!(!c.well_forced);
        let [small, large] = c.zfs_witnesses.unwrap();
        assert_eq!((small.len(), large.len()), (1, 2));
        assert!(is_well_forced(&Graph::empty(1), lim()).unwrap());
        assert!(is_well_forced(&fam(FamilySpec::Path(2)), lim()).unwrap());
    }

    #[test]
    fn layered_tree() {
        let t = layered_star_tree();
        assert!(!is_well_failed_tree_fastpath(&t).unwrap());
        assert!(is_well_forced_tree_fastpath(&t).unwrap());
        let c = classify(&t, lim()).unwrap();
        assert_eq!(c.method, Method::BothAgree);
        assert!(c.well_forced && !c.well_failed);
    }

    #[test]
    fn fast_path_beyond_the_limit() {
        // two adjacent centers with two pendants each
        let leafy = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert!(is_well_failed_tree_fastpath(&leafy).unwrap());
        let c = classify(&leafy, SearchLimit::new(4)).unwrap();
        assert_eq!(c.method, Method::TreeFastpath);
        assert!(c.well_failed && c.well_forced);
        let big = fam(FamilySpec::Path(70));
        assert!(!classify(&big, lim()).unwrap().well_failed);
        assert!(matches!(
            classify(&fam(FamilySpec::Cycle(30)), lim()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn forests_rejected_by_fast_path() {
        let forest = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_well_failed_tree_fastpath(&forest), Err(Error::NotATree));
        assert_eq!(classify(&forest, lim()).unwrap().method, Method::Bruteforce);
    }
}
