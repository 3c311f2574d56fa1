//! Exact enumeration of minimal forts, maximal failed sets, minimal zero
//! forcing sets, and the irrelevant-vertex sets derived from them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::{
    bit_graph, for_each_k_subset, is_fort, is_zero_forcing_set, BitGraph, SearchLimit,
};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A fort is minimal exactly when its complement is a maximal failed set,
/// so it suffices that adding any one member to the complement forces the
/// whole graph.
pub fn is_minimal_fort(g: &Graph, w: &VertexSet) -> bool {
    if !is_fort(g, w) {
        return false;
    }
    let rest = w.complement();
    w.iter().all(|x| {
        let mut s = rest.clone();
        s.insert(x);
        is_zero_forcing_set(g, &s)
    })
}

/// Everything known about the minimal forts of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FortReport {
    /// Sorted by size, then lexicographically.
    pub minimal_forts: Vec<VertexSet>,
    /// Minimal covers of the minimal forts, in canonical order.
    pub minimal_zero_forcing_sets: Vec<VertexSet>,
    pub min_size: usize,
    pub max_size: usize,
    /// In no minimal fort.
    pub fort_irrelevant: VertexSet,
    /// In no minimal zero forcing set.
    pub zf_irrelevant: VertexSet,
    /// In no maximal failed set, i.e. in every minimal fort.
    pub failed_zf_irrelevant: VertexSet,
    /// Intersection of all minimal forts.
    pub universal: VertexSet,
    pub z_number: usize,
    pub f_number: usize,
}

impl FortReport {
    /// Distinct minimal-fort sizes, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.minimal_forts.iter().map(VertexSet::len).collect();
        s.dedup();
        s
    }
}

/// Minimal forts in canonical order.
///
/// Scans subsets by ascending size and skips any candidate containing a
/// closed neighborhood `N[v]` with `deg(v) >= 2`, which can never be a
/// minimal fort.
pub fn minimal_fort_list(g: &Graph, limit: SearchLimit) -> Result<Vec<VertexSet>> {
    let bg = bit_graph(g, limit)?;
    Ok(to_sets(g.n(), minimal_fort_masks(&bg, g)))
}

pub(crate) fn minimal_fort_masks(bg: &BitGraph, g: &Graph) -> Vec<u64> {
    let n = bg.n();
    let closed: Vec<u64> = (0..n)
        .filter(|&v| g.degree(v) >= 2)
        .map(|v| bg.neighbors(v) | 1 << v)
        .collect();
    let mut out = Vec::new();
    for k in 1..=n {
        let start = out.len();
        for_each_k_subset(n, k, |w| {
            if !closed.iter().any(|&c| w & c == c) && bg.is_minimal_fort(w) {
                out.push(w);
            }
            true
        });
        out[start..].sort_unstable_by_key(|&w| lex_key(w));
    }
    out
}

/// Lexicographic order on sorted member lists, for masks of equal size.
fn lex_key(mask: u64) -> std::cmp::Reverse<u64> {
    std::cmp::Reverse(mask.reverse_bits())
}

fn to_sets(n: usize, masks: impl IntoIterator<Item = u64>) -> Vec<VertexSet> {
    masks
        .into_iter()
        .map(|m| VertexSet::from_mask(n, m))
        .collect()
}

fn sorted_sets(n: usize, masks: impl IntoIterator<Item = u64>) -> Vec<VertexSet> {
    let mut v = to_sets(n, masks);
    v.sort();
    v
}

pub fn minimal_forts(g: &Graph, limit: SearchLimit) -> Result<FortReport> {
    let bg = bit_graph(g, limit)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("the null graph has no forts".into()));
    }
    let forts = minimal_fort_masks(&bg, g);
    let zfs = minimal_hitting_sets(&forts);
    let union = forts.iter().fold(0, |a, &w| a | w);
    let inter = forts.iter().fold(bg.full(), |a, &w| a & w);
    let zf_union = zfs.iter().fold(0, |a, &s| a | s);
    let min_size = forts.first().map_or(0, |w| w.count_ones() as usize);
    let max_size = forts
        .iter()
        .map(|w| w.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let z_number = zfs
        .iter()
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(FortReport {
        minimal_forts: to_sets(n, forts),
        minimal_zero_forcing_sets: sorted_sets(n, zfs),
        min_size,
        max_size,
        fort_irrelevant: VertexSet::from_mask(n, bg.full() & !union),
        zf_irrelevant: VertexSet::from_mask(n, bg.full() & !zf_union),
        failed_zf_irrelevant: VertexSet::from_mask(n, inter),
        universal: VertexSet::from_mask(n, inter),
        z_number,
        f_number: n - min_size,
    })
}

/// Complements of the minimal forts, in canonical order.
pub fn maximal_failed_sets(g: &Graph, limit: SearchLimit) -> Result<Vec<VertexSet>> {
    let bg = bit_graph(g, limit)?;
    let forts = minimal_fort_masks(&bg, g);
    Ok(sorted_sets(
        g.n(),
        forts.into_iter().map(|w| bg.full() & !w),
    ))
}

/// Which of the two minimal-zero-forcing-set algorithms to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZfsMethod {
    /// Zero forcing sets none of whose one-smaller subsets force.
    Direct,
    /// Minimal hitting sets of the minimal forts.
    Cover,
}

pub fn minimal_zero_forcing_sets(
    g: &Graph,
    method: ZfsMethod,
    limit: SearchLimit,
) -> Result<Vec<VertexSet>> {
    let bg = bit_graph(g, limit)?;
    let masks = match method {
        ZfsMethod::Direct => minimal_zfs_direct(&bg),
        ZfsMethod::Cover => minimal_hitting_sets(&minimal_fort_masks(&bg, g)),
    };
    Ok(sorted_sets(g.n(), masks))
}

fn minimal_zfs_direct(bg: &BitGraph) -> Vec<u64> {
    let n = bg.n();
    let mut out = Vec::new();
    for k in 0..=n {
        for_each_k_subset(n, k, |s| {
            if bg.is_zero_forcing(s) {
                let mut bits = s;
                let mut minimal = true;
                while bits != 0 {
                    let x = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    if bg.is_zero_forcing(s & !x) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    out.push(s);
                }
            }
            true
        });
    }
    out
}

/// All inclusion-minimal sets meeting every member of `family`.
///
/// Branches on the members of the first unmet set; branch `i` forbids the
/// members tried by branches `0..i`, so each minimal hitting set is reached
/// once. A partial set is abandoned as soon as one of its elements has no
/// private set (a met set meeting only that element), since adding more
/// elements cannot restore one.
pub fn minimal_hitting_sets(family: &[u64]) -> Vec<u64> {
    let mut out = BTreeSet::new();
    if family.contains(&0) {
        return Vec::new();
    }
    hit(family, 0, 0, &mut out);
    out.into_iter().collect()
}

fn hit(family: &[u64], chosen: u64, forbidden: u64, out: &mut BTreeSet<u64>) {
    let Some(&unmet) = family.iter().find(|&&f| f & chosen == 0) else {
        out.insert(chosen);
        return;
    };
    let mut forbidden = forbidden;
    let mut options = unmet & !forbidden;
    while options != 0 {
        let x = options & options.wrapping_neg();
        options &= options - 1;
        let next = chosen | x;
        if every_element_has_private_set(family, next) {
            hit(family, next, forbidden, out);
        }
        forbidden |= x;
    }
}

fn every_element_has_private_set(family: &[u64], chosen: u64) -> bool {
    let mut with_private = 0u64;
    for &f in family {
        let m = f & chosen;
        if m != 0 && m & (m - 1) == 0 {
            with_private |= m;
        }
    }
    with_private == chosen
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrrelevanceKind {
    /// In no minimal fort.
    Fort,
    /// In no minimal zero forcing set.
    ZeroForcing,
    /// In no maximal failed set.
    FailedZeroForcing,
}

impl IrrelevanceKind {
    pub const ALL: [IrrelevanceKind; 3] = [
        IrrelevanceKind::Fort,
        IrrelevanceKind::ZeroForcing,
        IrrelevanceKind::FailedZeroForcing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IrrelevanceKind::Fort => "fort",
            IrrelevanceKind::ZeroForcing => "zero_forcing",
            IrrelevanceKind::FailedZeroForcing => "failed_zero_forcing",
        }
    }
}

impl fmt::Display for IrrelevanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IrrelevanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "fort" => Ok(IrrelevanceKind::Fort),
            "zero_forcing" | "zf" => Ok(IrrelevanceKind::ZeroForcing),
            "failed_zero_forcing" | "failed" => Ok(IrrelevanceKind::FailedZeroForcing),
            _ => Err(Error::Precondition(format!(
                "unknown irrelevance kind {s:?}"
            ))),
        }
    }
}

pub fn irrelevant_vertices(
    g: &Graph,
    kind: IrrelevanceKind,
    limit: SearchLimit,
) -> Result<VertexSet> {
    let bg = bit_graph(g, limit)?;
    let n = g.n();
    let full = bg.full();
    let mask = match kind {
        IrrelevanceKind::Fort => full & !minimal_fort_masks(&bg, g).iter().fold(0, |a, &w| a | w),
        IrrelevanceKind::ZeroForcing => {
            full & !minimal_zfs_direct(&bg).iter().fold(0, |a, &s| a | s)
        }
        IrrelevanceKind::FailedZeroForcing => {
            let union = minimal_fort_masks(&bg, g)
                .iter()
                .fold(0, |a, &w| a | (full & !w));
            full & !union
        }
    };
    Ok(VertexSet::from_mask(n, mask))
}

/// Vertices in every minimal fort.
pub fn universal_fort_vertices(g: &Graph, limit: SearchLimit) -> Result<VertexSet> {
    let bg = bit_graph(g, limit)?;
    let mask = minimal_fort_masks(&bg, g)
        .iter()
        .fold(bg.full(), |a, &w| a & w);
    Ok(VertexSet::from_mask(g.n(), mask))
}
