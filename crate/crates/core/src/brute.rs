//! Definition-level brute force, kept separate from the search kernels so
//! the verifier can compare the two.
//!
//! Everything here enumerates all `2^n` subsets and applies the textbook
//! definitions literally: repeated full sweeps of the color-change rule,
//! inclusion-minimality by explicit subset comparison, and so on. Nothing
//! here uses the closure-based minimality criterion or the fort/failed-set
//! complement relation.

use crate::error::Result;
use crate::forcing::SearchLimit;
use crate::graph::Graph;

/// Brute force is only meaningful on small graphs; it refuses above this.
pub const MAX_BRUTE_ORDER: usize = 16;

fn check(g: &Graph) -> Result<()> {
    SearchLimit::new(MAX_BRUTE_ORDER).check(g.n())
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn members(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&v| mask >> v & 1 == 1)
}

/// Applies the color-change rule in full sweeps until nothing changes.
pub fn closure_by_sweeps(g: &Graph, start: u64) -> u64 {
    sweep(&adjacency(g), g.n(), start)
}

fn sweep(a: &[Vec<bool>], n: usize, start: u64) -> u64 {
    let mut blue: Vec<bool> = (0..n).map(|v| start >> v & 1 == 1).collect();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !blue[v] {
                continue;
            }
            let whites: Vec<usize> = (0..n).filter(|&u| a[v][u] && !blue[u]).collect();
            if whites.len() == 1 {
                blue[whites[0]] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n).filter(|&v| blue[v]).fold(0, |m, v| m | 1 << v)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn is_fort(a: &[Vec<bool>], n: usize, w: u64) -> bool {
    w != 0
        && (0..n)
            .filter(|&v| w >> v & 1 == 0)
            .all(|v| members(w, n).filter(|&u| a[v][u]).count() != 1)
}

/// Keeps the inclusion-minimal members of `sets` (given in any order).
fn inclusion_minimal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| s.count_ones());
    let mut kept: Vec<u64> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| k & s == k && k != s) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn inclusion_maximal(sets: Vec<u64>) -> Vec<u64> {
    let mut out: Vec<u64> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & s == s))
        .collect();
    out.sort_unstable();
    out
}

/// Every fort, by the neighbor-count definition.
pub fn all_forts(g: &Graph) -> Result<Vec<u64>> {
    check(g)?;
    let n = g.n();
    let a = adjacency(g);
    Ok((1..=full(n)).filter(|&w| is_fort(&a, n, w)).collect())
}

/// Forts containing no other fort, sorted by mask value.
pub fn minimal_forts(g: &Graph) -> Result<Vec<u64>> {
    Ok(inclusion_minimal(all_forts(g)?))
}

fn zero_forcing_sets(g: &Graph) -> Result<Vec<u64>> {
    check(g)?;
    let (n, a) = (g.n(), adjacency(g));
    let f = full(n);
    Ok((0..=f).filter(|&s| sweep(&a, n, s) == f).collect())
}

/// Zero forcing sets containing no other zero forcing set.
pub fn minimal_zero_forcing_sets(g: &Graph) -> Result<Vec<u64>> {
    Ok(inclusion_minimal(zero_forcing_sets(g)?))
}

/// Failed sets to which adding any outside vertex gives a zero forcing set.
pub fn maximal_failed_sets(g: &Graph) -> Result<Vec<u64>> {
    check(g)?;
    let (n, a) = (g.n(), adjacency(g));
    let f = full(n);
    let failed: Vec<u64> = (0..=f).filter(|&s| sweep(&a, n, s) != f).collect();
    let mut out: Vec<u64> = failed
        .iter()
        .copied()
        .filter(|&s| members(f & !s, n).all(|v| sweep(&a, n, s | 1 << v) == f))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Proper subsets from which no force fires.
pub fn stalled_sets(g: &Graph) -> Result<Vec<u64>> {
    check(g)?;
    let (n, a) = (g.n(), adjacency(g));
    let f = full(n);
    Ok((0..f).filter(|&s| sweep(&a, n, s) == s).collect())
}

/// Stalled sets not properly contained in another stalled set.
pub fn maximal_stalled_sets(g: &Graph) -> Result<Vec<u64>> {
    Ok(inclusion_maximal(stalled_sets(g)?))
}

/// `Z(G)` as the smallest zero forcing set over all subsets.
pub fn zero_forcing_number(g: &Graph) -> Result<usize> {
    Ok(zero_forcing_sets(g)?
        .iter()
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// `F(G)` as the largest failed set over all subsets.
pub fn failed_zero_forcing_number(g: &Graph) -> Result<Option<usize>> {
    check(g)?;
    let (n, a) = (g.n(), adjacency(g));
    let f = full(n);
    Ok((0..=f)
        .filter(|&s| sweep(&a, n, s) != f)
        .map(|s| s.count_ones() as usize)
        .max())
}
