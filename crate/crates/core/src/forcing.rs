//! The zero forcing color-change rule, forts, and the parameters Z and F.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default upper bound on `n` for exponential searches.
pub const DEFAULT_MAX_EXACT: usize = 20;

/// Refusal threshold for exponential searches. Searches never approximate;
/// they return [`Error::GuardExceeded`] instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimit {
    pub max_exact: usize,
}

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit {
            max_exact: DEFAULT_MAX_EXACT,
        }
    }
}

impl SearchLimit {
    pub fn new(max_exact: usize) -> Self {
        SearchLimit { max_exact }
    }

    /// Bitmask kernels cap the order at 64 regardless of the setting.
    pub fn check(&self, n: usize) -> Result<()> {
        let limit = self.max_exact.min(64);
        if n > limit {
            Err(Error::GuardExceeded { n, limit })
        } else {
            Ok(())
        }
    }
}

/// Result of running the color-change rule to a fixpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    pub final_blue: VertexSet,
    /// `(forcer, forced)` in the order the forces fired.
    pub forces: Vec<(usize, usize)>,
}

/// Closure of `s` under the color-change rule.
///
/// Keeps a white-neighbor count per vertex and a work list of blue vertices
/// whose count is one; total work is linear in `n + m`.
pub fn closure(g: &Graph, s: &VertexSet) -> ClosureTrace {
    run_closure(g, s, |ready| ready.len() - 1)
}

/// Same closure, choosing among ready forcers uniformly at random.
pub fn closure_with_rng<R: Rng + ?Sized>(g: &Graph, s: &VertexSet, rng: &mut R) -> ClosureTrace {
    run_closure(g, s, |ready| rng.random_range(0..ready.len()))
}

fn run_closure(g: &Graph, s: &VertexSet, mut pick: impl FnMut(&[usize]) -> usize) -> ClosureTrace {
    let n = g.n();
    assert_eq!(s.universe(), n, "initial set belongs to another graph");
    let mut blue = vec![false; n];
    for v in s {
        blue[v] = true;
    }
    let mut white_count: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !blue[w]).count())
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| blue[v] && white_count[v] == 1).collect();
    let mut final_blue = s.clone();
    let mut forces = Vec::new();
    while !ready.is_empty() {
        let u = ready.swap_remove(pick(&ready));
        if white_count[u] != 1 {
            continue;
        }
        let w = *g
            .neighbors(u)
            .iter()
            .find(|&&w| !blue[w])
            .expect("count says one white neighbor");
        blue[w] = true;
        final_blue.insert(w);
        forces.push((u, w));
        for &y in g.neighbors(w) {
            white_count[y] -= 1;
            if blue[y] && white_count[y] == 1 {
                ready.push(y);
            }
        }
        if white_count[w] == 1 {
            ready.push(w);
        }
    }
    ClosureTrace { final_blue, forces }
}

pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    closure(g, s).final_blue.len() == g.n()
}

pub fn is_failed(g: &Graph, s: &VertexSet) -> bool {
    !is_zero_forcing_set(g, s)
}

/// A proper subset from which no force fires.
pub fn is_stalled(g: &Graph, s: &VertexSet) -> bool {
    s.len() < g.n() && closure(g, s).forces.is_empty()
}

/// Nonempty `w` such that no vertex outside `w` has exactly one neighbor in it.
pub fn is_fort(g: &Graph, w: &VertexSet) -> bool {
    !w.is_empty()
        && (0..g.n())
            .filter(|&v| !w.contains(v))
            .all(|v| g.neighbors(v).iter().filter(|&&u| w.contains(u)).count() != 1)
}

/// Bitmask view of a graph with at most 64 vertices, used by the
/// exponential searches.
#[derive(Clone, Debug)]
pub struct BitGraph {
    n: usize,
    nbr: Vec<u64>,
    full: u64,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Option<Self> {
        let nbr = g.neighbor_masks()?;
        let n = g.n();
        let full = low_mask(n);
        Some(BitGraph { n, nbr, full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.nbr[v]
    }

    pub fn closure(&self, start: u64) -> u64 {
        let mut blue = start;
        // vertices that may still force
        let mut active = blue;
        while active != 0 {
            let mut next_active = 0;
            let mut bits = active;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let white = self.nbr[v] & !blue;
                if white != 0 && white & (white - 1) == 0 {
                    blue |= white;
                    let w = white.trailing_zeros() as usize;
                    // the new blue vertex and its blue neighbors may now force
                    next_active |= white | (self.nbr[w] & blue);
                }
            }
            active = next_active;
        }
        blue
    }

    pub fn is_zero_forcing(&self, s: u64) -> bool {
        self.closure(s) == self.full
    }

    pub fn is_fort(&self, w: u64) -> bool {
        if w == 0 {
            return false;
        }
        let mut outside = self.full & !w;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if (self.nbr[v] & w).count_ones() == 1 {
                return false;
            }
        }
        true
    }

    /// Fort `w` whose complement plus any single member forces everything.
    pub fn is_minimal_fort(&self, w: u64) -> bool {
        if !self.is_fort(w) {
            return false;
        }
        let rest = self.full & !w;
        let mut bits = w;
        while bits != 0 {
            let x = bits & bits.wrapping_neg();
            bits &= bits - 1;
            if self.closure(rest | x) != self.full {
                return false;
            }
        }
        true
    }
}

pub(crate) fn bit_graph(g: &Graph, limit: SearchLimit) -> Result<BitGraph> {
    limit.check(g.n())?;
    Ok(BitGraph::new(g).expect("limit keeps n <= 64"))
}

/// Calls `f` on every `k`-subset of `0..n` as a mask, in increasing numeric
/// order. Stops early when `f` returns `false`.
pub fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u128 << n;
    let mut s: u128 = (1u128 << k) - 1;
    while s < limit {
        if !f(s as u64) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        !0
    } else {
        (1u64 << bits) - 1
    }
}

/// A smallest zero forcing set.
///
/// Iterative deepening over set size; a branch never adds a vertex already
/// in the closure of the current prefix, since such a set cannot be minimal.
pub fn minimum_zero_forcing_set(g: &Graph, limit: SearchLimit) -> Result<VertexSet> {
    let bg = bit_graph(g, limit)?;
    let n = bg.n();
    for k in 0..=n {
        let mut found = None;
        zfs_search(&bg, k, 0, 0, 0, &mut found);
        if let Some(mask) = found {
            return Ok(VertexSet::from_mask(n, mask));
        }
    }
    unreachable!("the whole vertex set forces")
}

fn zfs_search(
    bg: &BitGraph,
    k: usize,
    start: usize,
    chosen: u64,
    size: usize,
    found: &mut Option<u64>,
) -> bool {
    let cl = bg.closure(chosen);
    if cl == bg.full() {
        *found = Some(chosen);
        return true;
    }
    if size == k {
        return false;
    }
    let candidates = bg.full() & !cl & !low_mask(start);
    if (candidates.count_ones() as usize) < k - size {
        return false;
    }
    let mut bits = candidates;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if zfs_search(bg, k, v + 1, chosen | 1 << v, size + 1, found) {
            return true;
        }
    }
    false
}

/// `Z(G)`: the order of a smallest zero forcing set.
pub fn zero_forcing_number(g: &Graph, limit: SearchLimit) -> Result<usize> {
    minimum_zero_forcing_set(g, limit).map(|s| s.len())
}

/// A smallest fort (always minimal); `None` only for the null graph.
pub fn minimum_fort(g: &Graph, limit: SearchLimit) -> Result<Option<VertexSet>> {
    let bg = bit_graph(g, limit)?;
    let n = bg.n();
    for k in 1..=n {
        let mut hit = None;
        for_each_k_subset(n, k, |w| {
            if bg.is_fort(w) {
                hit = Some(w);
                false
            } else {
                true
            }
        });
        if let Some(w) = hit {
            return Ok(Some(VertexSet::from_mask(n, w)));
        }
    }
    Ok(None)
}

/// `F(G)`: the largest order of a failed set, computed as `n` minus the
/// order of a smallest fort.
pub fn failed_zero_forcing_number(g: &Graph, limit: SearchLimit) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::Precondition(
            "the null graph has no failed set".into(),
        ));
    }
    let w = minimum_fort(g, limit)?.expect("V is a fort");
    Ok(g.n() - w.len())
}
