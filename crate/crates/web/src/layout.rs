use std::collections::VecDeque;
use std::f64::consts::TAU;

use fortress::Graph;

/// Positions in the unit square. Trees are drawn in layers by distance
/// from a central vertex, everything else on a circle.
pub fn layout(g: &Graph) -> Vec<(f64, f64)> {
    let n = g.n();
    if n == 1 {
        return vec![(0.5, 0.5)];
    }
    if g.is_tree() {
        return tree_layout(g);
    }
    (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64 - TAU / 4.0;
            (0.5 + 0.45 * a.cos(), 0.5 + 0.45 * a.sin())
        })
        .collect()
}

fn distances(g: &Graph, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn tree_layout(t: &Graph) -> Vec<(f64, f64)> {
    let n = t.n();
    let root = (0..n)
        .min_by_key(|&v| distances(t, v).into_iter().max().unwrap_or(0))
        .unwrap_or(0);
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut depth = vec![0; n];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in t.neighbors(u) {
            if w != parent[u] {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                order.push(w);
            }
        }
        i += 1;
    }
    // Leaves get consecutive slots; a parent sits over its children.
    let mut slot = vec![0.0; n];
    let mut next = 0.0;
    for &u in order.iter().rev() {
        let kids: Vec<usize> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| parent[w] == u)
            .collect();
        if kids.is_empty() {
            slot[u] = next;
            next += 1.0;
        } else {
            slot[u] = kids.iter().map(|&k| slot[k]).sum::<f64>() / kids.len() as f64;
        }
    }
    let width = (next - 1.0f64).max(1.0);
    let height = depth.iter().copied().max().unwrap_or(0).max(1) as f64;
    (0..n)
        .map(|v| {
            (
                0.05 + 0.9 * slot[v] / width,
                0.08 + 0.84 * depth[v] as f64 / height,
            )
        })
        .collect()
}
