//! Simple undirected graphs on the vertices `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric; labels are exactly `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_members(self.n(), self.adj[v].iter().copied())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    /// Degree-one vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Degree-one neighbors of `v`.
    pub fn pendant_neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&u| self.degree(u) == 1)
            .collect()
    }

    /// Neighbor bitmasks; `None` for graphs with more than 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &u| m | 1 << u))
                .collect(),
        )
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected with `n - 1` edges. The null graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    /// A tree with maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|l| l.len() <= 2)
    }

    /// Vertices of a path in order, starting at its smallest endpoint.
    pub fn path_order(&self) -> Result<Vec<usize>> {
        if !self.is_path() {
            return Err(Error::NotAPath);
        }
        if self.n() == 1 {
            return Ok(vec![0]);
        }
        let start = (0..self.n())
            .find(|&v| self.degree(v) == 1)
            .expect("path end");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = self.adj[cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Ok(order)
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing
    /// order. The returned vector maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|(u, v)| (new_of[u], new_of[v]))
            .collect();
        let g = Graph::from_edge_list(old.len(), &edges).expect("induced edges are valid");
        (g, old)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Precondition(
                "relabelling is not a permutation".into(),
            ));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz rendering; `highlight` vertices are filled.
    pub fn to_dot(&self, highlight: Option<&VertexSet>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let filled = highlight.is_some_and(|h| h.contains(v));
            if filled {
                let _ = writeln!(out, "  {v} [style=filled, fillcolor=lightblue];");
            } else {
                let _ = writeln!(out, "  {v};");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("not a non-negative integer: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!("expected two integers: {line:?}"))),
    }
}
