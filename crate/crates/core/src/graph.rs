//! Simple undirected graphs over `0..n` and induced-subgraph machinery.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Parallel edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
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

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.vertex_count() => Err(Error::Input(format!(
                "vertex {v} outside graph of {} vertices",
                self.vertex_count()
            ))),
            _ => Ok(()),
        }
    }

    /// Subgraph induced by `kept`, relabelled to `0..|kept|` in ascending order.
    pub fn induced_subgraph(&self, kept: &VertexSet) -> Result<SubgraphView> {
        self.check_members(kept)?;
        let to_parent = kept.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let adj = to_parent
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(SubgraphView {
            graph: Graph { adj, edge_count },
            kept: kept.clone(),
            to_parent,
        })
    }

    /// Connected components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member. No subgraph is materialized.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            seen.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if within.contains(w) && seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Component of `start` in the subgraph induced by `within`.
    pub fn component_of(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if within.contains(w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        comp
    }

    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.component_of(v, within).len() == within.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// `{ v not in s : v adjacent to some member of s }`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for u in s.iter() {
            for &w in &self.adj[u] {
                out.insert(w);
            }
        }
        out.difference_with(s);
        out
    }

    /// Open neighborhood of `s` restricted to `within`.
    pub fn neighborhood_within(&self, s: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for u in s.iter() {
            for &w in &self.adj[u] {
                if within.contains(w) && !s.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Neighbors of `v` that lie in `within`, as a set.
    pub fn neighbors_within(&self, v: usize, within: &VertexSet) -> VertexSet {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| within.contains(w))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Whether `s` induces a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter()
            .all(|v| self.adj[v].iter().filter(|&&w| s.contains(w)).count() + 1 == k)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("complement edges are in range")
    }

    /// Disjoint union: `other` is relabelled to follow this graph's vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.vertex_count(), &edges).expect("edges in range")
    }

    /// Adjacency rows as `u32` bitmasks, for routines on graphs with at most
    /// 32 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u32> {
        debug_assert!(self.vertex_count() <= 32);
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect()
    }
}

/// An induced subgraph together with the relabelling back to its parent.
#[derive(Clone, Debug)]
pub struct SubgraphView {
    pub graph: Graph,
    pub kept: VertexSet,
    to_parent: Vec<usize>,
}

impl SubgraphView {
    /// Parent vertex of local vertex `i`.
    pub fn to_parent(&self, i: usize) -> usize {
        self.to_parent[i]
    }

    /// Local label of parent vertex `v`, if kept.
    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.to_parent.binary_search(&v).ok()
    }

    /// Maps a set of local vertices back to parent labels.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|i| self.to_parent[i]).collect()
    }

    /// Maps a set of parent vertices (all kept) to local labels.
    pub fn restrict(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.from_parent(v)).collect()
    }
}
