//! Simple undirected graphs with an optional recorded bipartition.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl Graph {
    /// Builds a simple graph. Pairs are normalised to `(min, max)` and sorted.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::Loop(a, b));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let p = (a.min(b), a.max(b));
            if !set.insert(p) {
                return Err(Error::RepeatedPair(p.0, p.1));
            }
        }
        Ok(Graph { n, edges: set.into_iter().collect(), bipartition: None })
    }

    /// Builds a graph whose every edge must cross `left | right`.
    pub fn with_bipartition(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        mut left: Vec<usize>,
        mut right: Vec<usize>,
    ) -> Result<Self> {
        let mut g = Graph::new(n, pairs)?;
        left.sort_unstable();
        right.sort_unstable();
        let mut side = vec![None; n];
        for (s, part) in [(0u8, &left), (1u8, &right)] {
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if side[v].is_some() {
                    return Err(Error::InvalidBipartition(format!("vertex {v} is on both sides")));
                }
                side[v] = Some(s);
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::InvalidBipartition(format!("vertex {v} is on neither side")));
        }
        if let Some(&(a, b)) = g.edges.iter().find(|&&(a, b)| side[a] == side[b]) {
            return Err(Error::InvalidBipartition(format!("edge ({a}, {b}) does not cross")));
        }
        g.bipartition = Some((left, right));
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, pairs).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let pairs = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Graph::with_bipartition(a + b, pairs, (0..a).collect(), (a..a + b).collect())
            .expect("complete bipartite graph")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bipartition(&self) -> Option<(&[usize], &[usize])> {
        self.bipartition.as_ref().map(|(l, r)| (l.as_slice(), r.as_slice()))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_c4_free(&self) -> bool {
        !self.has_four_cycle()
    }

    /// Some pair of vertices has two common neighbours.
    fn has_four_cycle(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        for list in &adj {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    if !seen.insert((a, b)) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Two-colouring found by BFS, if one exists.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Copy of this graph with a bipartition attached, using the recorded one
    /// or else a BFS two-colouring.
    pub fn with_detected_bipartition(&self) -> Result<Graph> {
        if self.bipartition.is_some() {
            return Ok(self.clone());
        }
        let colour = self.two_colouring().ok_or(Error::NoBipartition)?;
        let left = (0..self.n).filter(|&v| colour[v] == 0).collect();
        let right = (0..self.n).filter(|&v| colour[v] == 1).collect();
        Graph::with_bipartition(self.n, self.edges.iter().copied(), left, right)
    }

    /// Joins `a` in one part to `b` in the other exactly when `ab` is not an
    /// edge here.
    pub fn bipartite_complement(&self) -> Result<Graph> {
        let (left, right) = self.bipartition.as_ref().ok_or(Error::NoBipartition)?;
        let mut pairs = Vec::new();
        for &a in left {
            for &b in right {
                if !self.has_edge(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        Graph::with_bipartition(self.n, pairs, left.clone(), right.clone())
    }

    /// Open neighbourhood hypergraph: one edge `N(x)` per vertex `x`.
    pub fn onh(&self) -> Result<Hypergraph> {
        let adj = self.adjacency();
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        Hypergraph::new(self.n, adj)
    }

    /// 2-uniform hypergraph with the same vertices and edges.
    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.edges.iter().map(|&(a, b)| vec![a, b]))
            .expect("graph edges are valid 2-edges")
    }

    /// Number of odd-order components after deleting `removed`.
    pub fn odd_components_without(&self, removed: &[bool]) -> usize {
        let adj = self.adjacency();
        let mut seen = removed.to_vec();
        let mut odd = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut size = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            odd += size % 2;
        }
        odd
    }
}
