//! Finite hypergraphs with sorted-integer edges.
//!
//! Edges are strictly increasing vertex lists and the edge list is kept in
//! lexicographic order, so two hypergraphs built from the same edge multiset
//! compare equal with `==`. Duplicate edges are allowed (edge multisets), but
//! [`Hypergraph::is_linear`] rejects them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Edge = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Connected components: `labels[v]` is the component index of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge and the edge list.
    ///
    /// Rejects empty edges, out-of-range ids and vertices repeated within an
    /// edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut out = Vec::new();
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex { index, vertex: w[0] });
                }
            }
            if let Some(&v) = edge.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            out.push(edge);
        }
        out.sort();
        Ok(Hypergraph { n, edges: out })
    }

    pub fn empty() -> Self {
        Hypergraph { n: 0, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// The common edge size, if the hypergraph has at least one edge and all
    /// edges share it.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.is_uniform(k).then_some(k)
    }

    pub fn is_linear(&self) -> bool {
        // Two edges share two vertices iff some vertex pair is covered twice.
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    if !seen.insert((a, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Any two edges share at least one vertex.
    pub fn is_intersecting(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| {
            self.edges[i + 1..].iter().all(|b| intersection_size(a, b) > 0)
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    /// `incidence()[v]` lists the indices of edges containing `v`.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Two distinct vertices are adjacent when some edge contains both.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.iter().any(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
    }

    /// `H - X`: drops `X`, every edge meeting `X`, and the vertices left
    /// isolated; survivors are re-indexed densely in their original order.
    pub fn delete_vertices(&self, xs: &[usize]) -> Hypergraph {
        let gone: BTreeSet<usize> = xs.iter().copied().collect();
        let kept: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| !gone.contains(v)))
            .cloned()
            .collect();
        Self::compact(self.n, kept)
    }

    /// `H(X, Y)`: drops edges meeting `X`, strips `Y` from the surviving edges,
    /// then removes `X ∪ Y` and any isolated vertices.
    pub fn shrink_remove(&self, xs: &[usize], ys: &[usize]) -> Result<Hypergraph> {
        for &v in xs.iter().chain(ys) {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let x: BTreeSet<usize> = xs.iter().copied().collect();
        let y: BTreeSet<usize> = ys.iter().copied().collect();
        let mut kept = Vec::new();
        for (index, e) in self.edges.iter().enumerate() {
            if e.iter().any(|v| x.contains(v)) {
                continue;
            }
            let rest: Edge = e.iter().copied().filter(|v| !y.contains(v)).collect();
            if rest.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            kept.push(rest);
        }
        Ok(Self::compact(self.n, kept))
    }

    /// Removes the listed vertices and their edges but keeps every other
    /// vertex, isolated or not. Vertex ids are preserved (the result still has
    /// `n` vertices; removed ones become isolated).
    pub fn without_vertices_keep_ids(&self, xs: &[usize]) -> Hypergraph {
        let gone: BTreeSet<usize> = xs.iter().copied().collect();
        Hypergraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| e.iter().all(|v| !gone.contains(v)))
                .cloned()
                .collect(),
        }
    }

    /// Drops the edge at `index`, keeping all vertices.
    pub fn remove_edge(&self, index: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Hypergraph { n: self.n, edges }
    }

    /// Sub-hypergraph formed by the chosen edges and exactly their vertices,
    /// re-indexed densely.
    pub fn edge_induced(&self, edge_indices: &[usize]) -> Hypergraph {
        let kept = edge_indices.iter().map(|&i| self.edges[i].clone()).collect();
        Self::compact(self.n, kept)
    }

    /// Complement of every edge with respect to the full vertex set.
    pub fn complement(&self) -> Result<Hypergraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| (0..self.n).filter(|v| e.binary_search(v).is_err()).collect::<Edge>());
        Hypergraph::new(self.n, edges)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(other.edges.iter().map(|e| e.iter().map(|v| v + shift).collect()));
        Hypergraph::new(self.n + other.n, edges).expect("union of valid hypergraphs")
    }

    /// Bipartite incidence graph: vertices `0..n` are the hypergraph vertices,
    /// `n..n+m` are the edges.
    pub fn incidence_graph(&self) -> Graph {
        let n = self.n;
        let pairs = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.iter().map(move |&v| (v, n + i)));
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..n + self.m()).collect();
        Graph::with_bipartition(n + self.m(), pairs, left, right)
            .expect("incidence graph is simple and bipartite")
    }

    /// Graph on the edges of a linear hypergraph with `Δ ≤ 2`: one graph edge
    /// per degree-2 vertex, joining its two hyperedges.
    pub fn dual_graph(&self) -> Result<Graph> {
        if self.max_degree() > 2 {
            return Err(Error::pre("dual graph needs maximum degree at most 2"));
        }
        if !self.is_linear() {
            return Err(Error::pre("dual graph needs a linear hypergraph"));
        }
        let pairs = self
            .incidence()
            .into_iter()
            .filter(|inc| inc.len() == 2)
            .map(|inc| (inc[0], inc[1]));
        Graph::new(self.m(), pairs)
    }

    /// Transpose: one vertex per edge and one edge per vertex, listing the
    /// edges that contain it. Fails when some vertex is isolated.
    pub fn transpose(&self) -> Result<Hypergraph> {
        if let Some(v) = self.degrees().iter().position(|&d| d == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        Hypergraph::new(self.m(), self.incidence())
    }

    pub fn components(&self) -> Components {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            let r = dsu.find(v);
            if labels[r] == usize::MAX {
                labels[r] = count;
                count += 1;
            }
            labels[v] = labels[r];
        }
        Components { labels, count }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    /// Whether `set` meets every edge.
    pub fn is_transversal(&self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.n];
        for &v in set {
            if v < self.n {
                mark[v] = true;
            }
        }
        self.edges.iter().all(|e| e.iter().any(|&v| mark[v]))
    }

    fn compact(n: usize, edges: Vec<Edge>) -> Hypergraph {
        let mut used = vec![false; n];
        for e in &edges {
            for &v in e {
                used[v] = true;
            }
        }
        let mut remap = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if used[v] {
                remap[v] = next;
                next += 1;
            }
        }
        let edges = edges
            .into_iter()
            .map(|e| e.into_iter().map(|v| remap[v]).collect());
        Hypergraph::new(next, edges).expect("compaction preserves validity")
    }
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h4() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap()
    }

    #[test]
    fn uniformity_and_degrees_of_single_edge() {
        let h = h4();
        assert!(h.is_uniform(4));
        assert!(!h.is_uniform(3));
        assert_eq!(h.degrees(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn duplicated_edge_is_not_linear() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]).unwrap();
        assert_eq!(h.m(), 2);
        assert!(!h.is_linear());
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![1, 1]]),
            Err(Error::RepeatedVertex { index: 0, vertex: 1 })
        );
        assert_eq!(Hypergraph::new(3, vec![vec![]]), Err(Error::EmptyEdge { index: 0 }));
    }

    #[test]
    fn deleting_from_single_edge_leaves_nothing() {
        let h = h4().delete_vertices(&[2]);
        assert_eq!((h.n(), h.m()), (0, 0));
        assert_eq!(h4().delete_vertices(&[0, 1, 2, 3]), Hypergraph::empty());
    }

    #[test]
    fn shrink_remove_strips_y() {
        let h = h4();
        assert_eq!(h.shrink_remove(&[], &[]).unwrap(), h);
        let s = h.shrink_remove(&[], &[0]).unwrap();
        assert_eq!(s, Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap());
        assert_eq!(h.shrink_remove(&[], &[0, 1, 2, 3]), Err(Error::EmptyEdge { index: 0 }));
    }

    #[test]
    fn complement_of_full_edge_is_rejected() {
        assert_eq!(h4().complement(), Err(Error::EmptyEdge { index: 0 }));
    }

    #[test]
    fn components_count() {
        let two = h4().disjoint_union(&h4());
        assert_eq!(two.components().count, 2);
        assert_eq!(Hypergraph::empty().components().count, 0);
    }

    #[test]
    fn incidence_graph_of_single_edge_is_a_star() {
        let g = h4().incidence_graph();
        assert_eq!(g.n(), 5);
        let mut deg = g.degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn dual_of_single_edge_is_isolated_vertex() {
        let d = h4().dual_graph().unwrap();
        assert_eq!((d.n(), d.m()), (1, 0));
    }

    #[test]
    fn transpose_swaps_degrees_and_sizes() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let t = h.transpose().unwrap();
        assert_eq!((t.n(), t.m()), (2, 5));
        assert_eq!(t.degrees(), vec![3, 3]);
        assert_eq!(t.transpose().unwrap(), h);
    }

    #[test]
    fn dual_graph_rejects_degree_three() {
        let h = Hypergraph::new(7, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert!(matches!(h.dual_graph(), Err(Error::Precondition(_))));
    }
}
