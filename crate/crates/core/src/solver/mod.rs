//! Exact transversal numbers.
//!
//! [`tau`] is a branch-and-bound search over bitsets; [`tau_bruteforce`] and
//! [`enumerate_min_transversals`] are plain subset scans that serve as
//! oracles and as the engine for the constrained queries.

pub mod bits;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use bits::{Bits, Wide};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bruteforce,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalResult {
    pub tau: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    pub method: Method,
}

/// Size limits for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub bruteforce_n: usize,
    pub enumerate_n: usize,
    pub enumerate_tau: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { bruteforce_n: 25, enumerate_n: 25, enumerate_tau: 8 }
    }
}

fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::GuardExceeded { what, value, limit })
    } else {
        Ok(())
    }
}

/// Edges as vertex bitmasks, for the `n <= 32` subset scans.
fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges().iter().map(|e| e.iter().fold(0u32, |acc, &v| acc | 1 << v)).collect()
}

/// Calls `visit` on every `size`-subset of `0..n` in lexicographic order until
/// it returns `false`.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn tau_bruteforce(h: &Hypergraph) -> Result<TransversalResult> {
    tau_bruteforce_with(h, &Guards::default())
}

/// Subsets in increasing size, lexicographic within a size; the first hit is
/// returned.
pub fn tau_bruteforce_with(h: &Hypergraph, guards: &Guards) -> Result<TransversalResult> {
    guard("bruteforce vertex count", h.n(), guards.bruteforce_n.min(32))?;
    let masks = edge_masks(h);
    let mut nodes = 0u64;
    for size in 0..=h.n() {
        let mut found = None;
        for_each_subset(h.n(), size, |set| {
            nodes += 1;
            let mask = set.iter().fold(0u32, |acc, &v| acc | 1 << v);
            if masks.iter().all(|&e| e & mask != 0) {
                found = Some(set.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(witness) = found {
            return Ok(TransversalResult { tau: size, witness, nodes_explored: nodes, method: Method::Bruteforce });
        }
    }
    unreachable!("the full vertex set meets every non-empty edge")
}

/// All minimum transversals in lexicographic order.
pub fn enumerate_min_transversals(h: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    enumerate_min_transversals_with(h, &Guards::default())
}

pub fn enumerate_min_transversals_with(h: &Hypergraph, guards: &Guards) -> Result<Vec<Vec<usize>>> {
    guard("enumeration vertex count", h.n(), guards.enumerate_n.min(32))?;
    let t = tau(h).tau;
    guard("enumeration transversal number", t, guards.enumerate_tau)?;
    let masks = edge_masks(h);
    let mut out = Vec::new();
    for_each_subset(h.n(), t, |set| {
        let mask = set.iter().fold(0u32, |acc, &v| acc | 1 << v);
        if masks.iter().all(|&e| e & mask != 0) {
            out.push(set.to_vec());
        }
        true
    });
    Ok(out)
}

/// Whether some minimum transversal satisfies `pred`.
pub fn exists_min_transversal(h: &Hypergraph, pred: impl Fn(&[usize]) -> bool) -> Result<bool> {
    Ok(enumerate_min_transversals(h)?.iter().any(|t| pred(t)))
}

/// Total domination number via the open neighbourhood hypergraph.
pub fn gamma_t(g: &Graph) -> Result<usize> {
    Ok(tau(&g.onh()?).tau)
}

/// Exact transversal number by branch and bound.
pub fn tau(h: &Hypergraph) -> TransversalResult {
    let width = h.n().max(h.m());
    let result = if width <= 64 {
        Search::<u64>::new(h).run()
    } else if width <= 128 {
        Search::<u128>::new(h).run()
    } else {
        Search::<Wide>::new(h).run()
    };
    debug_assert!(h.is_transversal(&result.witness));
    result
}

struct Search<B: Bits> {
    n: usize,
    /// Edge bitset of the edges containing each vertex.
    inc: Vec<B>,
    /// Vertex bitset of each edge.
    verts: Vec<B>,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl<B: Bits> Search<B> {
    fn new(h: &Hypergraph) -> Self {
        let mut inc = vec![B::empty(h.m()); h.n()];
        let mut verts = vec![B::empty(h.n()); h.m()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                inc[v].insert(i);
                verts[i].insert(v);
            }
        }
        Search { n: h.n(), inc, verts, best: Vec::new(), chosen: Vec::new(), nodes: 0 }
    }

    fn run(mut self) -> TransversalResult {
        let m = self.verts.len();
        let uncovered = B::full(m);
        self.best = self.greedy(uncovered.clone());
        let excluded = B::empty(self.n);
        self.branch(uncovered, excluded);
        let mut witness = self.best;
        witness.sort_unstable();
        TransversalResult {
            tau: witness.len(),
            witness,
            nodes_explored: self.nodes,
            method: Method::BranchAndBound,
        }
    }

    /// Repeatedly takes a vertex of maximum uncovered degree (lowest id wins).
    fn greedy(&self, mut uncovered: B) -> Vec<usize> {
        let mut picked = Vec::new();
        while !uncovered.is_empty() {
            let v = (0..self.n)
                .max_by_key(|&v| (self.inc[v].count_and(&uncovered), std::cmp::Reverse(v)))
                .expect("uncovered edges have vertices");
            uncovered.subtract(&self.inc[v]);
            picked.push(v);
        }
        picked
    }

    /// Larger of a greedy disjoint-edge packing and the fewest
    /// highest-degree vertices whose degrees could sum to the uncovered count.
    fn lower_bound(&self, uncovered: &B, excluded: &B) -> usize {
        let edges = uncovered.ones();
        let mut avail: Vec<(usize, B)> = edges
            .iter()
            .map(|&e| {
                let mut s = self.verts[e].clone();
                s.subtract(excluded);
                (s.count(), s)
            })
            .collect();
        avail.sort_by_key(|(c, _)| *c);
        let mut used = B::empty(self.n);
        let mut packing = 0;
        for (_, s) in &avail {
            if !s.intersects(&used) {
                used.union_with(s);
                packing += 1;
            }
        }

        let mut deg: Vec<usize> = (0..self.n)
            .filter(|&v| !excluded.contains(v))
            .map(|v| self.inc[v].count_and(uncovered))
            .filter(|&d| d > 0)
            .collect();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        let mut need = edges.len();
        let mut by_degree = 0;
        for d in deg {
            if need == 0 {
                break;
            }
            need = need.saturating_sub(d);
            by_degree += 1;
        }
        if need > 0 {
            return usize::MAX;
        }
        packing.max(by_degree)
    }

    fn branch(&mut self, uncovered: B, mut excluded: B) {
        self.nodes += 1;
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let lb = self.lower_bound(&uncovered, &excluded);
        if lb == usize::MAX || self.chosen.len() + lb >= self.best.len() {
            return;
        }
        // Uncovered edge with the fewest available vertices, lowest index.
        let (_, pivot) = uncovered
            .ones()
            .into_iter()
            .map(|e| {
                let mut s = self.verts[e].clone();
                s.subtract(&excluded);
                (s.count(), e)
            })
            .min()
            .expect("non-empty");
        let mut candidates = self.verts[pivot].ones();
        candidates.retain(|&v| !excluded.contains(v));
        candidates.sort_by_key(|&v| (std::cmp::Reverse(self.inc[v].count_and(&uncovered)), v));
        for v in candidates {
            let mut next = uncovered.clone();
            next.subtract(&self.inc[v]);
            self.chosen.push(v);
            self.branch(next, excluded.clone());
            self.chosen.pop();
            excluded.insert(v);
            if self.chosen.len() + 1 >= self.best.len() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{affine_plane, fano_complement, projective_plane, random_linear, single_edge};

    #[test]
    fn bruteforce_small_values() {
        assert_eq!(tau_bruteforce(&single_edge(4)).unwrap().tau, 1);
        let empty = Hypergraph::new(3, vec![]).unwrap();
        let r = tau_bruteforce(&empty).unwrap();
        assert_eq!((r.tau, r.witness.len()), (0, 0));
        assert_eq!(tau_bruteforce(&affine_plane(3).unwrap()).unwrap().tau, 5);
        assert_eq!(tau_bruteforce(&projective_plane(2).unwrap()).unwrap().tau, 3);
    }

    #[test]
    fn bruteforce_guard() {
        let h = Hypergraph::new(26, vec![]).unwrap();
        assert!(matches!(tau_bruteforce(&h), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn branch_and_bound_matches_known_values() {
        assert_eq!(tau(&fano_complement()).tau, 3);
        assert_eq!(tau(&Hypergraph::new(2, vec![]).unwrap()).tau, 0);
        for q in [2u64, 3, 4] {
            assert_eq!(tau(&affine_plane(q).unwrap()).tau, 2 * q as usize - 1);
        }
    }

    #[test]
    fn branch_and_bound_matches_oracle() {
        for seed in 0..60 {
            let h = random_linear(14, 3, 3, 12, seed).unwrap();
            let r = tau(&h);
            assert!(h.is_transversal(&r.witness));
            assert_eq!(r.tau, tau_bruteforce(&h).unwrap().tau, "seed {seed}");
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_min_transversals(&single_edge(4)).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let triangle = Graph::complete(3).as_hypergraph();
        assert_eq!(
            enumerate_min_transversals(&triangle).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert!(exists_min_transversal(&single_edge(4), |t| t.contains(&2)).unwrap());
    }

    #[test]
    fn total_domination_of_c4() {
        assert_eq!(gamma_t(&Graph::cycle(4)).unwrap(), 2);
        assert!(gamma_t(&Graph::new(1, []).unwrap()).is_err());
    }
}
