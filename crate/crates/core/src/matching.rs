//! Maximum matchings, Hall violators and Tutte-Berge certificates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::solver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    /// Matched pairs `(a, b)` with `a < b`, sorted.
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mate(mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w != usize::MAX && v < w)
            .map(|(v, &w)| (v, w))
            .collect();
        Matching { pairs }
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Pairs are graph edges and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.pairs.iter().all(|&(a, b)| {
            let fresh = !used[a] && !used[b];
            used[a] = true;
            used[b] = true;
            fresh && g.has_edge(a, b)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `mate[v]` for a maximum matching of a bipartite graph, by augmenting paths
/// from each left vertex in id order.
fn bipartite_mate(g: &Graph) -> Result<Vec<usize>> {
    let (left, _) = g.bipartition().ok_or(Error::NoBipartition)?;
    let adj = g.adjacency();
    let mut mate = vec![usize::MAX; g.n()];
    for &u in left {
        let mut seen = vec![false; g.n()];
        augment(u, &adj, &mut mate, &mut seen);
    }
    Ok(mate)
}

fn augment(u: usize, adj: &[Vec<usize>], mate: &mut [usize], seen: &mut [bool]) -> bool {
    for &w in &adj[u] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        if mate[w] == usize::MAX || augment(mate[w], adj, mate, seen) {
            mate[u] = w;
            mate[w] = u;
            return true;
        }
    }
    false
}

pub fn max_matching_bipartite(g: &Graph) -> Result<Matching> {
    Ok(Matching::from_mate(&bipartite_mate(g)?))
}

/// A set `S` on `side` with `|N(S)| < |S|`, or `None` when `side` can be
/// matched completely into the other part.
pub fn hall_violator(g: &Graph, side: Side) -> Result<Option<Vec<usize>>> {
    let (left, right) = g.bipartition().ok_or(Error::NoBipartition)?;
    let ours = match side {
        Side::Left => left,
        Side::Right => right,
    };
    let mate = bipartite_mate(g)?;
    let adj = g.adjacency();
    // Vertices of `ours` reachable from its unmatched vertices by alternating
    // paths; their neighbourhood is matched back into the set.
    let mut in_s = vec![false; g.n()];
    let mut queue: VecDeque<usize> = ours.iter().copied().filter(|&v| mate[v] == usize::MAX).collect();
    if queue.is_empty() {
        return Ok(None);
    }
    for &v in &queue {
        in_s[v] = true;
    }
    let mut reached = vec![false; g.n()];
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !reached[w] {
                reached[w] = true;
                let back = mate[w];
                if back != usize::MAX && !in_s[back] {
                    in_s[back] = true;
                    queue.push_back(back);
                }
            }
        }
    }
    Ok(Some(ours.iter().copied().filter(|&v| in_s[v]).collect()))
}

/// Edmonds' blossom algorithm.
pub fn max_matching_general(g: &Graph) -> Matching {
    Blossom::new(g).solve()
}

struct Blossom {
    n: usize,
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

const NONE: usize = usize::MAX;

impl Blossom {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        Blossom {
            n,
            adj: g.adjacency(),
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..self.n {
                        if self.blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn solve(mut self) -> Matching {
        for root in 0..self.n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        Matching::from_mate(&self.mate)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteBerge {
    /// A minimiser of `(n + |S| - oc(G - S)) / 2`.
    pub set: Vec<usize>,
    pub value: usize,
    /// Size of the blossom matching, for comparison with `value`.
    pub matching_size: usize,
}

impl TutteBerge {
    pub fn agrees(&self) -> bool {
        self.value == self.matching_size
    }
}

pub const TUTTE_BERGE_MAX_N: usize = 20;

/// Exhaustive minimum of the Tutte-Berge formula over all vertex subsets.
pub fn tutte_berge_certificate(g: &Graph) -> Result<TutteBerge> {
    tutte_berge_certificate_with(g, TUTTE_BERGE_MAX_N)
}

pub fn tutte_berge_certificate_with(g: &Graph, max_n: usize) -> Result<TutteBerge> {
    let n = g.n();
    if n > max_n.min(30) {
        return Err(Error::GuardExceeded { what: "Tutte-Berge vertex count", value: n, limit: max_n.min(30) });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut removed = vec![false; n];
    for mask in 0u32..(1u32 << n) {
        for (v, r) in removed.iter_mut().enumerate() {
            *r = mask >> v & 1 == 1;
        }
        let s = mask.count_ones() as usize;
        let oc = g.odd_components_without(&removed);
        if oc > n + s {
            continue;
        }
        let value = (n + s - oc) / 2;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, (0..n).filter(|&v| removed[v]).collect()));
        }
    }
    let (value, set) = best.expect("the empty set is always a candidate");
    Ok(TutteBerge { set, value, matching_size: max_matching_general(g).size() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualIdentity {
    pub m: usize,
    pub alpha_prime: usize,
    pub tau: usize,
    pub identity_holds: bool,
}

/// Compares `τ(H)` from the transversal solver with `m(H) - α'(dual(H))`.
pub fn check_dual_identity(h: &Hypergraph) -> Result<DualIdentity> {
    let dual = h.dual_graph()?;
    let alpha_prime = max_matching_general(&dual).size();
    let tau = solver::tau(h).tau;
    Ok(DualIdentity { m: h.m(), alpha_prime, tau, identity_holds: tau + alpha_prime == h.m() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Largest matching by trying every edge subset in the search tree.
    fn brute_matching(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
            let Some((&(a, b), rest)) = edges.split_first() else {
                return 0;
            };
            let mut best = go(rest, used);
            if !used[a] && !used[b] {
                used[a] = true;
                used[b] = true;
                best = best.max(1 + go(rest, used));
                used[a] = false;
                used[b] = false;
            }
            best
        }
        go(g.edges(), &mut vec![false; g.n()])
    }

    fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((a, b));
                }
            }
        }
        Graph::new(n, pairs).unwrap()
    }

    fn random_bipartite(a: usize, b: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                if rng.gen_bool(p) {
                    pairs.push((i, j));
                }
            }
        }
        Graph::with_bipartition(a + b, pairs, (0..a).collect(), (a..a + b).collect()).unwrap()
    }

    #[test]
    fn small_general_matchings() {
        assert_eq!(max_matching_general(&Graph::complete(4)).size(), 2);
        assert_eq!(max_matching_general(&Graph::cycle(7)).size(), 3);
        assert_eq!(max_matching_general(&Graph::petersen()).size(), 5);
        assert_eq!(brute_matching(&Graph::petersen()), 5);
    }

    #[test]
    fn blossom_matches_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, rng.gen_range(0.1..0.6), &mut rng);
            let m = max_matching_general(&g);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.size(), brute_matching(&g));
        }
    }

    #[test]
    fn bipartite_basics() {
        assert_eq!(max_matching_bipartite(&Graph::complete_bipartite(3, 3)).unwrap().size(), 3);
        let star = Graph::complete_bipartite(1, 4);
        assert_eq!(max_matching_bipartite(&star).unwrap().size(), 1);
        let s = hall_violator(&star, Side::Right).unwrap().unwrap();
        assert!(s.len() >= 2);
        assert_eq!(hall_violator(&Graph::complete_bipartite(3, 3), Side::Left).unwrap(), None);
        assert_eq!(max_matching_bipartite(&Graph::cycle(5)), Err(Error::NoBipartition));
    }

    #[test]
    fn hall_violators_certify_deficiency() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (a, b) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
            let g = random_bipartite(a, b, rng.gen_range(0.1..0.7), &mut rng);
            let size = max_matching_bipartite(&g).unwrap().size();
            assert_eq!(size, brute_matching(&g));
            let adj = g.adjacency();
            // König deficiency form by exhaustion over left subsets.
            let worst = (0u32..1 << a)
                .map(|mask| {
                    let s: Vec<usize> = (0..a).filter(|&v| mask >> v & 1 == 1).collect();
                    let mut nb: Vec<usize> = s.iter().flat_map(|&v| adj[v].clone()).collect();
                    nb.sort_unstable();
                    nb.dedup();
                    s.len().saturating_sub(nb.len())
                })
                .max()
                .unwrap();
            assert_eq!(size, a - worst);
            match hall_violator(&g, Side::Left).unwrap() {
                None => assert_eq!(size, a),
                Some(s) => {
                    assert!(size < a);
                    let mut nb: Vec<usize> = s.iter().flat_map(|&v| adj[v].clone()).collect();
                    nb.sort_unstable();
                    nb.dedup();
                    assert!(nb.len() < s.len());
                }
            }
        }
    }

    #[test]
    fn tutte_berge_agrees_with_blossom() {
        let c7 = tutte_berge_certificate(&Graph::cycle(7)).unwrap();
        assert_eq!(c7.value, 3);
        assert_eq!(tutte_berge_certificate(&Graph::complete(4)).unwrap().value, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let g = random_graph(n, 0.3, &mut rng);
            assert!(tutte_berge_certificate(&g).unwrap().agrees());
        }
        assert!(matches!(
            tutte_berge_certificate(&Graph::cycle(21)),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn dual_identity_on_single_edge() {
        let d = check_dual_identity(&crate::algebra::single_edge(4)).unwrap();
        assert_eq!((d.tau, d.m, d.alpha_prime), (1, 1, 0));
        assert!(d.identity_holds);
    }
}
