//! Special sub-hypergraph packings and the deficiency functional.
//!
//! A copy of a catalog entry inside a host is edge-induced: a set of host
//! edges together with exactly the vertices they cover, isomorphic to the
//! entry. Host vertices of a copy may lie on further host edges; those edges
//! make up `E*(X)`.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::catalog::{special, SpecialClass, SpecialKind};
use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, Hypergraph};
use crate::solver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub kind: SpecialKind,
    /// `vertex_map[x]` is the host vertex playing catalog vertex `x`.
    pub vertex_map: Vec<usize>,
    /// Host edges of the copy, sorted.
    pub edge_indices: Vec<usize>,
}

impl Embedding {
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.vertex_map.iter().copied().collect()
    }
}

/// Pairwise vertex-disjoint copies of special hypergraphs in a host.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSet {
    pub embeddings: Vec<Embedding>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub x4: usize,
    pub x10: usize,
    pub x11: usize,
    pub x14: usize,
    pub x21: usize,
}

impl SpecialSet {
    pub fn new(embeddings: Vec<Embedding>) -> Self {
        SpecialSet { embeddings }
    }

    pub fn len(&self) -> usize {
        self.embeddings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.embeddings.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.embeddings.iter().flat_map(|e| e.vertex_map.iter().copied()).collect()
    }

    pub fn edges(&self) -> BTreeSet<usize> {
        self.embeddings.iter().flat_map(|e| e.edge_indices.iter().copied()).collect()
    }

    pub fn counts(&self) -> ClassCounts {
        let mut c = ClassCounts::default();
        for e in &self.embeddings {
            match e.kind.class() {
                SpecialClass::X4 => c.x4 += 1,
                SpecialClass::X10 => c.x10 += 1,
                SpecialClass::X11 => c.x11 += 1,
                SpecialClass::X14 => c.x14 += 1,
                SpecialClass::X21 => c.x21 += 1,
            }
        }
        c
    }

    /// Copies are pairwise vertex-disjoint and each realises its kind in `h`.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let mut seen = HashSet::new();
        let disjoint = self.embeddings.iter().all(|e| e.vertex_map.iter().all(|&v| seen.insert(v)));
        disjoint
            && self.embeddings.iter().all(|e| {
                let Ok(f) = special(e.kind) else { return false };
                let mut image: Vec<Vec<usize>> = f
                    .edges()
                    .iter()
                    .map(|fe| {
                        let mut x: Vec<usize> = fe.iter().map(|&v| e.vertex_map[v]).collect();
                        x.sort_unstable();
                        x
                    })
                    .collect();
                image.sort();
                let mut host: Vec<Vec<usize>> =
                    e.edge_indices.iter().filter_map(|&i| h.edges().get(i).cloned()).collect();
                host.sort();
                image == host
            })
    }
}

/// Every edge-induced copy of `kind` in `h`, one per edge-index set, in
/// lexicographic order of edge sets.
pub fn find_embeddings(h: &Hypergraph, kind: SpecialKind) -> Result<Vec<Embedding>> {
    let f = special(kind)?;
    Ok(embed(h, &f, kind))
}

fn embed(h: &Hypergraph, f: &Hypergraph, kind: SpecialKind) -> Vec<Embedding> {
    if f.m() > h.m() {
        return Vec::new();
    }
    // Catalog edges in BFS order so every edge after the first in its
    // component meets an earlier one.
    let order = bfs_edge_order(f);
    let r = order.len();
    let fe: Vec<&[usize]> = order.iter().map(|&i| f.edge(i)).collect();
    let shared: Vec<Vec<Option<usize>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        return None;
                    }
                    fe[i].iter().copied().find(|v| fe[j].binary_search(v).is_ok())
                })
                .collect()
        })
        .collect();
    let host_inc = h.incidence();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; r];
    let mut phi = vec![usize::MAX; f.n()];
    let mut phi_inv = std::collections::HashMap::new();
    let ctx = Ctx { h, fe: &fe, shared: &shared, host_inc: &host_inc };
    ctx.extend(0, &mut assign, &mut phi, &mut phi_inv, &mut |assign, phi| {
        let mut key: Vec<usize> = assign.to_vec();
        key.sort_unstable();
        if found.insert(key.clone()) {
            let mut vertex_map = phi.to_vec();
            // Catalog vertices on a single edge take the host edge's
            // remaining vertices in order.
            for (i, &he) in assign.iter().enumerate() {
                let used: HashSet<usize> = fe[i].iter().filter(|&&x| phi[x] != usize::MAX).map(|&x| phi[x]).collect();
                let mut free = h.edge(he).iter().copied().filter(|v| !used.contains(v));
                for &x in fe[i] {
                    if vertex_map[x] == usize::MAX {
                        vertex_map[x] = free.next().expect("sizes agree");
                    }
                }
            }
            out.push(Embedding { kind, vertex_map, edge_indices: key });
        }
    });
    out.sort_by(|a, b| a.edge_indices.cmp(&b.edge_indices));
    out
}

fn bfs_edge_order(f: &Hypergraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(f.m());
    let mut placed = vec![false; f.m()];
    for start in 0..f.m() {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for j in 0..f.m() {
                if !placed[j] && intersection_size(f.edge(i), f.edge(j)) > 0 {
                    placed[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    order
}

struct Ctx<'a> {
    h: &'a Hypergraph,
    fe: &'a [&'a [usize]],
    /// `shared[i][j]`: the catalog vertex common to edges `i` and `j`.
    shared: &'a [Vec<Option<usize>>],
    host_inc: &'a [Vec<usize>],
}

impl Ctx<'_> {
    fn extend(
        &self,
        i: usize,
        assign: &mut Vec<usize>,
        phi: &mut Vec<usize>,
        phi_inv: &mut std::collections::HashMap<usize, usize>,
        emit: &mut dyn FnMut(&[usize], &[usize]),
    ) {
        if i == self.fe.len() {
            emit(assign, phi);
            return;
        }
        // Restrict candidates through an already mapped shared vertex.
        let anchor = (0..i).find_map(|j| self.shared[i][j].map(|x| (j, x)));
        let candidates: Vec<usize> = match anchor {
            Some((_, x)) if phi[x] != usize::MAX => self.host_inc[phi[x]].clone(),
            Some((j, _)) => {
                let mut c: Vec<usize> =
                    self.h.edge(assign[j]).iter().flat_map(|&v| self.host_inc[v].iter().copied()).collect();
                c.sort_unstable();
                c.dedup();
                c
            }
            None => (0..self.h.m()).collect(),
        };
        'cand: for e in candidates {
            if assign[..i].contains(&e) || self.h.edge(e).len() != self.fe[i].len() {
                continue;
            }
            let he = self.h.edge(e);
            let mut new_bindings: Vec<(usize, usize)> = Vec::new();
            for j in 0..i {
                let hj = self.h.edge(assign[j]);
                let common: Vec<usize> = he.iter().copied().filter(|v| hj.binary_search(v).is_ok()).collect();
                match (self.shared[i][j], common.as_slice()) {
                    (None, []) => {}
                    (Some(x), [y]) => {
                        let bound_x = phi[x];
                        let bound_y = phi_inv.get(y).copied();
                        let pending = new_bindings.iter().find(|(a, _)| *a == x).map(|&(_, b)| b);
                        let ok = match (bound_x, bound_y) {
                            (usize::MAX, None) => pending.is_none_or(|b| b == *y),
                            (bx, Some(by)) => bx == *y && by == x,
                            _ => false,
                        };
                        if !ok {
                            continue 'cand;
                        }
                        if bound_x == usize::MAX && pending.is_none() {
                            if new_bindings.iter().any(|&(_, b)| b == *y) {
                                continue 'cand;
                            }
                            new_bindings.push((x, *y));
                        }
                    }
                    _ => continue 'cand,
                }
            }
            // A catalog vertex already mapped must land inside this edge,
            // and a mapped host vertex inside this edge must come from it.
            for &x in self.fe[i] {
                if phi[x] != usize::MAX && he.binary_search(&phi[x]).is_err() {
                    continue 'cand;
                }
            }
            for v in he {
                if let Some(&x) = phi_inv.get(v) {
                    if self.fe[i].binary_search(&x).is_err() {
                        continue 'cand;
                    }
                }
            }
            for &(x, y) in &new_bindings {
                phi[x] = y;
                phi_inv.insert(y, x);
            }
            assign[i] = e;
            self.extend(i + 1, assign, phi, phi_inv, emit);
            assign[i] = usize::MAX;
            for &(x, y) in &new_bindings {
                phi[x] = usize::MAX;
                phi_inv.remove(&y);
            }
        }
    }
}

/// Host edges outside `E(X)` that meet `V(X)`.
pub fn estar(h: &Hypergraph, x: &SpecialSet) -> BTreeSet<usize> {
    let vx = x.vertices();
    let ex = x.edges();
    (0..h.m())
        .filter(|i| !ex.contains(i) && h.edge(*i).iter().any(|v| vx.contains(v)))
        .collect()
}

pub fn weighted_sum(c: &ClassCounts) -> i64 {
    10 * c.x10 as i64 + 8 * c.x4 as i64 + 5 * c.x14 as i64 + 4 * c.x11 as i64 + c.x21 as i64
}

pub fn defic_of_set(h: &Hypergraph, x: &SpecialSet) -> i64 {
    weighted_sum(&x.counts()) - 13 * estar(h, x).len() as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficiency {
    pub value: i64,
    pub set: SpecialSet,
    pub estar: Vec<usize>,
    pub counts: ClassCounts,
    pub nodes: u64,
}

pub const DEFICIENCY_MAX_N: usize = 30;

/// All copies of every shipped kind, heaviest class first.
pub fn all_embeddings(h: &Hypergraph) -> Vec<Embedding> {
    let mut kinds: Vec<SpecialKind> = SpecialKind::shipped().collect();
    kinds.sort_by_key(|k| (std::cmp::Reverse(k.class().weight()), *k));
    kinds
        .into_iter()
        .flat_map(|k| find_embeddings(h, k).expect("shipped kinds load"))
        .collect()
}

pub fn deficiency(h: &Hypergraph) -> Result<Deficiency> {
    deficiency_visit(h, DEFICIENCY_MAX_N, &mut |_| {})
}

/// Maximises `defic_H(X)` over special sets, calling `visit` on every set
/// the search reaches (including the empty one).
pub fn deficiency_visit(h: &Hypergraph, max_n: usize, visit: &mut dyn FnMut(&SpecialSet)) -> Result<Deficiency> {
    if !h.is_uniform(4) && h.m() > 0 {
        return Err(Error::pre("deficiency needs a 4-uniform hypergraph"));
    }
    if !h.is_linear() {
        return Err(Error::pre("deficiency needs a linear hypergraph"));
    }
    if h.n() > max_n {
        return Err(Error::GuardExceeded { what: "deficiency vertex count", value: h.n(), limit: max_n });
    }
    let cands = all_embeddings(h);
    let verts: Vec<BTreeSet<usize>> = cands.iter().map(Embedding::vertices).collect();
    let inc = h.incidence();
    let mut search = DeficSearch {
        cands: &cands,
        verts: &verts,
        inc: &inc,
        chosen: Vec::new(),
        used: vec![false; h.n()],
        star_count: vec![0; h.m()],
        in_ex: vec![false; h.m()],
        best: (0, Vec::new(), Vec::new()),
        nodes: 0,
        visit,
    };
    search.go(0, 0, 0);
    let (value, picks, _) = search.best.clone();
    let nodes = search.nodes;
    let set = SpecialSet::new(picks.iter().map(|&i| cands[i].clone()).collect());
    let es = estar(h, &set).into_iter().collect();
    Ok(Deficiency { value, counts: set.counts(), set, estar: es, nodes })
}

struct DeficSearch<'a> {
    cands: &'a [Embedding],
    verts: &'a [BTreeSet<usize>],
    inc: &'a [Vec<usize>],
    chosen: Vec<usize>,
    used: Vec<bool>,
    /// Per host edge, how many chosen copies it touches from outside.
    star_count: Vec<usize>,
    in_ex: Vec<bool>,
    /// (value, chosen candidates, footprint)
    best: (i64, Vec<usize>, Vec<usize>),
    nodes: u64,
    visit: &'a mut dyn FnMut(&SpecialSet),
}

impl DeficSearch<'_> {
    fn footprint(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.chosen.iter().flat_map(|&i| self.cands[i].edge_indices.clone()).collect();
        f.sort_unstable();
        f
    }

    fn go(&mut self, next: usize, weight: i64, star: usize) {
        self.nodes += 1;
        let value = weight - 13 * star as i64;
        let set = SpecialSet::new(self.chosen.iter().map(|&i| self.cands[i].clone()).collect());
        (self.visit)(&set);
        let fp = self.footprint();
        if value > self.best.0 || (value == self.best.0 && fp < self.best.2) {
            self.best = (value, self.chosen.clone(), fp);
        }
        // Optimistic bound: every further compatible copy adds its weight at
        // no cost, capped by 2 per free vertex (the best weight density).
        let mut free_cover = BTreeSet::new();
        let mut extra = 0;
        for i in next..self.cands.len() {
            if self.verts[i].iter().all(|&v| !self.used[v]) {
                extra += self.cands[i].kind.class().weight();
                free_cover.extend(self.verts[i].iter().copied());
            }
        }
        let bound = value + extra.min(2 * free_cover.len() as i64);
        if bound < self.best.0 {
            return;
        }
        for i in next..self.cands.len() {
            if self.verts[i].iter().any(|&v| self.used[v]) {
                continue;
            }
            let added = self.add(i);
            self.go(i + 1, weight + self.cands[i].kind.class().weight(), star + added);
            self.remove(i);
        }
    }

    /// Marks candidate `i` chosen; returns how many edges newly enter `E*`.
    fn add(&mut self, i: usize) -> usize {
        self.chosen.push(i);
        for &e in &self.cands[i].edge_indices {
            self.in_ex[e] = true;
        }
        let mut touched = BTreeSet::new();
        for &v in &self.verts[i] {
            self.used[v] = true;
            touched.extend(self.inc[v].iter().copied());
        }
        let mut added = 0;
        for e in touched {
            if !self.in_ex[e] {
                if self.star_count[e] == 0 {
                    added += 1;
                }
                self.star_count[e] += 1;
            }
        }
        added
    }

    fn remove(&mut self, i: usize) {
        self.chosen.pop();
        let mut touched = BTreeSet::new();
        for &v in &self.verts[i] {
            self.used[v] = false;
            touched.extend(self.inc[v].iter().copied());
        }
        for &e in &self.cands[i].edge_indices {
            self.in_ex[e] = false;
        }
        for e in touched {
            if !self.cands[i].edge_indices.contains(&e) {
                self.star_count[e] -= 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficBound {
    pub n: usize,
    pub m: usize,
    pub tau: usize,
    pub defic: i64,
    pub holds: bool,
}

/// `45 τ ≤ 6 n + 13 m + defic` for 4-uniform linear hosts with `Δ ≤ 3`.
pub fn check_defic_bound(h: &Hypergraph) -> Result<DeficBound> {
    if h.max_degree() > 3 {
        return Err(Error::pre("the deficiency bound needs maximum degree at most 3"));
    }
    let d = deficiency(h)?;
    let tau = solver::tau(h).tau;
    let (n, m) = (h.n(), h.m());
    let holds = 45 * tau as i64 <= 6 * n as i64 + 13 * m as i64 + d.value;
    Ok(DeficBound { n, m, tau, defic: d.value, holds })
}

/// `3 |E*(X)| ≥ |X| - c(H)`.
pub fn check_estar_bound(h: &Hypergraph, x: &SpecialSet) -> bool {
    3 * estar(h, x).len() as i64 >= x.len() as i64 - h.components().count as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{affine_residual, single_edge};

    fn bridged() -> Hypergraph {
        Hypergraph::new(11, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![3, 7, 8, 9]]).unwrap()
    }

    /// Every subset of pairwise-disjoint copies.
    fn brute_deficiency(h: &Hypergraph) -> i64 {
        let cands = all_embeddings(h);
        assert!(cands.len() <= 16);
        let mut best = 0;
        for mask in 0u32..1 << cands.len() {
            let pick: Vec<Embedding> =
                (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i].clone()).collect();
            let set = SpecialSet::new(pick);
            let mut seen = HashSet::new();
            if set.embeddings.iter().all(|e| e.vertex_map.iter().all(|&v| seen.insert(v))) {
                best = best.max(defic_of_set(h, &set));
            }
        }
        best
    }

    #[test]
    fn embeddings_of_single_edges() {
        let h10 = special(SpecialKind::H10).unwrap();
        assert_eq!(find_embeddings(&h10, SpecialKind::H4).unwrap().len(), 5);
        assert_eq!(find_embeddings(&h10, SpecialKind::H10).unwrap().len(), 1);
        assert_eq!(find_embeddings(&affine_residual(4, 4).unwrap(), SpecialKind::H4).unwrap().len(), 3);
    }

    #[test]
    fn embeddings_are_valid() {
        for kind in SpecialKind::shipped() {
            let f = special(kind).unwrap();
            let es = find_embeddings(&f, kind).unwrap();
            assert_eq!(es.len(), 1, "{kind}");
            assert!(SpecialSet::new(es).is_valid_in(&f));
        }
    }

    #[test]
    fn estar_and_defic_on_bridged_host() {
        let h = bridged();
        let copies: Vec<Embedding> = find_embeddings(&h, SpecialKind::H4)
            .unwrap()
            .into_iter()
            .filter(|e| e.edge_indices != vec![1])
            .collect();
        // Edges sort as [0,1,2,3], [3,7,8,9], [4,5,6,7].
        assert_eq!(copies.iter().map(|e| e.edge_indices[0]).collect::<Vec<_>>(), vec![0, 2]);
        let x = SpecialSet::new(copies);
        assert_eq!(estar(&h, &x).into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(defic_of_set(&h, &x), 3);
        assert_eq!(deficiency(&h).unwrap().value, 3);
        assert_eq!(brute_deficiency(&h), 3);
        assert!(check_estar_bound(&h, &x));
    }

    #[test]
    fn defic_of_trivial_sets() {
        let h = single_edge(4);
        assert_eq!(defic_of_set(&h, &SpecialSet::default()), 0);
        let d = deficiency(&h).unwrap();
        assert_eq!(d.value, 8);
        assert_eq!(d.counts.x4, 1);
    }

    #[test]
    fn catalog_deficiency_identity() {
        for kind in SpecialKind::shipped() {
            let f = special(kind).unwrap();
            let d = deficiency(&f).unwrap();
            let expect = 45 * kind.class().tau() as i64 - 6 * f.n() as i64 - 13 * f.m() as i64;
            assert_eq!(d.value, expect, "{kind}");
            assert_eq!(d.value, kind.class().weight(), "{kind}");
        }
    }

    #[test]
    fn branch_and_bound_matches_exhaustive_on_random_hosts() {
        for seed in 0..80 {
            let h = crate::algebra::random_linear(16, 4, 3, 8, seed).unwrap();
            if all_embeddings(&h).len() > 16 {
                continue;
            }
            assert_eq!(deficiency(&h).unwrap().value, brute_deficiency(&h), "seed {seed}");
        }
    }

    #[test]
    fn preconditions() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(deficiency(&h), Err(Error::Precondition(_))));
        let big = Hypergraph::new(31, vec![]).unwrap();
        assert!(matches!(deficiency(&big), Err(Error::GuardExceeded { .. })));
    }
}
