//! Deterministic hypergraph families and a seeded random generator.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// The single `k`-edge on `k` vertices.
pub fn single_edge(k: usize) -> Hypergraph {
    Hypergraph::new(k, vec![(0..k).collect()]).expect("single edge")
}

/// L_k: vertices are the 2-subsets of `{0..=k}` in lexicographic order, and
/// edge `i` collects the pairs containing `i`.
pub fn l_k(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::Domain(format!("L_k needs k >= 2, got {k}")));
    }
    let mut id = vec![vec![usize::MAX; k + 1]; k + 1];
    let mut next = 0;
    for a in 0..=k {
        for b in a + 1..=k {
            id[a][b] = next;
            id[b][a] = next;
            next += 1;
        }
    }
    let edges = (0..=k).map(|i| (0..=k).filter(|&j| j != i).map(|j| id[i][j]).collect());
    Hypergraph::new(next, edges)
}

/// Member `i` of the Δ ≤ 2 extremal family: start from one 4-edge and
/// repeatedly hang three new 4-edges off the lowest-id vertex of degree at
/// most 1 through a linking edge.
pub fn family_f(i: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = vec![vec![0, 1, 2, 3]];
    let mut n = 4;
    for _ in 0..i {
        let mut deg = vec![0; n];
        for e in &edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        let anchor = (0..n).find(|&v| deg[v] <= 1).expect("a vertex of degree at most 1");
        let mut link = vec![anchor];
        for j in 0..3 {
            let start = n + 4 * j;
            edges.push((start..start + 4).collect());
            link.push(start);
        }
        edges.push(link);
        n += 12;
    }
    Hypergraph::new(n, edges).expect("family member")
}

/// Randomized greedy `k`-uniform linear hypergraph with maximum degree at
/// most `max_deg`. Stops at `m_target` edges or when the retry budget runs
/// out, returning what it has.
pub fn random_linear(n: usize, k: usize, max_deg: usize, m_target: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || k > n || k * m_target > max_deg * n {
        return Err(Error::Domain(format!(
            "infeasible parameters n={n} k={k} max_deg={max_deg} m={m_target}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0; n];
    let mut pairs = HashSet::new();
    let mut edges = Vec::new();
    let budget = 200 * m_target + 1000;
    for _ in 0..budget {
        if edges.len() == m_target {
            break;
        }
        let mut e = sample(&mut rng, n, k).into_vec();
        e.sort_unstable();
        if e.iter().any(|&v| deg[v] >= max_deg) {
            continue;
        }
        let new_pairs: Vec<(usize, usize)> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        if new_pairs.iter().any(|p| pairs.contains(p)) {
            continue;
        }
        pairs.extend(new_pairs);
        for &v in &e {
            deg[v] += 1;
        }
        edges.push(e);
    }
    Hypergraph::new(n, edges)
}
