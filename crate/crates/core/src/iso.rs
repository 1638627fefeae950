//! Isomorphism tests by colour refinement plus backtracking.
//!
//! Hypergraphs are compared through their incidence structure with the vertex
//! side and the edge side coloured apart, so repeated edges are handled as a
//! multiset.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

struct Coloured {
    adj: Vec<Vec<usize>>,
    colour: Vec<usize>,
}

impl Coloured {
    fn from_graph(g: &Graph) -> Self {
        Coloured { adj: g.adjacency(), colour: vec![0; g.n()] }
    }

    fn from_hypergraph(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut adj = vec![Vec::new(); n + h.m()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                adj[v].push(n + i);
                adj[n + i].push(v);
            }
        }
        let colour = (0..n + h.m()).map(|x| usize::from(x >= n)).collect();
        Coloured { adj, colour }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }
}

/// Refines both colourings together so colour ids are comparable. Returns
/// false as soon as the colour histograms differ.
fn refine(a: &mut Coloured, b: &mut Coloured) -> bool {
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut recolour = |g: &Coloured| -> Vec<usize> {
            (0..g.len())
                .map(|v| {
                    let mut sig: Vec<usize> = g.adj[v].iter().map(|&w| g.colour[w]).collect();
                    sig.sort_unstable();
                    let key = (g.colour[v], sig);
                    let next = palette.len();
                    *palette.entry(key).or_insert(next)
                })
                .collect()
        };
        let ca = recolour(a);
        let cb = recolour(b);
        if histogram(&ca) != histogram(&cb) {
            return false;
        }
        let before = distinct(&a.colour);
        a.colour = ca;
        b.colour = cb;
        if distinct(&a.colour) == before {
            return true;
        }
    }
}

fn histogram(c: &[usize]) -> Vec<(usize, usize)> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for &x in c {
        *map.entry(x).or_default() += 1;
    }
    let mut h: Vec<_> = map.into_iter().collect();
    h.sort_unstable();
    h
}

fn distinct(c: &[usize]) -> usize {
    histogram(c).len()
}

fn isomorphic(mut a: Coloured, mut b: Coloured) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ca = a.colour.clone();
    let mut cb = b.colour.clone();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb || !refine(&mut a, &mut b) {
        return false;
    }
    // Map the most constrained (smallest colour class) vertices first.
    let hist: HashMap<usize, usize> = histogram(&a.colour).into_iter().collect();
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&v| (hist[&a.colour[v]], a.colour[v], v));
    let adj_b: Vec<std::collections::HashSet<usize>> =
        b.adj.iter().map(|l| l.iter().copied().collect()).collect();
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; a.len()];
    search(&a, &b, &adj_b, &order, 0, &mut map, &mut used)
}

fn search(
    a: &Coloured,
    b: &Coloured,
    adj_b: &[std::collections::HashSet<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.len() {
        if used[w] || b.colour[w] != a.colour[v] {
            continue;
        }
        // Adjacency to already mapped vertices must agree both ways; counts
        // match because colour refinement fixed the degrees.
        let mapped_nbrs = a.adj[v].iter().filter(|&&x| map[x] != usize::MAX);
        let mut ok = true;
        let mut count = 0;
        for &x in mapped_nbrs {
            count += 1;
            if !adj_b[w].contains(&map[x]) {
                ok = false;
                break;
            }
        }
        if !ok || b.adj[w].iter().filter(|&&y| used[y]).count() != count {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if search(a, b, adj_b, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

pub fn hypergraph_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> bool {
    h1.n() == h2.n()
        && h1.m() == h2.m()
        && isomorphic(Coloured::from_hypergraph(h1), Coloured::from_hypergraph(h2))
}

pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.m() == g2.m()
        && isomorphic(Coloured::from_graph(g1), Coloured::from_graph(g2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permuted_edge_is_isomorphic() {
        let a = Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let b = Hypergraph::new(4, vec![vec![3, 1, 0, 2]]).unwrap();
        assert!(hypergraph_isomorphic(&a, &b));
    }

    #[test]
    fn cycles_versus_triangles() {
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!graph_isomorphic(&c6, &two_triangles));
        let relabelled = Graph::new(6, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)]).unwrap();
        assert!(graph_isomorphic(&c6, &relabelled));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // Two 3-regular graphs on 8 vertices that refinement cannot split.
        let cube = Graph::new(
            8,
            [(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let mobius = Graph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4)))).unwrap();
        assert!(!graph_isomorphic(&cube, &mobius));
        assert!(graph_isomorphic(&cube, &cube.clone()));
    }

    #[test]
    fn repeated_edges_count() {
        let once = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let twice = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!hypergraph_isomorphic(&once, &twice));
    }
}
