//! Affine and projective planes over GF(q).

use crate::algebra::field::FiniteField;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// AG(2, q). Point `(x, y)` has id `x * q + y`; lines are `y = mx + b` and the
/// verticals `x = c`.
pub fn affine_plane(q: u64) -> Result<Hypergraph> {
    let f = FiniteField::new(q)?;
    let q = f.order();
    let point = |x: usize, y: usize| x * q + y;
    let mut lines = Vec::with_capacity(q * q + q);
    for m in 0..q {
        for b in 0..q {
            lines.push((0..q).map(|x| point(x, f.add(f.mul(m, x), b))).collect());
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| point(c, y)).collect());
    }
    Hypergraph::new(q * q, lines)
}

/// PG(2, q). Points are the non-zero vectors of GF(q)^3 whose first non-zero
/// coordinate is 1, numbered in lexicographic order of coordinates; the line
/// with normal `u` holds the points orthogonal to `u`.
pub fn projective_plane(q: u64) -> Result<Hypergraph> {
    let f = FiniteField::new(q)?;
    let q = f.order();
    let mut points: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    let dot = |u: &[usize; 3], v: &[usize; 3]| {
        (0..3).fold(0, |acc, i| f.add(acc, f.mul(u[i], v[i])))
    };
    let lines = points.iter().map(|u| {
        points.iter().enumerate().filter(|(_, v)| dot(u, v) == 0).map(|(i, _)| i).collect()
    });
    Hypergraph::new(points.len(), lines)
}

/// `AG(2, q) - X` where `X` is the first `s` points of the lexicographically
/// first line.
pub fn affine_residual(q: u64, s: usize) -> Result<Hypergraph> {
    if s < 1 || s as u64 > q {
        return Err(Error::Domain(format!("s = {s} must lie in 1..={q}")));
    }
    let plane = affine_plane(q)?;
    let first = plane.edge(0).to_vec();
    Ok(plane.delete_vertices(&first[..s]))
}

/// Complement of the Fano plane: 4-uniform, 7 vertices, 7 edges, not linear.
pub fn fano_complement() -> Hypergraph {
    projective_plane(2).and_then(|h| h.complement()).expect("Fano plane complement")
}

/// Incidence graph of the Fano plane.
pub fn heawood() -> Graph {
    projective_plane(2).expect("Fano plane").incidence_graph()
}

/// Incidence graph of AG(2, 4) with one point removed: 30 vertices, 4-regular.
pub fn g30() -> Graph {
    affine_residual(4, 1).expect("AG(2,4) minus a point").incidence_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::intersection_size;

    #[test]
    fn affine_parameters() {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let h = affine_plane(q).unwrap();
            let q = q as usize;
            assert_eq!((h.n(), h.m()), (q * q, q * q + q));
            assert!(h.is_uniform(q));
            assert!(h.is_regular(q + 1));
            assert!(h.is_linear());
        }
    }

    #[test]
    fn every_point_pair_on_exactly_one_line() {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let h = affine_plane(q).unwrap();
            let mut count = vec![0u8; h.n() * h.n()];
            for e in h.edges() {
                for (i, &a) in e.iter().enumerate() {
                    for &b in &e[i + 1..] {
                        count[a * h.n() + b] += 1;
                    }
                }
            }
            for a in 0..h.n() {
                for b in a + 1..h.n() {
                    assert_eq!(count[a * h.n() + b], 1, "q = {q}, points {a} {b}");
                }
            }
        }
    }

    #[test]
    fn parallel_classes() {
        for q in [3u64, 4, 5] {
            let h = affine_plane(q).unwrap();
            let q = q as usize;
            // Parallelism (disjoint or equal) is an equivalence relation.
            let mut class = vec![usize::MAX; h.m()];
            let mut classes = 0;
            for i in 0..h.m() {
                if class[i] != usize::MAX {
                    continue;
                }
                let members: Vec<usize> =
                    (i..h.m()).filter(|&j| j == i || intersection_size(h.edge(i), h.edge(j)) == 0).collect();
                assert_eq!(members.len(), q);
                for &j in &members {
                    class[j] = classes;
                }
                classes += 1;
            }
            assert_eq!(classes, q + 1);
        }
    }

    #[test]
    fn projective_lines_meet_once() {
        for q in [2u64, 3, 4, 5] {
            let h = projective_plane(q).unwrap();
            let q = q as usize;
            assert_eq!((h.n(), h.m()), (q * q + q + 1, q * q + q + 1));
            assert!(h.is_uniform(q + 1) && h.is_regular(q + 1));
            for i in 0..h.m() {
                for j in i + 1..h.m() {
                    assert_eq!(intersection_size(h.edge(i), h.edge(j)), 1);
                }
            }
        }
    }

    #[test]
    fn residual_counts() {
        for s in 1..=4 {
            let h = affine_residual(4, s).unwrap();
            assert_eq!((h.n(), h.m()), (16 - s, 20 - 1 - 4 * s));
        }
        assert!(affine_residual(4, 0).is_err());
        assert!(affine_residual(4, 5).is_err());
    }

    #[test]
    fn fano_complement_not_linear() {
        let h = fano_complement();
        assert!(h.is_uniform(4));
        assert!(!h.is_linear());
        for i in 0..7 {
            for j in i + 1..7 {
                assert_eq!(intersection_size(h.edge(i), h.edge(j)), 2);
            }
        }
        assert_eq!(h.complement().unwrap(), projective_plane(2).unwrap());
    }

    #[test]
    fn named_graphs() {
        let h = heawood();
        assert_eq!(h.n(), 14);
        assert!(h.is_regular(3));
        assert_eq!(h.girth(), Some(6));
        let g = g30();
        assert_eq!(g.n(), 30);
        assert!(g.is_regular(4));
        assert!(g.is_c4_free());
    }
}
