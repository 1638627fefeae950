//! The `.hg` text format.
//!
//! ```text
//! c optional comment
//! p hg <n> <m>
//! e <v1> <v2> ...      (1-based, strictly increasing)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Parse { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("second header".into()));
                }
                if fields.next() != Some("hg") {
                    return Err(err("expected `p hg <n> <m>`".into()));
                }
                let nums: Vec<usize> = fields
                    .map(|f| f.parse().map_err(|_| err(format!("bad number `{f}`"))))
                    .collect::<Result<_>>()?;
                let [n, m] = nums[..] else {
                    return Err(err("expected `p hg <n> <m>`".into()));
                };
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge before header".into()))?;
                let mut edge = Vec::new();
                for f in fields {
                    let v: usize = f.parse().map_err(|_| err(format!("bad vertex `{f}`")))?;
                    if v == 0 || v > n {
                        return Err(err(format!("vertex {v} outside 1..={n}")));
                    }
                    if edge.last().is_some_and(|&last| last >= v - 1) {
                        return Err(err("vertex ids must be strictly increasing".into()));
                    }
                    edge.push(v - 1);
                }
                if edge.is_empty() {
                    return Err(err("empty edge".into()));
                }
                edges.push(edge);
            }
            Some(tok) => return Err(err(format!("unknown line type `{tok}`"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::new(n, edges)
}

pub fn write(h: &Hypergraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(out, "p hg {} {}", h.n(), h.m());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

/// Incidence structure in Graphviz DOT: vertex nodes `v1..`, edge nodes
/// `e1..`.
pub fn to_dot(h: &Hypergraph) -> String {
    let mut out = String::from("graph H {\n  node [shape=circle];\n");
    for v in 0..h.n() {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v + 1, v + 1);
    }
    for (i, e) in h.edges().iter().enumerate() {
        let _ = writeln!(out, "  e{} [shape=box, label=\"e{}\"];", i + 1, i + 1);
        for v in e {
            let _ = writeln!(out, "  e{} -- v{};", i + 1, v + 1);
        }
    }
    out.push_str("}\n");
    out
}

pub fn read_file(path: &std::path::Path) -> anyhow::Result<Hypergraph> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let text = write(&h, Some("two triples"));
        assert!(text.starts_with("c two triples\np hg 5 2\ne 1 2 3\n"));
        assert_eq!(parse(&text).unwrap(), h);
    }

    #[test]
    fn dot_lists_incidences() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let dot = to_dot(&h);
        assert!(dot.contains("e1 -- v1;") && dot.contains("e1 -- v2;"));
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse("p hg 3 1\ne 1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("p hg 3 1\ne 2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("p hg 3 1\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("p hg 3 2\ne 1 2\n"), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(parse("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
    }
}
