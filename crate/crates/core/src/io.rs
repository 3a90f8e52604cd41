//! Text formats: edge lists, rotation files, coloring files and DOT export.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v`.
//! Rotation file: line `v` lists the neighbors of `v` in cyclic order.
//! Coloring file: lines `vertex color`.
//! Lines starting with `#` are comments everywhere; blank lines are skipped.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{parse_err, Result};
use crate::graph::Graph;
use crate::plane::PlaneGraph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usizes(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = parse_usizes(hline, header)?;
    let [n, m] = nums[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        match parse_usizes(line_no, line)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(parse_err(line_no, "edge line must be `u v`")),
        }
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a rotation file for `g`. Every vertex needs a line; an isolated
/// vertex's line is `-`.
pub fn parse_rotation(g: &Graph, text: &str) -> Result<PlaneGraph> {
    let mut rotation = Vec::with_capacity(g.n());
    for (line_no, line) in content_lines(text) {
        if line == "-" {
            rotation.push(Vec::new());
        } else {
            rotation.push(parse_usizes(line_no, line)?);
        }
    }
    PlaneGraph::new(g.clone(), rotation)
}

pub fn write_rotation(pg: &PlaneGraph) -> String {
    let mut out = String::new();
    for rot in pg.rotation() {
        if rot.is_empty() {
            out.push_str("-\n");
        } else {
            let line: Vec<String> = rot.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Reads a coloring of an `n`-vertex graph; it must be total.
pub fn parse_coloring(n: usize, text: &str) -> Result<Coloring> {
    let mut pairs = Vec::new();
    for (line_no, line) in content_lines(text) {
        match parse_usizes(line_no, line)?[..] {
            [v, c] => pairs.push((v, c)),
            _ => return Err(parse_err(line_no, "coloring line must be `vertex color`")),
        }
    }
    Coloring::from_pairs(n, &pairs)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {color}");
    }
    out
}

const DOT_PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
];

/// Graphviz export; with a coloring, nodes are filled and labelled `v:c`.
pub fn to_dot(g: &Graph, coloring: Option<&Coloring>, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n  node [style=filled, fillcolor=white];\n");
    for v in g.vertices() {
        let mut label = match labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };
        let mut attrs = String::new();
        if let Some(c) = coloring {
            let color = c.color(v);
            let _ = write!(label, " [{color}]");
            let _ = write!(attrs, ", fillcolor=\"{}\"", DOT_PALETTE[(color - 1) % DOT_PALETTE.len()]);
        }
        let _ = writeln!(out, "  {v} [label=\"{label}\"{attrs}];");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_count_mismatch_is_reported() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("2 1\n0 0\n"), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rotation_round_trip() {
        let g = Graph::cycle(5);
        let pg = PlaneGraph::with_sorted_rotation(g.clone()).unwrap();
        let text = write_rotation(&pg);
        assert_eq!(parse_rotation(&g, &text).unwrap(), pg);
    }

    #[test]
    fn coloring_must_be_total() {
        assert!(matches!(
            parse_coloring(3, "0 1\n1 2\n"),
            Err(Error::PartialColoring { expected: 3, got: 2 })
        ));
        let c = parse_coloring(2, "1 2\n0 1\n").unwrap();
        assert_eq!(c.colors(), &[1, 2]);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let g = Graph::cycle(3);
        let c = Coloring::new(vec![1, 2, 3]).unwrap();
        let dot = to_dot(&g, Some(&c), None);
        assert!(dot.contains("0 -- 1;") && dot.contains("0 -- 2;") && dot.contains("1 -- 2;"));
        assert!(dot.contains("label=\"2 [3]\""));
    }
}
