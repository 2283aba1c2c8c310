//! Edge-list and DIMACS-style text formats.
//!
//! Edge-list: one edge per line as two whitespace-separated 0-based ids; lines
//! starting with `#` and blank lines are ignored. The vertex count is
//! `max id + 1`, unless a `# vertices <n>` comment raises it (the serializer
//! writes one so trailing isolated vertices survive a round trip).
//!
//! DIMACS: a `p edge <n> <m>` header followed by `e <u> <v>` lines with 1-based
//! ids; `c` lines are comments.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            let _ = writeln!(out, "# vertices {}", g.vertex_count());
            for e in g.edges() {
                let _ = writeln!(out, "{} {}", e.u, e.v);
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
            for e in g.edges() {
                let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
            }
        }
    }
    out
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found '{token}'"),
    })
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut declared = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if let (Some("vertices"), Some(n), None) = (words.next(), words.next(), words.next()) {
                declared = parse_id(n, line)?;
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex ids, found {} tokens", tokens.len()),
            });
        }
        let (a, b) = (parse_id(tokens[0], line)?, parse_id(tokens[1], line)?);
        if a == b {
            return Err(Error::SelfLoop { vertex: a });
        }
        edges.push((a, b));
    }
    let n = edges
        .iter()
        .map(|&(a, b)| a.max(b) + 1)
        .max()
        .unwrap_or(0)
        .max(declared);
    Graph::from_edges(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", "edge" | "col", n, m] => {
                if graph.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                parse_id(m, line)?;
                graph = Some(Graph::empty(parse_id(n, line)?));
            }
            ["e", a, b] => {
                let g = graph.as_mut().ok_or_else(|| Error::Parse {
                    line,
                    message: "edge line before the problem line".into(),
                })?;
                let (a, b) = (parse_id(a, line)?, parse_id(b, line)?);
                for x in [a, b] {
                    if x == 0 || x > g.vertex_count() {
                        return Err(Error::Range {
                            vertex: x,
                            vertex_count: g.vertex_count(),
                        });
                    }
                }
                if a == b {
                    return Err(Error::SelfLoop { vertex: a - 1 });
                }
                g.add_edge(a - 1, b - 1)?;
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("unrecognized line '{}'", raw.trim()),
                })
            }
        }
    }
    graph.ok_or(Error::Parse {
        line: 0,
        message: "missing 'p edge <n> <m>' line".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_path() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn edge_list_triangle() {
        let g = parse_graph("0 1\n1 2\n0 2", Format::EdgeList).unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn edge_list_self_loop_is_rejected() {
        assert_eq!(
            parse_graph("0 0", Format::EdgeList),
            Err(Error::SelfLoop { vertex: 0 })
        );
    }

    #[test]
    fn duplicates_and_comments() {
        let g = parse_graph("# hello\n\n0 1\n1 0\n  # indented\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!(g, Graph::complete(2));
        let g = parse_graph("c x\np edge 2 2\ne 1 2\ne 2 1\n", Format::Dimacs).unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        assert!(matches!(
            parse_graph("0 1\n1 x\n", Format::EdgeList),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2\n", Format::EdgeList),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\nf 1 2\n", Format::Dimacs),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("e 1 2\n", Format::Dimacs),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn dimacs_range_and_loops() {
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n", Format::Dimacs),
            Err(Error::Range { vertex: 3, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 0 1\n", Format::Dimacs),
            Err(Error::Range { vertex: 0, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 2 2\n", Format::Dimacs),
            Err(Error::SelfLoop { vertex: 1 })
        ));
    }

    #[test]
    fn isolated_vertices_survive() {
        let g = parse_graph("p edge 4 1\ne 1 2\n", Format::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 4);
        for format in [Format::EdgeList, Format::Dimacs] {
            let back = parse_graph(&serialize_graph(&g, format), format).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn serialization_is_sorted() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(
            serialize_graph(&g, Format::EdgeList),
            "# vertices 3\n0 1\n1 2\n"
        );
        assert_eq!(
            serialize_graph(&g, Format::Dimacs),
            "p edge 3 2\ne 1 2\ne 2 3\n"
        );
    }
}
