//! DIMACS `.col` reader and writer.
//!
//! Accepted input: `c` comment lines, exactly one `p edge <n> <m>` header,
//! then `e <u> <v>` lines with 1-based endpoints. Blank lines are ignored.
//! The header's edge count is informational; duplicate edges are merged.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::{Graph, DEFAULT_VERTEX_CAP, MAX_VERTICES};

/// Parses DIMACS text with the default vertex cap.
pub fn from_dimacs(text: &str) -> Result<Graph, GraphError> {
    from_dimacs_with_cap(text, DEFAULT_VERTEX_CAP)
}

/// Parses DIMACS text, rejecting graphs with more than `cap` vertices.
pub fn from_dimacs_with_cap(text: &str, cap: usize) -> Result<Graph, GraphError> {
    let cap = cap.min(MAX_VERTICES);
    let mut graph: Option<Graph> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut tokens = line.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if graph.is_some() {
                    return Err(GraphError::DuplicateHeader { line: line_no });
                }
                let format = tokens.next();
                if format != Some("edge") {
                    return Err(parse_err(line_no, "expected `p edge <n> <m>`"));
                }
                let n = parse_count(tokens.next(), line_no, "vertex count")?;
                parse_count(tokens.next(), line_no, "edge count")?;
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens after header"));
                }
                if n > cap {
                    return Err(GraphError::TooManyVertices { n, cap });
                }
                graph = Some(Graph::empty(n)?);
            }
            "e" => {
                let g = graph.as_mut().ok_or(GraphError::MissingHeader)?;
                let u = parse_count(tokens.next(), line_no, "edge endpoint")?;
                let v = parse_count(tokens.next(), line_no, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens after edge"));
                }
                let n = g.n();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(GraphError::EndpointOutOfRange { vertex: x, n });
                    }
                }
                g.add_edge(u - 1, v - 1)?;
            }
            other => {
                return Err(parse_err(line_no, &format!("unknown line type `{other}`")));
            }
        }
    }

    graph.ok_or(GraphError::MissingHeader)
}

/// Writes `p edge n m` followed by `e u v` lines sorted by `(u, v)`, 1-based.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, &format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, &format!("invalid {what} `{tok}`")))
}

fn parse_err(line: usize, message: &str) -> GraphError {
    GraphError::Parse {
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let g = from_dimacs("p edge 3 3\ne 1 2\ne 1 3\ne 2 3").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
    }

    #[test]
    fn isolated_vertices() {
        let g = from_dimacs("p edge 2 0").unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));
    }

    #[test]
    fn duplicate_edge_merged() {
        let g = from_dimacs("p edge 3 2\ne 1 2\ne 1 2").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = from_dimacs("c hello\n\nc more\np edge 2 1\n  \ne 2 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(from_dimacs("c nothing"), Err(GraphError::MissingHeader));
        assert_eq!(from_dimacs("e 1 2"), Err(GraphError::MissingHeader));
        assert_eq!(
            from_dimacs("p edge 2 0\np edge 2 0"),
            Err(GraphError::DuplicateHeader { line: 2 })
        );
        assert_eq!(
            from_dimacs("p edge 2 1\ne 1 3"),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            from_dimacs("p edge 2 1\ne 0 1"),
            Err(GraphError::EndpointOutOfRange { vertex: 0, n: 2 })
        );
        assert_eq!(
            from_dimacs("p edge 2 1\ne 1 1"),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            from_dimacs("p edge 33 0"),
            Err(GraphError::TooManyVertices { n: 33, cap: 32 })
        );
        assert!(from_dimacs_with_cap("p edge 33 0", 64).is_ok());
        assert!(matches!(
            from_dimacs("p col 3 0"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            from_dimacs("p edge x 0"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            from_dimacs("p edge 3 0\nx 1 2"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::from_edges(3, [(2, 1), (0, 2)]).unwrap();
        assert_eq!(to_dimacs(&g), "p edge 3 2\ne 1 3\ne 2 3\n");
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(20)) {
            let h = from_dimacs(&to_dimacs(&g)).unwrap();
            prop_assert_eq!(h.n(), g.n());
            for v in 0..g.n() {
                prop_assert_eq!(h.closed_nbhd(v), g.closed_nbhd(v));
            }
        }
    }
}
