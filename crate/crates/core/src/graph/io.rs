//! Canonical edge-list text format and DOT output.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u, v < n)
//! ```
//!
//! Serialization writes every edge once as `u v` with `u < v`, sorted
//! lexicographically, so equal graphs always produce identical text.

use std::fmt::Write;

use super::{Graph, GraphError};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("invalid {what} `{tok}`")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

/// Parses the canonical edge-list format. Blank lines are ignored; duplicate
/// edge lines collapse into one edge. Errors name the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let (n, m) = two_numbers(header_no, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines.by_ref() {
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(
                line_no,
                format!("node id out of range (n = {n})"),
            ));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop on node {u}")));
        }
        edges.push((u, v));
        if edges.len() == m {
            break;
        }
    }
    if edges.len() < m {
        return Err(parse_err(
            header_no,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "more edge lines than announced"));
    }
    Ok(Graph::from_valid_edges(n, edges))
}

impl Graph {
    /// Canonical edge-list text (trailing newline included).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.node_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Graphviz rendering with node ids as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.nodes() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn parses_isolated_node() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_self_loop_with_line() {
        let err = parse_edge_list("2 1\n0 0").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 2,
                msg: "self-loop on node 0".into()
            }
        );
    }

    #[test]
    fn rejects_malformed_and_out_of_range() {
        assert!(matches!(
            parse_edge_list("3 1\n0 x"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 3"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn duplicate_lines_collapse() {
        let g = parse_edge_list("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.to_edge_list(), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn dot_output() {
        let g = parse_edge_list("2 1\n1 0").unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..12, raw in prop::collection::vec((0usize..12, 0usize..12), 0..40)) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let text = g.to_edge_list();
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_edge_list(), text);
        }
    }
}
