//! Plain-text edge lists.
//!
//! ```text
//! bipartite <nL> <nR> <m>      graph <n> <m>
//! e <u> <v>                    e <u> <v>
//! ```
//!
//! Bipartite edges are `(left index, right index)`. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Adjacency, BipartiteGraph, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Bipartite(BipartiteGraph),
    General(Graph),
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn num(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected an integer, got `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<AnyGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (kind, sizes) = match header.as_slice() {
        ["bipartite", a, b, m] => ("bipartite", vec![num(hl, a)?, num(hl, b)?, num(hl, m)?]),
        ["graph", a, m] => ("graph", vec![num(hl, a)?, num(hl, m)?]),
        _ => return Err(syntax(hl, "expected `bipartite nL nR m` or `graph n m`")),
    };
    let mut edges = Vec::new();
    for (ln, toks) in lines {
        match toks.as_slice() {
            ["e", u, v] => edges.push((num(ln, u)?, num(ln, v)?)),
            _ => return Err(syntax(ln, "expected `e u v`")),
        }
    }
    let expected = *sizes.last().unwrap();
    if edges.len() != expected {
        return Err(FormatError::EdgeCount { expected, found: edges.len() });
    }
    Ok(if kind == "bipartite" {
        AnyGraph::Bipartite(BipartiteGraph::new(sizes[0], sizes[1], edges)?)
    } else {
        AnyGraph::General(Graph::new(sizes[0], edges)?)
    })
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, FormatError> {
    match parse_graph(text)? {
        AnyGraph::Bipartite(g) => Ok(g),
        AnyGraph::General(_) => Err(syntax(1, "expected a bipartite graph")),
    }
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut s = format!("bipartite {} {} {}\n", g.n_left(), g.n_right(), g.edge_count());
    for (a, b) in g.edges() {
        writeln!(s, "e {a} {b}").unwrap();
    }
    s
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = BipartiteGraph::new(2, 3, [(0, 2), (1, 0)]).unwrap();
        let text = write_bipartite(&g);
        assert_eq!(text, "bipartite 2 3 2\ne 0 2\ne 1 0\n");
        assert_eq!(parse_bipartite(&text).unwrap(), g);
        let h = Graph::new(3, [(2, 0)]).unwrap();
        assert_eq!(parse_graph(&write_graph(&h)).unwrap(), AnyGraph::General(h));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_graph("bipartite 2 2 2\ne 0 0\ne 0 0\n"),
            Err(FormatError::Graph(GraphError::DuplicateEdge(0, 0)))
        ));
        assert!(matches!(
            parse_graph("bipartite 2 2 1\ne 0 5\n"),
            Err(FormatError::Graph(GraphError::OutOfRange { .. }))
        ));
        assert_eq!(
            parse_graph("graph 3 2\ne 0 1\n"),
            Err(FormatError::EdgeCount { expected: 2, found: 1 })
        );
        assert!(matches!(parse_graph("nonsense"), Err(FormatError::Syntax { .. })));
        assert_eq!(parse_graph("# only a comment\n"), Err(FormatError::MissingHeader));
    }
}
