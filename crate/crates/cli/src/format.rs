//! Plain-text instance and solution formats.
//!
//! ```text
//! # comment lines anywhere
//! tree 3
//! node 1 2
//! node 2 1
//! node 3 3
//! edge 1 2
//! edge 2 3
//! ```
//!
//! Headers are `tree <n>`, `dtree <n>` (nodes carry `<w-> <w+>`) and
//! `graph <n> <m>`. Tokens are separated by single spaces, lines end in LF.

use std::fmt::Write as _;

use safeset_core::graph::{DualWeights, Graph, SimpleGraph, Vertex, VertexSet, Weight, WeightedTree};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Tree(WeightedTree),
    /// The tree's own weights are w⁻.
    DualTree(WeightedTree, DualWeights),
    Graph(SimpleGraph, Vec<Weight>),
}

impl Instance {
    pub fn order(&self) -> usize {
        match self {
            Instance::Tree(t) | Instance::DualTree(t, _) => t.order(),
            Instance::Graph(g, _) => g.order(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Tree(_) => "tree",
            Instance::DualTree(..) => "dtree",
            Instance::Graph(..) => "graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub reason: String,
}

struct Line<'a> {
    no: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn err<T>(line: usize, col: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        reason: reason.into(),
    })
}

fn tokenize(no: usize, text: &str) -> Result<Line<'_>, ParseError> {
    let mut tokens = Vec::new();
    let mut col = 1;
    for tok in text.split(' ') {
        if tok.is_empty() {
            return err(no, col, "tokens must be separated by single spaces");
        }
        tokens.push((col, tok));
        col += tok.chars().count() + 1;
    }
    Ok(Line { no, tokens })
}

fn number<T: std::str::FromStr>(line: &Line, idx: usize, what: &str) -> Result<T, ParseError> {
    let Some(&(col, tok)) = line.tokens.get(idx) else {
        let end = line.tokens.last().map_or(1, |(c, t)| c + t.len() + 1);
        return err(line.no, end, format!("missing {what}"));
    };
    if tok.starts_with('-') {
        return err(line.no, col, format!("{what} must be non-negative, got {tok}"));
    }
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return err(line.no, col, format!("{what} must be an integer, got {tok:?}"));
    }
    tok.parse()
        .or_else(|_| err(line.no, col, format!("{what} out of range: {tok}")))
}

fn expect_len(line: &Line, len: usize, shape: &str) -> Result<(), ParseError> {
    if line.tokens.len() != len {
        let col = line.tokens.get(len).map_or(1, |t| t.0);
        return err(line.no, col, format!("expected `{shape}`"));
    }
    Ok(())
}

fn expect_keyword(line: &Line, word: &str) -> Result<(), ParseError> {
    if line.tokens[0].1 != word {
        return err(line.no, 1, format!("expected `{word}`, got {:?}", line.tokens[0].1));
    }
    Ok(())
}

/// Parses and validates an instance.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = Vec::new();
    let body = text.strip_suffix('\n').unwrap_or(text);
    for (i, raw) in body.split('\n').enumerate() {
        let no = i + 1;
        if raw.contains('\r') {
            return err(no, raw.find('\r').unwrap() + 1, "CR characters are not allowed; use LF line endings");
        }
        if raw.starts_with('#') {
            continue;
        }
        if raw.is_empty() {
            return err(no, 1, "empty line");
        }
        lines.push(tokenize(no, raw)?);
    }
    let last_line = body.split('\n').count();
    let Some(header) = lines.first() else {
        return err(1, 1, "missing header");
    };
    let kind = header.tokens[0].1;
    let (n, m, dual) = match kind {
        "tree" | "dtree" => {
            expect_len(header, 2, &format!("{kind} <n>"))?;
            let n: usize = number(header, 1, "n")?;
            (n, n.saturating_sub(1), kind == "dtree")
        }
        "graph" => {
            expect_len(header, 3, "graph <n> <m>")?;
            (number(header, 1, "n")?, number(header, 2, "m")?, false)
        }
        other => return err(header.no, 1, format!("unknown header {other:?}")),
    };
    if n == 0 {
        return err(header.no, header.tokens[1].0, "n must be at least 1");
    }

    let mut minus: Vec<Option<Weight>> = vec![None; n + 1];
    let mut plus: Vec<Weight> = vec![0; n + 1];
    let mut rest = lines[1..].iter();
    for _ in 0..n {
        let Some(line) = rest.next() else {
            let missing = (1..=n).find(|&v| minus[v].is_none()).unwrap();
            return err(last_line + 1, 1, format!("missing node {missing}"));
        };
        if line.tokens[0].1 == "edge" {
            let missing = (1..=n).find(|&v| minus[v].is_none()).unwrap();
            return err(line.no, 1, format!("missing node {missing}"));
        }
        expect_keyword(line, "node")?;
        let shape = if dual { "node <id> <w-> <w+>" } else { "node <id> <w>" };
        expect_len(line, if dual { 4 } else { 3 }, shape)?;
        let id: Vertex = number(line, 1, "node id")?;
        if id == 0 || id > n {
            return err(line.no, line.tokens[1].0, format!("node id {id} outside 1..{n}"));
        }
        if minus[id].is_some() {
            return err(line.no, line.tokens[1].0, format!("node {id} listed twice"));
        }
        minus[id] = Some(number(line, 2, "weight")?);
        plus[id] = if dual { number(line, 3, "weight")? } else { minus[id].unwrap() };
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let Some(line) = rest.next() else {
            return err(last_line + 1, 1, format!("expected {m} edges, found {}", edges.len()));
        };
        expect_keyword(line, "edge")?;
        expect_len(line, 3, "edge <u> <v>")?;
        let u: Vertex = number(line, 1, "vertex")?;
        let v: Vertex = number(line, 2, "vertex")?;
        for (idx, x) in [(1, u), (2, v)] {
            if x == 0 || x > n {
                return err(line.no, line.tokens[idx].0, format!("vertex {x} outside 1..{n}"));
            }
        }
        edges.push((u, v));
    }
    if let Some(line) = rest.next() {
        return err(line.no, 1, "unexpected content after the last edge");
    }

    let w: Vec<Weight> = minus[1..].iter().map(|x| x.unwrap()).collect();
    let graph_err = |e: safeset_core::GraphError| ParseError {
        line: header.no,
        col: 1,
        reason: e.to_string(),
    };
    Ok(match kind {
        "graph" => Instance::Graph(SimpleGraph::new(n, &edges).map_err(graph_err)?, w),
        _ => {
            let tree = WeightedTree::new(n, &edges, w.clone()).map_err(graph_err)?;
            if dual {
                let dw = DualWeights::new(n, w, plus[1..].to_vec()).map_err(graph_err)?;
                Instance::DualTree(tree, dw)
            } else {
                Instance::Tree(tree)
            }
        }
    })
}

/// Serializes an instance; `comments` become leading `#` lines.
pub fn write_instance(instance: &Instance, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    match instance {
        Instance::Tree(t) => {
            writeln!(out, "tree {}", t.order()).unwrap();
            for v in 1..=t.order() {
                writeln!(out, "node {v} {}", t.weight(v)).unwrap();
            }
            write_edges(&mut out, t.edge_list());
        }
        Instance::DualTree(t, dw) => {
            writeln!(out, "dtree {}", t.order()).unwrap();
            for v in 1..=t.order() {
                writeln!(out, "node {v} {} {}", dw.minus(v), dw.plus(v)).unwrap();
            }
            write_edges(&mut out, t.edge_list());
        }
        Instance::Graph(g, w) => {
            writeln!(out, "graph {} {}", g.order(), g.edge_count()).unwrap();
            for v in 1..=g.order() {
                writeln!(out, "node {v} {}", w[v - 1]).unwrap();
            }
            write_edges(&mut out, g.edge_list());
        }
    }
    out
}

fn write_edges(out: &mut String, edges: &[(Vertex, Vertex)]) {
    for (u, v) in edges {
        writeln!(out, "edge {u} {v}").unwrap();
    }
}

/// `safeset weight=<W> size=<k> vertices=<id,...>`
pub fn write_solution(set: &VertexSet, weight: Weight) -> String {
    let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("safeset weight={weight} size={} vertices={}", set.len(), ids.join(","))
}
