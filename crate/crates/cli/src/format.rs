//! Text formats: edge-list graphs, DIMACS CNF and coloured edge lists.
//!
//! Graph files start with a header line `n m` followed by `m` lines `u v`
//! with `1 <= u < v <= n`. Lines starting with `#` and blank lines are
//! ignored anywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use locdom::colour::ColourGraph;
use locdom::generators::{CnfInstance, Literal};
use locdom::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Structure(String),
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        msg: msg.into(),
    }
}

/// Numbered lines that carry content.
fn content_lines<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N], ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(at(
            line,
            format!("expected {N} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0usize; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| at(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::Structure("missing `n m` header".into()))?;
    let [n, m] = numbers::<2>(hl, header)?;
    let mut seen = BTreeSet::new();
    for (line, body) in lines {
        let [u, v] = numbers::<2>(line, body)?;
        if u == v {
            return Err(at(line, format!("self-loop at {u}")));
        }
        if u > v {
            return Err(at(
                line,
                format!("edge {u} {v} must be written smaller endpoint first"),
            ));
        }
        if u == 0 || v > n {
            return Err(at(line, format!("edge {u} {v} outside 1..={n}")));
        }
        if !seen.insert((u, v)) {
            return Err(at(line, format!("duplicate edge {u} {v}")));
        }
    }
    if seen.len() != m {
        return Err(ParseError::Structure(format!(
            "header promises {m} edges, found {}",
            seen.len()
        )));
    }
    Graph::new(n, seen).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// DIMACS CNF with exactly three literals per clause. Clauses may span lines
/// and are terminated by `0`.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance, ParseError> {
    let mut header = None;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut pending: Vec<i64> = Vec::new();
    for (line, body) in content_lines(text, "c") {
        if body.starts_with('%') {
            break;
        }
        if let Some(rest) = body.strip_prefix('p') {
            if header.is_some() {
                return Err(at(line, "second `p` line"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.first() != Some(&"cnf") {
                return Err(at(line, "expected `p cnf <vars> <clauses>`"));
            }
            header = Some((line, numbers::<2>(line, &fields[1..].join(" "))?));
            continue;
        }
        if header.is_none() {
            return Err(at(line, "clause before `p cnf` header"));
        }
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| at(line, format!("`{tok}` is not a literal")))?;
            if lit != 0 {
                pending.push(lit);
                continue;
            }
            let clause: [i64; 3] = pending.as_slice().try_into().map_err(|_| {
                at(
                    line,
                    format!("clause has {} literals, exactly 3 required", pending.len()),
                )
            })?;
            clauses.push(clause);
            pending.clear();
        }
    }
    let (line, [vars, m]) =
        header.ok_or_else(|| ParseError::Structure("missing `p cnf` header".into()))?;
    if !pending.is_empty() {
        return Err(ParseError::Structure(
            "last clause is not terminated by 0".into(),
        ));
    }
    if clauses.len() != m {
        return Err(at(
            line,
            format!("header promises {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfInstance::from_dimacs(vars, &clauses).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn write_dimacs(f: &CnfInstance) -> String {
    let mut out = format!("p cnf {} {}\n", f.vars(), f.clauses().len());
    for clause in f.clauses() {
        let [a, b, c] = clause.map(Literal::to_dimacs);
        writeln!(out, "{a} {b} {c} 0").unwrap();
    }
    out
}

/// One `x y colour=u` line per edge; the auxiliary vertex is `0`.
pub fn write_colour_graph(cg: &ColourGraph) -> String {
    let mut out = String::new();
    for e in cg.edges() {
        writeln!(out, "{} {} colour={}", e.x, e.y, e.colour).unwrap();
    }
    out
}

/// A comma-separated vertex list such as `2,4,7,9`.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>, ParseError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| ParseError::Structure(format!("`{t}` is not a vertex label")))
        })
        .collect()
}
