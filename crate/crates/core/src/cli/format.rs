//! Text formats.
//!
//! Edge list: first non-comment line `n m`, then exactly `m` lines `u v [w]`.
//! Tokens are whitespace-separated, lines starting with `#` and blank lines
//! are ignored, and a missing weight means 1.
//!
//! Class file: one class label per vertex, whitespace-separated, in vertex
//! order. Labels are 0-based and every label in `0..r` must be used.

use crate::error::{Error, Result};
use crate::graph::{Classes, Graph, RawEdge};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not a valid {what}") })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse { line: hline, msg: "header must be `n m`".into() });
    }
    let n: usize = parse_token(toks[0], hline, "vertex count")?;
    let declared: usize = parse_token(toks[1], hline, "edge count")?;

    let mut raw: Vec<RawEdge> = Vec::with_capacity(declared);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let (u, v, w) = match toks.as_slice() {
            [u, v] => (u, v, None),
            [u, v, w] => (u, v, Some(parse_token::<f64>(w, line, "weight")?)),
            _ => return Err(Error::Parse { line, msg: "expected `u v [w]`".into() }),
        };
        raw.push((parse_token(u, line, "vertex")?, parse_token(v, line, "vertex")?, w));
    }
    if raw.len() != declared {
        return Err(Error::EdgeCountMismatch { declared, found: raw.len() });
    }
    Graph::build(n, &raw)
}

pub fn parse_classes(text: &str) -> Result<Classes> {
    let mut labels = Vec::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            labels.push(parse_token::<usize>(tok, line, "class label")?);
        }
    }
    Classes::from_labels(labels)
}
