//! Graph text formats: an `n m` header followed by `m` edge lines, or a
//! single graph6 line. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graph6;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let Some((first_line, first)) = lines.next() else {
        return Err(Error::parse(1, "no graph found"));
    };
    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() == 1 && header[0].parse::<usize>().is_err() {
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "unexpected content after graph6 string"));
        }
        return graph6::decode_line(first, first_line);
    }
    if header.len() != 2 {
        return Err(Error::parse(first_line, "expected header `n m`"));
    }
    let n = parse_usize(header[0], first_line, "vertex count")?;
    let m = parse_usize(header[1], first_line, "edge count")?;
    let mut g = SimpleGraph::empty(n)?;
    let mut count = 0;
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line, "expected edge `u v`"));
        }
        let u = parse_usize(tokens[0], line, "vertex")?;
        let v = parse_usize(tokens[1], line, "vertex")?;
        if u == 0 || u > n || v == 0 || v > n {
            return Err(Error::parse(line, format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(first_line, format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

/// One graph6 string per content line.
pub fn parse_graph6_list(text: &str) -> Result<Vec<SimpleGraph>> {
    content_lines(text).map(|(line, l)| graph6::decode_line(l, line)).collect()
}
