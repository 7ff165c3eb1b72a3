//! graph6 encoding of simple graphs.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string; `line` is used only for error reporting.
pub fn decode_line(text: &str, line: usize) -> Result<SimpleGraph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(line, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(line, format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::parse(line, "unsupported graph6 size prefix"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = (pairs + 5) / 6;
    if body.len() != expected {
        return Err(Error::parse(
            line,
            format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    SimpleGraph::new(n, &edges).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::parse(line, msg),
        other => other,
    })
}

pub fn decode(text: &str) -> Result<SimpleGraph> {
    decode_line(text, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let g = decode("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert_eq!(encode(&g), "D?{");
        let c3 = SimpleGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(encode(&c3), "Bw");
        assert_eq!(decode("Bw").unwrap(), c3);
        assert_eq!(encode(&SimpleGraph::empty(0).unwrap()), "?");
        assert_eq!(decode(">>graph6<<A_").unwrap().edges(), vec![(1, 2)]);
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode_line("D?", 7), Err(Error::Parse { line: 7, .. })));
        assert!(decode("").is_err());
        assert!(decode("D? {").is_err());
    }
}
