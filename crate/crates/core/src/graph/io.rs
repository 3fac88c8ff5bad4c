//! Edge-list text and graph6 encodings.
//!
//! Edge lists hold one `u v` pair per line (0-based). `#` starts a comment and
//! an optional `n <count>` line fixes the vertex count; without it the count
//! is one past the largest index seen.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse { line, message };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(err(format!("malformed header {content:?}")));
            }
            if declared.is_some() {
                return Err(err("repeated vertex-count header".into()));
            }
            let n = tokens[1]
                .parse()
                .map_err(|_| err(format!("bad vertex count {:?}", tokens[1])))?;
            declared = Some((n, line));
            continue;
        }
        if tokens.len() != 2 {
            return Err(err(format!("expected `u v`, found {content:?}")));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(format!("bad vertex index {t:?}")))
        };
        edges.push((parse(tokens[0])?, parse(tokens[1])?, line));
    }

    let n = match declared {
        Some((n, _)) => n,
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(GraphError::Parse {
                line,
                message: format!("vertex {} out of range (n = {n})", u.max(v)),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::Parse {
                line,
                message: format!("duplicate edge {{{u}, {v}}}"),
            });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("invalid byte {b}")));
    }
    let (n, rest) = decode_size(body)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if rest.len() < byte_count {
        return Err(GraphError::Graph6(format!(
            "truncated: {} data bytes for {n} vertices, need {byte_count}",
            rest.len()
        )));
    }
    if rest.len() > byte_count {
        return Err(GraphError::Graph6(format!(
            "{} trailing bytes after {n}-vertex graph",
            rest.len() - byte_count
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(n, edges))
}

fn decode_size(body: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let truncated = || GraphError::Graph6("truncated vertex count".into());
    let word = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    match body {
        [] => Err(truncated()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(truncated());
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(truncated());
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok((usize::from(b - 63), rest)),
    }
}

/// Encodes a loop-free graph as graph6 (no header, no newline).
pub fn graph6_encode(g: &Graph) -> Result<String, GraphError> {
    if g.has_loops() {
        return Err(GraphError::Graph6("self-loops cannot be encoded".into()));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, value: usize, chunks: usize| {
        for c in (0..chunks).rev() {
            out.push(63 + ((value >> (6 * c)) & 0x3f) as u8);
        }
    };
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_word(&mut out, n, 3);
    } else if n as u64 <= 68_719_476_735 {
        out.extend([126, 126]);
        push_word(&mut out, n, 6);
    } else {
        return Err(GraphError::Graph6(format!(
            "{n} vertices exceeds graph6 range"
        )));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
