//! graph6 and edge-list reading and writing.

use crate::error::{Error, Result};

use super::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    /// One edge per line as two whitespace-separated vertex indices.
    EdgeList,
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

fn parse_error(line: usize, offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        offset,
        message: message.into(),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut lines = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut endpoints = [0usize; 2];
        let mut count = 0;
        for (offset, token) in tokens_with_offsets(line) {
            if count == 2 {
                return Err(parse_error(line_no, offset, "expected exactly two vertices"));
            }
            endpoints[count] = token
                .parse()
                .map_err(|_| parse_error(line_no, offset, format!("not a vertex index: `{token}`")))?;
            count += 1;
        }
        if count != 2 {
            return Err(parse_error(line_no, raw.len(), "expected exactly two vertices"));
        }
        let [u, v] = endpoints;
        if u == v {
            return Err(Error::Loop {
                line: line_no,
                vertex: u,
            });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
        lines.push(line_no);
    }
    let mut seen = std::collections::HashSet::new();
    for (&(u, v), &line) in edges.iter().zip(&lines) {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
    }
    Graph::from_edges(n, &edges)
}

fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize, tok))
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_error(1, 0, "empty graph6 input"))?;
    let (base, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(line_no, base + i, format!("byte {b} outside graph6 range")));
        }
    }
    let (n, header_len) = match body {
        [] => return Err(parse_error(line_no, base, "missing vertex count")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_error(line_no, base + 2, "truncated vertex count"));
            }
            (big_endian_6(&rest[..6]), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_error(line_no, base + 1, "truncated vertex count"));
            }
            (big_endian_6(&rest[..3]), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let data = &body[header_len..];
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if data.len() != bytes_needed {
        return Err(parse_error(
            line_no,
            base + header_len + data.len().min(bytes_needed),
            format!(
                "expected {bytes_needed} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let bit = |k: usize| ((data[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
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
    // padding bits must be zero
    if (k..bytes_needed * 6).any(bit) {
        return Err(parse_error(
            line_no,
            base + header_len + bytes_needed - 1,
            "non-zero padding bits",
        ));
    }
    Graph::from_edges(n, &edges)
}

fn big_endian_6(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges().into_iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}
