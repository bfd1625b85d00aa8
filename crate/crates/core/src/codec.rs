//! Text encodings: graph6 (one graph per line) and a plain edge list.
//!
//! graph6 stores `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits
//! per byte, most significant bit first, each byte offset by 63. Vertex ids
//! are the 0-based matrix indices, so no label map is needed.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735; // 2^36 - 1

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes a graph as a single graph6 line (without the trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut bits = vec![false; n * n.saturating_sub(1) / 2];
    for &(u, v) in g.edges() {
        // column-major upper triangle: bit index of (u, v), u < v
        bits[v * (v - 1) / 2 + u] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix is accepted;
/// any other header (sparse6, digraph6, ...) is rejected. `line` is the
/// 1-based line number used in diagnostics.
pub fn from_graph6(text: &str, line: usize) -> Result<Graph> {
    let err = |message: String| Error::Parse { line, message };
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    if text.starts_with(">>") {
        return Err(err(
            "unsupported header (only >>graph6<< is accepted)".into()
        ));
    }
    if text.starts_with(':') || text.starts_with(';') {
        return Err(err("sparse6 input is not supported".into()));
    }
    if text.starts_with('&') {
        return Err(err("digraph6 input is not supported".into()));
    }
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(format!("invalid graph6 byte at column {}", pos + 1)));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty graph6 line".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated graph6 size field".into()));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated graph6 size field".into()));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((*first - 63) as usize, rest),
    };
    if n > MAX_N {
        return Err(err("graph6 vertex count too large".into()));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut pairs = Vec::new();
    let (mut u, mut v) = (0usize, 1usize);
    for (i, &byte) in body.iter().enumerate() {
        let value = byte - 63;
        for bit in 0..6 {
            let k = i * 6 + bit;
            let set = value & (1 << (5 - bit)) != 0;
            if k >= nbits {
                if set {
                    return Err(err("non-zero padding bits in graph6 body".into()));
                }
                continue;
            }
            if set {
                pairs.push((u, v));
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Graph::new(n, pairs).map_err(|e| err(e.to_string()))
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Parses a stream of graph6 lines. Blank lines and lines starting with `#`
/// (never a graph6 character) are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .map(|(i, l)| from_graph6(l.trim(), i + 1))
        .collect()
}

/// Edge-list text: a header line `n m` followed by `m` lines `u v`
/// (0-based). Lines starting with `#` are comments.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A block still collecting pairs: `n`, `m`, header line, pairs so far.
type OpenBlock = (usize, usize, usize, Vec<(usize, usize)>);

/// Parses one or more concatenated edge-list blocks.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut pending: Option<OpenBlock> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let nums = parse_pair(content, line)?;
        match pending.as_mut() {
            None => {
                let (n, m) = nums;
                if m == 0 {
                    graphs.push(Graph::empty(n));
                } else {
                    pending = Some((n, m, line, Vec::with_capacity(m)));
                }
            }
            Some((n, m, header, pairs)) => {
                pairs.push(nums);
                if pairs.len() == *m {
                    let g = Graph::new(*n, pairs.drain(..)).map_err(|e| Error::Parse {
                        line: *header,
                        message: e.to_string(),
                    })?;
                    graphs.push(g);
                    pending = None;
                }
            }
        }
    }
    if let Some((_, m, header, pairs)) = pending {
        return Err(Error::Parse {
            line: last_line.max(header),
            message: format!(
                "edge list declared {m} edges on line {header} but only {} were given",
                pairs.len()
            ),
        });
    }
    Ok(graphs)
}

fn parse_pair(content: &str, line: usize) -> Result<(usize, usize)> {
    let mut parts = content.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = parts.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two integers".into(),
        });
    }
    Ok(pair)
}
