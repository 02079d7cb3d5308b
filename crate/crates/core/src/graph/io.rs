//! graph6 lines and plain edge lists.
//!
//! graph6 encodes `n` in one byte (`n <= 62`), in `~` plus three bytes (`n <= 258047`), or in
//! `~~` plus six bytes, followed by the upper triangle of the adjacency matrix read column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`) in 6-bit groups offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!("byte {:#04x} at offset {pos} is outside 63..=126", bytes[pos])));
    }
    let field = |b: &[u8]| b.iter().fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated vertex count"));
            }
            (field(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated vertex count"));
            }
            (field(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(bad(format!("expected {need} adjacency bytes for n={n}, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_raw(adj))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    let push_field = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for s in (0..groups).rev() {
            out.push(63 + (value >> (6 * s) & 63) as u8);
        }
    };
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_field(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_field(&mut out, n, 6);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every nonblank line; errors carry the 1-based line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| bad(format!("line {}: {e}", i + 1))))
        .collect()
}

/// `n m` on the first line, then `m` lines `u v`. Lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let nums = |l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::EdgeList(format!("expected two integers, got `{l}`"))),
        }
    };
    let (n, m) = nums(lines.next().ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?)?;
    let edges = lines.map(nums).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::EdgeList(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
