//! graph6 and the native edge-list text format.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! (0-indexed). Several graphs in one stream are separated by blank lines.
//! Lines starting with `#` are comments.

use super::{Multigraph, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// A graph read from a stream, with the 1-based line it started on.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub line: usize,
    pub graph: Multigraph,
}

const G6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(G6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::Graph6("empty string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size".into()));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size".into()));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    if n > super::MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: super::MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::build(n, &pairs)
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// graph6 encoding of a simple graph. Parallel edges are rejected.
pub fn emit_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Graph6(
            "graph has parallel edges; use the edge-list format".into(),
        ));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Edge-list text of one graph, edges listed in id order.
pub fn emit_edge_list(g: &Multigraph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}

/// Parses exactly one edge-list graph.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut graphs = parse_stream_as(text, GraphFormat::EdgeList)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap().graph),
        k => Err(Error::Parse {
            line: 1,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

/// Parses a stream of graphs, detecting the format from the first
/// non-blank, non-comment line unless `format` is given.
pub fn parse_graph_stream(
    text: &str,
    format: Option<GraphFormat>,
) -> Vec<std::result::Result<ParsedGraph, Error>> {
    let format = format.unwrap_or_else(|| detect_format(text));
    match format {
        GraphFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#') && t != G6_HEADER
            })
            .map(|(i, l)| {
                parse_graph6(l.trim())
                    .map(|graph| ParsedGraph { line: i + 1, graph })
                    .map_err(|e| Error::Parse {
                        line: i + 1,
                        msg: e.to_string(),
                    })
            })
            .collect(),
        GraphFormat::EdgeList => edge_list_blocks(text),
    }
}

fn parse_stream_as(text: &str, format: GraphFormat) -> Result<Vec<ParsedGraph>> {
    parse_graph_stream(text, Some(format)).into_iter().collect()
}

fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() == 2
            && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
        {
            GraphFormat::EdgeList
        }
        _ => GraphFormat::Graph6,
    }
}

fn edge_list_blocks(text: &str) -> Vec<std::result::Result<ParsedGraph, Error>> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
        .peekable();
    loop {
        while matches!(lines.peek(), Some((_, l)) if l.is_empty()) {
            lines.next();
        }
        let Some((start, header)) = lines.next() else {
            break;
        };
        let parsed = (|| {
            let [n, m] = parse_pair(header, start)?;
            let mut pairs = Vec::with_capacity(m);
            for k in 0..m {
                let Some((line, text)) = lines.next_if(|(_, t)| !t.is_empty()) else {
                    return Err(Error::Parse {
                        line: start + k + 1,
                        msg: format!("expected {m} edge lines, found {k}"),
                    });
                };
                let [u, v] = parse_pair(text, line)?;
                pairs.push((u, v));
            }
            Multigraph::build(n, &pairs).map_err(|e| Error::Parse {
                line: start,
                msg: e.to_string(),
            })
        })();
        match parsed {
            Ok(graph) => out.push(Ok(ParsedGraph { line: start, graph })),
            Err(e) => {
                out.push(Err(e));
                // resynchronize at the next blank line
                while matches!(lines.peek(), Some((_, l)) if !l.is_empty()) {
                    lines.next();
                }
            }
        }
    }
    out
}

fn parse_pair(text: &str, line: usize) -> Result<[usize; 2]> {
    let nums: Vec<_> = text.split_whitespace().map(str::parse::<usize>).collect();
    match nums.as_slice() {
        [Ok(a), Ok(b)] => Ok([*a, *b]),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected two non-negative integers, got {text:?}"),
        }),
    }
}

impl VertexSet {
    /// Parses `"0,2,4"` or `"0 2 4"`.
    pub fn parse_list(text: &str) -> Result<VertexSet> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&v| v < super::MAX_VERTICES)
                    .ok_or_else(|| Error::InvalidVertexSet(format!("bad vertex {t:?}")))
            })
            .collect()
    }
}
