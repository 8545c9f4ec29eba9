//! Graph corpora: built-in exhaustive enumerators and file ingestion.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{
    canonical_code_colored, canonical_form, parse_graph_stream, CanonicalForm, Multigraph,
};
use crate::triladder::{generate_triladders, TriLadderBlueprint};

pub const MAX_BUILTIN_CUBIC: usize = 14;
pub const MAX_BUILTIN_CONNECTED: usize = 7;
pub const MAX_BUILTIN_TRILADDER: usize = 16;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub graph: Multigraph,
    /// Present for generated tri-ladders.
    pub blueprint: Option<TriLadderBlueprint>,
}

/// An isomorph-free list of connected graphs with stable indices.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub source: String,
    pub entries: Vec<CorpusEntry>,
    /// Per-line problems skipped under `lenient`, and dropped duplicates or
    /// disconnected graphs.
    pub warnings: Vec<String>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Multigraph> {
        self.entries.iter().map(|e| &e.graph)
    }

    fn from_graphs(source: String, graphs: Vec<Multigraph>) -> Corpus {
        Corpus {
            source,
            entries: graphs
                .into_iter()
                .map(|graph| CorpusEntry {
                    graph,
                    blueprint: None,
                })
                .collect(),
            warnings: Vec::new(),
        }
    }
}

/// Resolves a corpus selector:
///
/// * `builtin:cubic:N` or `builtin:cubic:A-B` (even orders, at most 14),
/// * `builtin:connected:N` or a range (at most 7),
/// * `builtin:triladders:N` (all tri-ladders on at most `N` vertices) or
///   `builtin:triladders:A-B`,
/// * a file path, or `-` for stdin.
pub fn resolve_corpus(selector: &str, lenient: bool) -> Result<Corpus> {
    let Some(rest) = selector.strip_prefix("builtin:") else {
        let text = if selector == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(selector)
        }
        .map_err(|e| Error::Precondition(format!("cannot read {selector}: {e}")))?;
        return load_corpus_text(selector, &text, lenient);
    };
    let (kind, range) = rest
        .split_once(':')
        .ok_or_else(|| Error::Precondition(format!("bad corpus selector {selector:?}")))?;
    let (lo, hi) = parse_range(range)
        .ok_or_else(|| Error::Precondition(format!("bad order range {range:?}")))?;
    match kind {
        "cubic" => {
            let mut graphs = Vec::new();
            for n in (lo..=hi).filter(|n| n % 2 == 0) {
                graphs.extend(builtin_cubic(n)?);
            }
            if lo % 2 == 1 && lo == hi {
                builtin_cubic(lo)?;
            }
            Ok(Corpus::from_graphs(selector.to_string(), graphs))
        }
        "connected" => {
            let mut graphs = Vec::new();
            for n in lo..=hi {
                graphs.extend(builtin_connected(n)?);
            }
            Ok(Corpus::from_graphs(selector.to_string(), graphs))
        }
        "triladders" => {
            if hi > MAX_BUILTIN_TRILADDER {
                return Err(Error::Precondition(format!(
                    "tri-ladder corpus is capped at {MAX_BUILTIN_TRILADDER} vertices"
                )));
            }
            let entries = generate_triladders(hi)?
                .into_iter()
                .filter(|(g, _)| !range.contains('-') || g.vertex_count() >= lo)
                .map(|(graph, bp)| CorpusEntry {
                    graph,
                    blueprint: Some(bp),
                })
                .collect();
            Ok(Corpus {
                source: selector.to_string(),
                entries,
                warnings: Vec::new(),
            })
        }
        _ => Err(Error::Precondition(format!("unknown builtin corpus {kind:?}"))),
    }
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    match s.split_once('-') {
        Some((a, b)) => {
            let (a, b) = (a.parse().ok()?, b.parse().ok()?);
            (a <= b).then_some((a, b))
        }
        None => {
            let n = s.parse().ok()?;
            Some((n, n))
        }
    }
}

/// Parses, deduplicates up to isomorphism and drops disconnected graphs.
/// Parse errors fail the load unless `lenient`, in which case they are
/// skipped with a warning.
pub fn load_corpus_text(source: &str, text: &str, lenient: bool) -> Result<Corpus> {
    let mut corpus = Corpus {
        source: source.to_string(),
        entries: Vec::new(),
        warnings: Vec::new(),
    };
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for item in parse_graph_stream(text, None) {
        let parsed = match item {
            Ok(p) => p,
            Err(e) if lenient => {
                corpus.warnings.push(format!("skipped: {e}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        if !parsed.graph.is_connected() {
            corpus
                .warnings
                .push(format!("line {}: disconnected graph dropped", parsed.line));
            continue;
        }
        let key = match canonical_form(&parsed.graph) {
            Ok(k) => k,
            Err(e) if lenient => {
                corpus.warnings.push(format!("line {}: skipped: {e}", parsed.line));
                continue;
            }
            Err(e) => {
                return Err(Error::Parse {
                    line: parsed.line,
                    msg: e.to_string(),
                })
            }
        };
        if !seen.insert(key) {
            corpus
                .warnings
                .push(format!("line {}: duplicate graph dropped", parsed.line));
            continue;
        }
        corpus.entries.push(CorpusEntry {
            graph: parsed.graph,
            blueprint: None,
        });
    }
    Ok(corpus)
}

/// All connected simple cubic graphs on `n` vertices up to isomorphism,
/// sorted by canonical form.
///
/// Partial graphs are grown by saturating one vertex at a time (the
/// lowest vertex in canonical order that already has an edge), and
/// isomorphic partial graphs are merged after every step.
pub fn builtin_cubic(n: usize) -> Result<Vec<Multigraph>> {
    if n % 2 == 1 || !(4..=MAX_BUILTIN_CUBIC).contains(&n) {
        return Err(Error::Precondition(format!(
            "cubic corpus needs an even order in 4..={MAX_BUILTIN_CUBIC}, got {n}"
        )));
    }
    let mut start = vec![0u64; n];
    for u in 1..=3 {
        start[0] |= 1 << u;
        start[u] |= 1;
    }
    let mut level = vec![start];
    let mut done: Vec<(Vec<u8>, Vec<u64>)> = Vec::new();
    while !level.is_empty() {
        let mut next: HashMap<Vec<u8>, Vec<u64>> = HashMap::new();
        for adj in &level {
            let (_, perm) = code_of(adj);
            let deg = |v: usize| adj[v].count_ones();
            let designated = (0..n)
                .filter(|&v| deg(v) > 0 && deg(v) < 3)
                .min_by_key(|&v| perm[v]);
            let Some(v) = designated else {
                if (0..n).all(|v| deg(v) == 3) {
                    let (code, _) = code_of(adj);
                    done.push((code, adj.clone()));
                }
                continue;
            };
            let need = 3 - deg(v) as usize;
            let open: Vec<usize> = (0..n)
                .filter(|&u| u != v && deg(u) > 0 && deg(u) < 3 && adj[v] >> u & 1 == 0)
                .collect();
            let isolated: Vec<usize> = (0..n).filter(|&u| deg(u) == 0).collect();
            for fresh in 0..=need.min(isolated.len()) {
                let mut targets = Vec::new();
                choose(&open, need - fresh, 0, &mut targets, &mut |picked| {
                    let mut a = adj.clone();
                    for &u in picked.iter().chain(&isolated[..fresh]) {
                        a[v] |= 1 << u;
                        a[u] |= 1 << v;
                    }
                    let (code, _) = code_of(&a);
                    next.entry(code).or_insert(a);
                });
            }
        }
        let mut items: Vec<_> = next.into_iter().collect();
        items.sort();
        level = items.into_iter().map(|(_, a)| a).collect();
    }
    done.sort();
    done.dedup_by(|a, b| a.0 == b.0);
    Ok(done
        .into_iter()
        .map(|(_, adj)| graph_from_rows(&adj))
        .filter(Multigraph::is_connected)
        .collect())
}

fn choose(
    pool: &[usize],
    k: usize,
    from: usize,
    picked: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if k == 0 {
        f(picked);
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < k {
            break;
        }
        picked.push(pool[i]);
        choose(pool, k - 1, i + 1, picked, f);
        picked.pop();
    }
}

fn code_of(adj: &[u64]) -> (Vec<u8>, Vec<usize>) {
    let n = adj.len();
    let m: Vec<Vec<u8>> = (0..n)
        .map(|u| (0..n).map(|v| (adj[u] >> v & 1) as u8).collect())
        .collect();
    canonical_code_colored(&m, &vec![0; n])
}

fn graph_from_rows(adj: &[u64]) -> Multigraph {
    let n = adj.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                pairs.push((u, v));
            }
        }
    }
    Multigraph::build(n, &pairs).expect("rows describe a simple graph")
}

/// All connected simple graphs on `n` vertices up to isomorphism, sorted
/// by canonical form. Built by adding a vertex to every connected graph on
/// `n − 1` vertices.
pub fn builtin_connected(n: usize) -> Result<Vec<Multigraph>> {
    if !(1..=MAX_BUILTIN_CONNECTED).contains(&n) {
        return Err(Error::Precondition(format!(
            "connected corpus needs an order in 1..={MAX_BUILTIN_CONNECTED}, got {n}"
        )));
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for k in 2..=n {
        let mut next: HashMap<Vec<u8>, Vec<u64>> = HashMap::new();
        for adj in &level {
            for mask in 1u64..(1 << (k - 1)) {
                let mut a = adj.clone();
                a.push(mask);
                for (u, row) in a.iter_mut().enumerate().take(k - 1) {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                let (code, _) = code_of(&a);
                next.entry(code).or_insert(a);
            }
        }
        let mut items: Vec<_> = next.into_iter().collect();
        items.sort();
        level = items.into_iter().map(|(_, a)| a).collect();
    }
    Ok(level.iter().map(|a| graph_from_rows(a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_counts() {
        for (n, count) in [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)] {
            let gs = builtin_cubic(n).unwrap();
            assert_eq!(gs.len(), count, "n = {n}");
            assert!(gs.iter().all(|g| g.is_cubic() && g.is_connected()));
        }
        assert!(builtin_cubic(5).is_err());
        assert!(builtin_cubic(16).is_err());
    }

    #[test]
    fn connected_counts() {
        for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(builtin_connected(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn selectors() {
        assert_eq!(resolve_corpus("builtin:cubic:4-8", false).unwrap().len(), 8);
        assert_eq!(resolve_corpus("builtin:triladders:10", false).unwrap().len(), 4);
        assert!(resolve_corpus("builtin:cubic:7", false).is_err());
        assert!(resolve_corpus("builtin:nope:4", false).is_err());
        assert!(resolve_corpus("builtin:cubic:x", false).is_err());
    }

    #[test]
    fn file_loading() {
        let text = "C~\nC~\nEQjO\n";
        let c = load_corpus_text("t", text, false).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(load_corpus_text("t", "", false).unwrap().len(), 0);
        assert!(load_corpus_text("t", "C~\n!!\n", false).is_err());
        let c = load_corpus_text("t", "C~\n!!\n", true).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.warnings.len(), 1);
        let multi = "2 3\n0 1\n0 1\n0 1\n\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
        assert_eq!(load_corpus_text("t", multi, false).unwrap().len(), 2);
    }
}
