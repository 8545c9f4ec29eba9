//! Running checks over a corpus and reporting the outcome.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{Check, CheckOutcome, GraphProfile, Status, Subject};
use super::corpus::{Corpus, CorpusEntry};
use crate::error::{Error, Result};
use crate::graph::{emit_edge_list, emit_graph6};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub matching_covered: usize,
    pub bipartite_matching_covered: usize,
    pub bricks: usize,
    pub near_bipartite: usize,
    pub near_bipartite_bricks: usize,
}

/// A property failure, replayable from `edge_list`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub graph_index: usize,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub edge_list: String,
    pub detail: String,
    /// File name of the edge-list sidecar, once written.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sidecar: Option<String>,
}

/// A panic or error while evaluating a check, as opposed to the checked
/// property failing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfrastructureFailure {
    pub graph_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub corpus: String,
    pub checks: Vec<String>,
    pub graph_count: usize,
    pub classification: Classification,
    pub per_check: BTreeMap<String, CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    pub infrastructure_failures: Vec<InfrastructureFailure>,
    pub corpus_warnings: Vec<String>,
    pub notes: Vec<String>,
    pub wall_time_seconds: f64,
}

impl CampaignReport {
    pub fn property_failures(&self) -> usize {
        self.per_check.values().map(|t| t.failed).sum()
    }

    /// 0 when everything passed, 1 on property failures, 2 on
    /// infrastructure failures.
    pub fn exit_code(&self) -> i32 {
        if !self.infrastructure_failures.is_empty() {
            2
        } else if self.property_failures() > 0 {
            1
        } else {
            0
        }
    }

    /// JSON with the timing field zeroed, for comparing runs.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_seconds = 0.0;
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut s = format!("corpus {}: {} graphs\n", self.corpus, self.graph_count);
        for name in &self.checks {
            let t = self.per_check[name];
            s.push_str(&format!(
                "{name:<26} applicable {:>5}  passed {:>5}  failed {:>3}  skipped {:>5}\n",
                t.applicable, t.passed, t.failed, t.skipped
            ));
        }
        s.push_str(&format!(
            "{} counterexamples, {} infrastructure failures, {:.2}s\n",
            self.counterexamples.len(),
            self.infrastructure_failures.len(),
            self.wall_time_seconds
        ));
        s
    }

    /// Writes the JSON report to `path` and one edge-list file per
    /// counterexample next to it.
    pub fn write(&mut self, path: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Precondition(format!("cannot write {}: {e}", path.display()));
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "report".into());
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(&dir).map_err(io)?;
        }
        for (k, cx) in self.counterexamples.iter_mut().enumerate() {
            let name = format!("{stem}.counterexample-{k}.edges");
            let header = format!("# check {}: {}\n", cx.check, cx.detail);
            std::fs::write(dir.join(&name), header + &cx.edge_list).map_err(io)?;
            cx.sidecar = Some(name);
        }
        let json = serde_json::to_string_pretty(self).expect("report serializes");
        std::fs::write(path, json + "\n").map_err(io)
    }
}

struct GraphResult {
    profile: Option<GraphProfile>,
    outcomes: Vec<Option<CheckOutcome>>,
    failures: Vec<InfrastructureFailure>,
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn evaluate(index: usize, entry: &CorpusEntry, checks: &[&Check]) -> GraphResult {
    let g = &entry.graph;
    let profile = match catch_unwind(|| GraphProfile::of(g)) {
        Ok(p) => p,
        Err(payload) => {
            return GraphResult {
                profile: None,
                outcomes: vec![None; checks.len()],
                failures: vec![InfrastructureFailure {
                    graph_index: index,
                    check: None,
                    message: format!("classification panicked: {}", panic_message(payload)),
                }],
            }
        }
    };
    let subject = Subject {
        graph: g,
        blueprint: entry.blueprint.as_ref(),
        profile: &profile,
    };
    let mut failures = Vec::new();
    let outcomes = checks
        .iter()
        .map(|check| {
            let message = match catch_unwind(AssertUnwindSafe(|| check.run(&subject))) {
                Ok(Ok(outcome)) => return Some(outcome),
                Ok(Err(e)) => e.to_string(),
                Err(payload) => format!("panicked: {}", panic_message(payload)),
            };
            failures.push(InfrastructureFailure {
                graph_index: index,
                check: Some(check.name.to_string()),
                message,
            });
            None
        })
        .collect();
    GraphResult {
        profile: Some(profile),
        outcomes,
        failures,
    }
}

/// Runs `checks` on every corpus graph using `workers` threads. Results
/// are merged in corpus order, so the report does not depend on the
/// worker count.
pub fn run_campaign(corpus: &Corpus, checks: &[&Check], workers: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let results: Vec<GraphResult> = pool.install(|| {
        corpus
            .entries
            .par_iter()
            .enumerate()
            .map(|(i, entry)| evaluate(i, entry, checks))
            .collect()
    });

    let mut per_check: BTreeMap<String, CheckTally> = checks
        .iter()
        .map(|c| (c.name.to_string(), CheckTally::default()))
        .collect();
    let mut classification = Classification::default();
    let mut counterexamples = Vec::new();
    let mut infrastructure_failures = Vec::new();
    let mut notes = Vec::new();
    for (index, (entry, result)) in corpus.entries.iter().zip(results).enumerate() {
        if let Some(p) = &result.profile {
            classification.matching_covered += p.matching_covered as usize;
            classification.bipartite_matching_covered += (p.matching_covered && p.bipartite) as usize;
            classification.bricks += p.brick as usize;
            classification.near_bipartite += p.near_bipartite() as usize;
            classification.near_bipartite_bricks += p.near_bipartite_brick() as usize;
        }
        for (check, outcome) in checks.iter().zip(&result.outcomes) {
            let Some(outcome) = outcome else { continue };
            let tally = per_check.get_mut(check.name).expect("tally exists");
            match outcome.status {
                Status::Skipped => tally.skipped += 1,
                Status::Passed => {
                    tally.applicable += 1;
                    tally.passed += 1;
                }
                Status::Failed => {
                    tally.applicable += 1;
                    tally.failed += 1;
                    let g = &entry.graph;
                    counterexamples.push(Counterexample {
                        check: check.name.to_string(),
                        graph_index: index,
                        n: g.vertex_count(),
                        m: g.edge_count(),
                        graph6: emit_graph6(g).ok(),
                        edge_list: emit_edge_list(g),
                        detail: outcome.detail.clone().unwrap_or_default(),
                        sidecar: None,
                    });
                }
            }
            for note in &outcome.notes {
                notes.push(format!("graph {index} [{}]: {note}", check.name));
            }
        }
        infrastructure_failures.extend(result.failures);
    }
    notes.extend(triladder_notes(corpus));
    Ok(CampaignReport {
        corpus: corpus.source.clone(),
        checks: checks.iter().map(|c| c.name.to_string()).collect(),
        graph_count: corpus.len(),
        classification,
        per_check,
        counterexamples,
        infrastructure_failures,
        corpus_warnings: corpus.warnings.clone(),
        notes,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    })
}

/// For generated tri-ladders: how many of each order are near-bipartite.
fn triladder_notes(corpus: &Corpus) -> Vec<String> {
    let mut by_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for entry in corpus.entries.iter().filter(|e| e.blueprint.is_some()) {
        let slot = by_order.entry(entry.graph.vertex_count()).or_default();
        slot.0 += 1;
        slot.1 += crate::nearbip::is_near_bipartite(&entry.graph) as usize;
    }
    by_order
        .into_iter()
        .map(|(n, (all, nb))| format!("tri-ladders on {n} vertices: {all} generated, {nb} near-bipartite"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::checks::select_checks;
    use crate::harness::corpus::resolve_corpus;

    #[test]
    fn small_cubic_campaign() {
        let corpus = resolve_corpus("builtin:cubic:4-8", false).unwrap();
        let checks = select_checks("all").unwrap();
        let report = run_campaign(&corpus, &checks, 2).unwrap();
        assert_eq!(report.graph_count, 8);
        assert_eq!(report.exit_code(), 0, "{}", report.summary());
        for t in report.per_check.values() {
            assert_eq!(t.applicable + t.skipped, 8);
        }
        let single = run_campaign(&corpus, &checks, 1).unwrap();
        assert_eq!(single.to_json_without_timing(), report.to_json_without_timing());
    }

    #[test]
    fn removable_bound_on_order_six() {
        let corpus = resolve_corpus("builtin:cubic:6", false).unwrap();
        let checks = select_checks("removable-bound").unwrap();
        let report = run_campaign(&corpus, &checks, 1).unwrap();
        let t = report.per_check["removable-bound"];
        assert_eq!((t.applicable, t.passed, t.skipped), (1, 1, 1));
    }

    #[test]
    fn triladder_notes_are_reported() {
        let corpus = resolve_corpus("builtin:triladders:8", false).unwrap();
        let checks = select_checks("triladder-rungs").unwrap();
        let report = run_campaign(&corpus, &checks, 1).unwrap();
        assert!(report.notes.iter().any(|n| n.starts_with("tri-ladders on 8 vertices")));
    }
}
