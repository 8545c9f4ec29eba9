//! The command implementations behind the `mcbrick` binary. Each command
//! writes to the given sink and returns the process exit code: 0 on
//! success, 1 when a verified property fails, 2 on bad input or an
//! infrastructure error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{emit_edge_list, emit_graph6, parse_graph_stream, GraphFormat, Multigraph};
use crate::harness::checks::{CheckOutcome, GraphProfile, Status, Subject, CHECKS};
use crate::harness::{resolve_corpus, run_campaign, select_checks};
use crate::nearbip::{
    check_nonremovable_degree, check_removable_bound, classify_nonremovable, EdgeType,
    NonremovableDegreeReport, RemovableBoundReport,
};
use crate::structure::{is_brace, removability};
use crate::triladder::{generate_triladders, k4_decomposition, three_cut_decomposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Largest order `generate` accepts.
pub const MAX_GENERATE_VERTICES: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct EdgeLabel {
    pub edge: usize,
    #[serde(rename = "type")]
    pub kind: EdgeType,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub e1: usize,
    pub e2: usize,
    pub side_u: Vec<usize>,
    pub side_w: Vec<usize>,
    /// Type of every nonremovable edge outside `{e1, e2}`.
    pub edge_types: Vec<EdgeLabel>,
}

/// Everything the library can say about one graph.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub line: usize,
    pub n: usize,
    pub m: usize,
    pub graph6: Option<String>,
    pub connected: bool,
    pub bipartite: bool,
    pub cubic: bool,
    pub matching_covered: bool,
    pub brick: bool,
    /// `None` when the graph is too large for the exhaustive cut search.
    pub brace: Option<bool>,
    pub near_bipartite: bool,
    /// The following three are `None` unless the graph is matching covered.
    pub removable: Option<Vec<usize>>,
    pub nonremovable: Option<Vec<usize>>,
    pub doubletons: Option<Vec<[usize; 2]>>,
    pub witnesses: Vec<WitnessSummary>,
    pub nonremovable_degree: Option<NonremovableDegreeReport>,
    pub removable_bound: Option<RemovableBoundReport>,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let list = |v: &Option<Vec<usize>>| match v {
            Some(ids) => format!("{ids:?}"),
            None => "-".into(),
        };
        let mut s = format!(
            "graph (line {}): n={} m={} graph6={}\n",
            self.line,
            self.n,
            self.m,
            self.graph6.as_deref().unwrap_or("-")
        );
        s.push_str(&format!(
            "  connected={} bipartite={} cubic={} matching_covered={} brick={} brace={} near_bipartite={}\n",
            self.connected,
            self.bipartite,
            self.cubic,
            self.matching_covered,
            self.brick,
            self.brace.map_or("-".into(), |b| b.to_string()),
            self.near_bipartite
        ));
        s.push_str(&format!("  removable: {}\n", list(&self.removable)));
        s.push_str(&format!("  nonremovable: {}\n", list(&self.nonremovable)));
        if let Some(d) = &self.doubletons {
            s.push_str(&format!("  doubletons ({}): {d:?}\n", d.len()));
        }
        for w in &self.witnesses {
            let labels: Vec<String> = w
                .edge_types
                .iter()
                .map(|l| format!("{}:{:?}", l.edge, l.kind))
                .collect();
            s.push_str(&format!(
                "  witness ({}, {}) U={:?} W={:?} types [{}]\n",
                w.e1,
                w.e2,
                w.side_u,
                w.side_w,
                labels.join(" ")
            ));
        }
        if let Some(r) = &self.nonremovable_degree {
            s.push_str(&format!(
                "  nonremovable-degree: holds={} exceptional={:?}\n",
                r.holds, r.exceptional
            ));
        }
        if let Some(r) = &self.removable_bound {
            s.push_str(&format!(
                "  removable-bound: holds={} removable={} attains={} triladder={}\n",
                r.holds, r.removable_count, r.attains_bound, r.is_triladder
            ));
        }
        for (name, outcome) in &self.checks {
            let status = serde_json::to_value(outcome.status).expect("status serializes");
            s.push_str(&format!("  check {name}: {}", status.as_str().unwrap_or("?")));
            if let Some(d) = &outcome.detail {
                s.push_str(&format!(" ({d})"));
            }
            s.push('\n');
        }
        s
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &str> {
        self.checks
            .iter()
            .filter(|(_, o)| o.status == Status::Failed)
            .map(|(n, _)| n.as_str())
    }
}

pub fn analyze(g: &Multigraph, line: usize) -> Result<AnalysisReport> {
    let profile = GraphProfile::of(g);
    let ids = |v: &[crate::graph::EdgeId]| v.iter().map(|e| e.0).collect::<Vec<_>>();
    let (removable, nonremovable, doubletons) = if profile.matching_covered {
        let r = removability(g)?;
        (
            Some(ids(&r.removable)),
            Some(ids(&r.nonremovable)),
            Some(r.doubletons.iter().map(|(a, b)| [a.0, b.0]).collect()),
        )
    } else {
        (None, None, None)
    };
    let mut witnesses = Vec::new();
    for w in &profile.witnesses {
        let map = classify_nonremovable(g, w)?;
        witnesses.push(WitnessSummary {
            e1: w.e1.0,
            e2: w.e2.0,
            side_u: w.side_u().to_vec(),
            side_w: w.side_w().to_vec(),
            edge_types: map
                .labels
                .iter()
                .map(|&(e, kind)| EdgeLabel { edge: e.0, kind })
                .collect(),
        });
    }
    let brace = if profile.bipartite && profile.matching_covered {
        is_brace(g).ok()
    } else {
        Some(false)
    };
    let bound_applies = profile.near_bipartite_brick() && !profile.is_k4;
    let subject = Subject {
        graph: g,
        blueprint: None,
        profile: &profile,
    };
    let mut checks = BTreeMap::new();
    for check in CHECKS {
        checks.insert(check.name.to_string(), check.run(&subject)?);
    }
    Ok(AnalysisReport {
        line,
        n: g.vertex_count(),
        m: g.edge_count(),
        graph6: emit_graph6(g).ok(),
        connected: profile.connected,
        bipartite: profile.bipartite,
        cubic: profile.cubic,
        matching_covered: profile.matching_covered,
        brick: profile.brick,
        brace,
        near_bipartite: profile.near_bipartite(),
        removable,
        nonremovable,
        doubletons,
        witnesses,
        nonremovable_degree: if bound_applies {
            Some(check_nonremovable_degree(g)?)
        } else {
            None
        },
        removable_bound: if bound_applies {
            Some(check_removable_bound(g)?)
        } else {
            None
        },
        checks,
    })
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(input)
    }
    .map_err(|e| Error::Precondition(format!("cannot read {input}: {e}")))
}

/// Parses every graph in `text`; the first parse error aborts.
pub fn parse_input(text: &str, format: Option<GraphFormat>) -> Result<Vec<(usize, Multigraph)>> {
    parse_graph_stream(text, format)
        .into_iter()
        .map(|r| r.map(|p| (p.line, p.graph)))
        .collect()
}

fn io_error(e: std::io::Error) -> Error {
    Error::Precondition(format!("write failed: {e}"))
}

fn report_error(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_ERROR
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

pub fn cmd_analyze(
    input: &str,
    format: Option<GraphFormat>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let run = || -> Result<Vec<AnalysisReport>> {
        let text = read_input(input)?;
        parse_input(&text, format)?
            .iter()
            .map(|(line, g)| analyze(g, *line))
            .collect()
    };
    match run() {
        Ok(reports) => {
            let written = if json {
                writeln!(out, "{}", to_json(&reports))
            } else {
                reports.iter().try_for_each(|r| write!(out, "{}", r.to_text()))
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => report_error(err, &io_error(e)),
            }
        }
        Err(e) => report_error(err, &e),
    }
}

pub struct VerifyOptions<'a> {
    pub corpus: &'a str,
    pub checks: &'a str,
    pub workers: usize,
    pub out: Option<&'a Path>,
    pub lenient: bool,
}

pub fn cmd_verify(opts: &VerifyOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut run = || -> Result<i32> {
        let checks = select_checks(opts.checks)?;
        let corpus = resolve_corpus(opts.corpus, opts.lenient)?;
        for w in &corpus.warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        let mut report = run_campaign(&corpus, &checks, opts.workers)?;
        if let Some(path) = opts.out {
            report.write(path)?;
        }
        write!(out, "{}", report.summary()).map_err(io_error)?;
        for cx in &report.counterexamples {
            writeln!(out, "FAIL {} graph {}: {}", cx.check, cx.graph_index, cx.detail)
                .map_err(io_error)?;
        }
        for f in &report.infrastructure_failures {
            let _ = writeln!(
                err,
                "infrastructure failure on graph {} ({}): {}",
                f.graph_index,
                f.check.as_deref().unwrap_or("classification"),
                f.message
            );
        }
        Ok(report.exit_code())
    };
    run().unwrap_or_else(|e| report_error(err, &e))
}

pub struct GenerateOptions {
    pub max_n: usize,
    pub near_bipartite_only: bool,
    pub format: GraphFormat,
    pub blueprints: bool,
}

/// Writes tri-ladders as a graph stream. With `blueprints`, each graph is
/// preceded by its blueprint as `#` comment lines, which readers skip.
pub fn cmd_generate(opts: &GenerateOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if opts.max_n < 6 || opts.max_n % 2 == 1 || opts.max_n > MAX_GENERATE_VERTICES {
        let e = Error::Precondition(format!(
            "--max-n must be even and in 6..={MAX_GENERATE_VERTICES}, got {}",
            opts.max_n
        ));
        return report_error(err, &e);
    }
    let mut run = || -> Result<()> {
        for (g, bp) in generate_triladders(opts.max_n)? {
            if opts.near_bipartite_only && !crate::nearbip::is_near_bipartite(&g) {
                continue;
            }
            if opts.blueprints {
                writeln!(out, "# tri-ladder n={} splices={}", g.vertex_count(), bp.splice_count)
                    .map_err(io_error)?;
                for line in bp.to_text().lines() {
                    writeln!(out, "# {line}").map_err(io_error)?;
                }
            }
            match opts.format {
                GraphFormat::Graph6 => writeln!(out, "{}", emit_graph6(&g)?),
                GraphFormat::EdgeList => writeln!(out, "{}", emit_edge_list(&g)),
            }
            .map_err(io_error)?;
        }
        Ok(())
    };
    match run() {
        Ok(()) => EXIT_OK,
        Err(e) => report_error(err, &e),
    }
}

#[derive(Serialize)]
struct DecomposeOutput {
    line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k4_decomposition: Option<bool>,
    tree: Option<crate::triladder::DecompositionTree>,
}

/// Prints a 3-cut decomposition of every input graph, or with `k4` the
/// K4-decomposition verdict and a tree when one exists.
pub fn cmd_decompose(
    input: &str,
    format: Option<GraphFormat>,
    k4: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let run = || -> Result<Vec<DecomposeOutput>> {
        let text = read_input(input)?;
        let mut outputs = Vec::new();
        for (line, g) in parse_input(&text, format)? {
            let at_line = |e: Error| Error::Precondition(format!("graph at line {line}: {e}"));
            let output = if k4 {
                let tree = k4_decomposition(&g).map_err(at_line)?;
                DecomposeOutput {
                    line,
                    k4_decomposition: Some(tree.is_some()),
                    tree,
                }
            } else {
                DecomposeOutput {
                    line,
                    k4_decomposition: None,
                    tree: Some(three_cut_decomposition(&g).map_err(at_line)?),
                }
            };
            outputs.push(output);
        }
        Ok(outputs)
    };
    let outputs = match run() {
        Ok(o) => o,
        Err(e) => return report_error(err, &e),
    };
    let written = if json {
        writeln!(out, "{}", to_json(&outputs))
    } else {
        outputs.iter().try_for_each(|o| {
            writeln!(out, "graph (line {}):", o.line)?;
            if let Some(present) = o.k4_decomposition {
                writeln!(
                    out,
                    "K4-decomposition: {}",
                    if present { "present" } else { "absent" }
                )?;
            }
            match &o.tree {
                Some(t) => write!(out, "{}", t.to_text()),
                None => Ok(()),
            }
        })
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => report_error(err, &io_error(e)),
    }
}
