use std::path::Path;

use mcbrick::cli::{cmd_analyze, cmd_decompose, cmd_verify, VerifyOptions};
use mcbrick::graph::emit_graph6;
use mcbrick::harness::{builtin_connected, builtin_cubic};
use mcbrick::triladder::generate_triladders;
use mcbrick::Multigraph;
use serde_json::Value;

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn graph6_file(dir: &Path, graphs: &[Multigraph]) -> String {
    let path = dir.join("corpus.g6");
    let text: String = graphs.iter().map(|g| emit_graph6(g).unwrap() + "\n").collect();
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn corpus() -> Vec<Multigraph> {
    let mut graphs: Vec<Multigraph> = (4..=10).step_by(2).flat_map(|n| builtin_cubic(n).unwrap()).collect();
    graphs.extend((2..=6).flat_map(|n| builtin_connected(n).unwrap()));
    graphs.extend(generate_triladders(12).unwrap().into_iter().map(|(g, _)| g));
    graphs
}

#[test]
fn analysis_reports_match_schema() {
    let dir = tempfile::tempdir().unwrap();
    let graphs = corpus();
    let input = graph6_file(dir.path(), &graphs);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(cmd_analyze(&input, None, true, &mut out, &mut err), 0);
    let doc: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), graphs.len());
    assert_valid(&schema("analysis-report.schema.json"), &doc);
}

#[test]
fn analysis_reports_are_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let input = graph6_file(dir.path(), &corpus());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    cmd_analyze(&input, None, true, &mut out, &mut err);
    let doc: Value = serde_json::from_slice(&out).unwrap();
    for r in doc.as_array().unwrap() {
        let flag = |k: &str| r[k].as_bool().unwrap();
        if flag("brick") {
            assert!(flag("matching_covered") && !flag("bipartite"));
        }
        if r["brace"] == Value::Bool(true) {
            assert!(flag("matching_covered") && flag("bipartite"));
        }
        if flag("near_bipartite") {
            assert!(!r["witnesses"].as_array().unwrap().is_empty());
        }
        if flag("matching_covered") {
            let m = r["m"].as_u64().unwrap() as usize;
            let removable = r["removable"].as_array().unwrap().len();
            let nonremovable = r["nonremovable"].as_array().unwrap().len();
            assert_eq!(removable + nonremovable, m);
        } else {
            assert!(r["removable"].is_null());
        }
    }
}

#[test]
fn decompositions_match_schema() {
    let dir = tempfile::tempdir().unwrap();
    let graphs: Vec<Multigraph> = (4..=12)
        .step_by(2)
        .flat_map(|n| builtin_cubic(n).unwrap())
        .filter(|g| g.is_k_connected(3))
        .collect();
    let input = graph6_file(dir.path(), &graphs);
    let v = schema("decomposition.schema.json");
    for k4 in [false, true] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(cmd_decompose(&input, None, k4, true, &mut out, &mut err), 0);
        let doc: Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(doc.as_array().unwrap().len(), graphs.len());
        assert_valid(&v, &doc);
    }
}

#[test]
fn campaign_report_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out/report.json");
    let opts = VerifyOptions {
        corpus: "builtin:cubic:4-10",
        checks: "all",
        workers: 2,
        out: Some(&path),
        lenient: false,
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    cmd_verify(&opts, &mut out, &mut err);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let v = schema("campaign-report.schema.json");
    assert_valid(&v, &doc);

    let mut broken = doc.clone();
    broken.as_object_mut().unwrap().remove("per_check");
    assert!(!v.is_valid(&broken));
}
