//! End to end checks of the binary: documented output lines, exit codes,
//! and the serialization formats.

use std::process::{Command, Output};

fn inring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn dim_four_fields_prints_the_documented_line() {
    let out = inring(&["dim", "--spec", "F,F,F,F"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "dim=3 predicted=3 basis={X1,X2,X3}");
}

#[test]
fn sdim_two_chains_prints_the_documented_line() {
    let out = inring(&["sdim", "--spec", "C1,C1"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.starts_with("sdim=4 predicted=4"),
        "unexpected output: {text}"
    );
    assert!(text.contains("witness={"), "witness missing: {text}");
}

#[test]
fn info_two_fields_reports_disconnected_and_still_succeeds() {
    let out = inring(&["info", "--spec", "F,F"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "connected=false"), "{text}");
    assert!(text.lines().any(|l| l == "vertices=2"), "{text}");
}

#[test]
fn usage_errors_exit_two_with_the_grammar_reminder() {
    let bad_spec = inring(&["dim", "--spec", "C0,F"]);
    assert_eq!(code(&bad_spec), 2);
    assert!(stderr(&bad_spec).contains("spec grammar"));

    let dot_misuse = inring(&["dim", "--spec", "F,F,F", "--format", "dot"]);
    assert_eq!(code(&dot_misuse), 2);
    assert!(stderr(&dot_misuse).contains("only available for graph and srg"));

    let unknown = inring(&["frobnicate"]);
    assert_eq!(code(&unknown), 2);

    let disconnected = inring(&["dim", "--spec", "F,F"]);
    assert_eq!(code(&disconnected), 2);
    assert!(stderr(&disconnected).contains("disconnected"));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = inring(&["dim", "--spec", "F,F,F,F,F", "--budget", "1"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("budget"));

    let sdim = inring(&["sdim", "--spec", "F,F,F,F,F", "--budget", "1"]);
    assert_eq!(code(&sdim), 3);
}

#[test]
fn graph_json_round_trips_through_the_library() {
    let out = inring(&["graph", "--spec", "C2,F", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let graph = inring::IdealGraph::from_json(&stdout(&out)).expect("valid graph json");
    assert_eq!(graph.vertex_count(), 6);
    assert_eq!(graph.spec().display(), "C2,F");
}

#[test]
fn graph_and_srg_emit_dot() {
    let graph = inring(&["graph", "--spec", "F,F,F", "--format", "dot"]);
    assert_eq!(code(&graph), 0);
    assert!(stdout(&graph).contains("graph"), "{}", stdout(&graph));
    assert!(stdout(&graph).contains("--"));

    let srg = inring(&["srg", "--spec", "F,F,F", "--format", "dot"]);
    assert_eq!(code(&srg), 0);
    assert!(stdout(&srg).contains("graph"));
}

#[test]
fn dim_json_has_the_documented_fields() {
    let out = inring(&["dim", "--spec", "C2,F", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["predicted"], 2);
    assert_eq!(v["spec_display"], "C2,F");
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    assert_eq!(v["basis_rendered"].as_array().unwrap().len(), 2);
}

#[test]
fn dim_marks_uncovered_specs_out_of_scope() {
    // two chains and one field has no covering closed form
    let out = inring(&["dim", "--spec", "C1,C1,F"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("predicted=out_of_scope"), "{text}");
    assert!(text.starts_with("dim="), "{text}");
}

#[test]
fn verify_reports_pass_and_fail_with_matching_exit_codes() {
    let pass = inring(&["verify", "--spec", "F,F,F", "--format", "json"]);
    assert_eq!(code(&pass), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&pass)).expect("valid json");
    assert_eq!(report["pass"], true);
    assert_eq!(report["dim_exact"], report["dim_predicted"]);

    // the chain product C3,C3 is a known counterexample to the closed form
    let fail = inring(&["verify", "--spec", "C3,C3", "--format", "json"]);
    assert_eq!(code(&fail), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&fail)).expect("valid json");
    assert_eq!(report["pass"], false);
    assert_eq!(report["dim_exact"], 6);
    assert_eq!(report["dim_predicted"], 7);
    let failures = report["failures"].as_array().unwrap();
    assert!(failures
        .iter()
        .any(|f| f.as_str().unwrap().starts_with("metric dimension")));
}

#[test]
fn verify_text_ends_with_a_result_line() {
    let out = inring(&["verify", "--spec", "C1,F"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().last(), Some("result=PASS"));
    assert!(text.lines().any(|l| l == "spec=C1,F"));
}

#[test]
fn sweep_streams_json_reports_and_flags_failures() {
    let out = inring(&[
        "sweep",
        "--sweep-max-fields",
        "3",
        "--sweep-max-chain",
        "1",
    ]);
    // the C1,C1,C1 basis construction fails, so the sweep must exit 1
    assert_eq!(code(&out), 1);
    let body = stdout(&out);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 9, "one report per grid spec: {body}");
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("json per line");
        assert!(v["spec_display"].is_string());
    }
    let err = stderr(&out);
    assert!(err.contains("sweep: 8/9 pass"), "{err}");
}

#[test]
fn closed_stdout_pipe_is_not_an_error() {
    use std::io::Read;
    // take one line of a long sweep, then hang up; the binary must exit
    // cleanly instead of panicking on the broken pipe
    let mut child = Command::new(env!("CARGO_BIN_EXE_inring"))
        .args(["sweep"])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::null())
        .spawn()
        .expect("binary runs");
    let mut first = [0u8; 64];
    child
        .stdout
        .take()
        .unwrap()
        .read_exact(&mut first)
        .expect("at least one report");
    let status = child.wait().expect("waits");
    assert_eq!(status.code(), Some(0));
}

#[test]
fn out_flag_writes_the_document_to_a_file() {
    let path = std::env::temp_dir().join(format!("inring-cli-test-{}.dot", std::process::id()));
    let out = inring(&[
        "graph",
        "--spec",
        "F,F,F",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).expect("file written");
    assert!(written.contains("graph"));
    std::fs::remove_file(&path).ok();
}
