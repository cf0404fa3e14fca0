//! End-to-end tests of the command-line binary: exit codes, JSON schemas,
//! and byte-level determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flagged-groth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("stdout is one JSON document")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("process exits normally")
}

#[test]
fn compute_both_agrees_and_is_byte_identical() {
    let args = [
        "compute", "--lambda", "2,1", "--f", "2,4", "--format", "json",
    ];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    let report = json(&first);
    assert_eq!(report["match"], Value::Bool(true));
    assert_eq!(report["guard_band_vanishes"], Value::Bool(true));
    assert_eq!(report["tableaux"], report["determinant"]);
    assert_eq!(report["shape"]["lambda"], serde_json::json!([2, 1]));
    // The polynomial encoding lists terms in canonical order with explicit
    // beta exponents and trimmed variable exponent vectors.
    let first_term = &report["tableaux"]["terms"][0];
    assert_eq!(first_term["beta"], 0);
    assert_eq!(first_term["x"], serde_json::json!([2, 1]));
    assert_eq!(first_term["c"], 1);

    let second = run(&args);
    assert_eq!(
        first.stdout, second.stdout,
        "identical invocations are byte-identical"
    );
}

#[test]
fn compute_rejects_malformed_shapes() {
    let out = run(&["compute", "--lambda", "1,2", "--f", "2,2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["compute", "--lambda", "2,1", "--f", "9"]);
    assert_eq!(code(&out), 2, "flag length must match the shape");
}

#[test]
fn compute_honors_an_explicit_cap() {
    let out = run(&[
        "compute",
        "--lambda",
        "2,2",
        "--f",
        "2,3",
        "--beta-cap",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["beta_cap"], 1);
    let max_beta = report["tableaux"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["beta"].as_u64().unwrap())
        .max()
        .unwrap();
    assert!(max_beta <= 1, "no term may exceed the requested cap");
}

#[test]
fn tableaux_lists_and_sums() {
    let out = run(&[
        "tableaux", "--lambda", "1", "--f", "2", "--list", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(
        report["count"], 3,
        "one box with entries up to 2: {{1}}, {{1,2}}, {{2}}"
    );
    assert_eq!(
        report["tableaux"][1]["fill"][0][0],
        serde_json::json!([1, 1])
    );

    let out = run(&["tableaux", "--lambda", "1", "--f", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("sum = x1 + x2 + b*x1*x2"),
        "text mode renders beta as b: {text}"
    );
}

#[test]
fn onerow_emits_canonical_json() {
    let args = ["onerow", "--m", "2", "--p", "2", "--format", "json"];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    let report = json(&first);
    assert_eq!(report["q"], 1, "the window lower end defaults to 1");
    assert_eq!(report["value"]["nvars"], 2);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn grothendieck_reproduces_the_pinned_example() {
    let out = run(&[
        "grothendieck",
        "--perm",
        "2,3,5,4,1",
        "--show-diagram",
        "--show-essential",
        "--show-flaggings",
        "--verify",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["length"], 5);
    assert_eq!(report["vexillary"], Value::Bool(true));
    assert_eq!(report["shape"], serde_json::json!([2, 1, 1, 1]));
    assert_eq!(report["essential"], serde_json::json!([[3, 4], [4, 1]]));
    let flags: Vec<&Value> = report["flaggings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|fs| &fs["flag"])
        .collect();
    assert_eq!(
        flags,
        [
            &serde_json::json!([3, 3, 3, 4]),
            &serde_json::json!([3, 3, 4, 4]),
            &serde_json::json!([3, 4, 4, 4]),
        ]
    );
    assert_eq!(report["verified"], Value::Bool(true));
}

#[test]
fn grothendieck_rejects_non_vexillary_verification() {
    let out = run(&["grothendieck", "--perm", "2,1,4,3", "--verify"]);
    assert_eq!(code(&out), 2);
    // Without --verify the polynomial itself is still available.
    let out = run(&["grothendieck", "--perm", "2,1,4,3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["vexillary"], Value::Bool(false));
    assert!(report.get("shape").is_none());
}

#[test]
fn certify_passes_on_a_restricted_run() {
    let out = run(&[
        "certify", "--phase", "straight", "--phase", "monomial", "--lambda", "2,1", "--f", "2,4",
        "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["passed"], Value::Bool(true));
    assert_eq!(report["total_cases"], 2);
    assert_eq!(report["phases"][0]["phase"], "straight");
}

#[test]
fn certify_exit_codes_distinguish_failure_and_resource_cap() {
    let out = run(&["certify", "--phase", "example", "--max-cases", "3"]);
    assert_eq!(code(&out), 3, "a case budget stop is a resource cap");

    let out = run(&[
        "certify",
        "--phase",
        "straight",
        "--straight-rows",
        "2",
        "--straight-cols",
        "2",
        "--straight-flag-max",
        "2",
        "--corrupt-binomials",
        "--format",
        "json",
    ]);
    assert_eq!(
        code(&out),
        1,
        "an arithmetic fault is a mathematical mismatch"
    );
    let report = json(&out);
    assert_eq!(report["passed"], Value::Bool(false));
    let counterexample = &report["phases"][0]["first_counterexample"];
    assert!(counterexample["reproduce"]
        .as_str()
        .unwrap()
        .starts_with("flagged-groth compute"));

    let out = run(&["certify", "--phase", "no-such-phase"]);
    assert_eq!(code(&out), 2, "clap rejects unknown phases");
}

#[test]
fn certify_json_is_byte_identical_up_to_wall_clock() {
    let args = [
        "certify",
        "--phase",
        "lemmas",
        "--lemma-cap-max",
        "1",
        "--lemma-p-max",
        "2",
        "--random-pairs",
        "5",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    let mut first = json(&run(&args));
    let mut second = json(&run(&args));
    for report in [&mut first, &mut second] {
        for phase in report["phases"].as_array_mut().unwrap() {
            phase["wall_ms"] = Value::from(0);
        }
    }
    assert_eq!(
        serde_json::to_string(&first).unwrap(),
        serde_json::to_string(&second).unwrap()
    );
}
