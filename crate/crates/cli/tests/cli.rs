use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicrit")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn sweep_on_example2_verifies() {
    let ex2 = fixture("ex2.json");
    let out = run(&[
        "solve-budget",
        "--problem",
        "mst",
        "--algorithm",
        "sweep",
        "--budget",
        "3",
        "--epsilon",
        "1",
        "--input",
        &ex2,
        "--verify",
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["status"], "certified");
    assert_eq!(r["certificate"]["budget_factor"], "3");
    assert_eq!(r["certificate"]["cost_factor"], "3");
    assert_eq!(r["verification"]["opt"], "3");
    assert_eq!(r["verification"]["passed"], true);
}

#[test]
fn every_budget_algorithm_certifies() {
    let ex2 = fixture("ex2.json");
    for algorithm in ["sweep", "binary", "parametric", "fixed"] {
        let out = run(&[
            "solve-budget",
            "--problem",
            "mst",
            "--algorithm",
            algorithm,
            "--budget",
            "3",
            "--input",
            &ex2,
            "--verify",
        ]);
        assert_eq!(code(&out), 0, "{algorithm}");
        assert_eq!(json(&out)["verification"]["passed"], true, "{algorithm}");
    }
    let path = fixture("path.json");
    let out = run(&[
        "solve-budget",
        "--problem",
        "path",
        "--algorithm",
        "parametric",
        "--budget",
        "5",
        "--epsilon",
        "1/2",
        "--input",
        &path,
        "--verify",
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["certificate"]["budget_factor"], "3/2");
    assert!(r["comparisons"].as_u64().unwrap() + 1 >= r["oracle_calls"].as_u64().unwrap());
}

#[test]
fn pareto_on_example1() {
    let ex1 = fixture("ex1.json");
    let out = run(&[
        "pareto",
        "--problem",
        "mst",
        "--epsilon",
        "1",
        "--input",
        &ex1,
        "--verify",
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["verification"]["passed"], true);
    let images: Vec<(String, String)> = r["pareto"]["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            (
                x["f1"].as_str().unwrap().to_string(),
                x["f2"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(images, vec![("2".into(), "4".into()), ("4".into(), "2".into())]);

    let csv = run(&[
        "pareto",
        "--problem",
        "mst",
        "--input",
        &ex1,
        "--algorithm",
        "parametric",
        "--format",
        "csv",
    ]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "f1,f2\n2,4\n4,2\n");
}

#[test]
fn extended_pareto_finds_zero_records() {
    let out = run(&[
        "pareto",
        "--problem",
        "mst",
        "--algorithm",
        "extended",
        "--input",
        &fixture("boundary.json"),
        "--format",
        "csv",
        "--verify",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "f1,f2\n0,1\n1,0\n");
}

#[test]
fn repro_cases() {
    let out = run(&["repro", "--case", "marathe-ex2"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["trace"]["outcome"]["status"], "no-solution");
    assert_eq!(r["trace"]["opt_budget"], "3");
    assert!(r["certified"]["parametric"]["solution"].is_object());

    let out = run(&["repro", "--case", "marathe-ex1"]);
    let r = json(&out);
    let ratio = |d: &str| {
        r["trace"]["tested"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["d"] == d)
            .map(|p| p["ratio"].clone())
            .unwrap()
    };
    assert_eq!(ratio("3"), "7/3");
    assert_eq!(ratio("4"), "5/2");
}

#[test]
fn exit_codes() {
    let ex1 = fixture("ex1.json");
    let no_cert = run(&["solve-budget", "--problem", "mst", "--budget", "1/10", "--input", &ex1]);
    assert_eq!(code(&no_cert), 3);
    let r = json(&no_cert);
    assert_eq!(r["status"], "no-certificate");
    assert!(!r["transcript"].as_array().unwrap().is_empty());

    let bad = |args: &[&str]| code(&run(args));
    assert_eq!(
        bad(&[
            "solve-budget",
            "--problem",
            "mst",
            "--budget",
            "1",
            "--input",
            &fixture("zero_weight.json")
        ]),
        4
    );
    assert_eq!(
        bad(&[
            "solve-budget",
            "--problem",
            "mst",
            "--budget",
            "1",
            "--input",
            &fixture("malformed.json")
        ]),
        4
    );
    assert_eq!(
        bad(&[
            "solve-budget",
            "--problem",
            "mst",
            "--budget",
            "1",
            "--input",
            &fixture("missing.json")
        ]),
        4
    );
    assert_eq!(
        bad(&["solve-budget", "--problem", "path", "--budget", "1", "--input", &ex1]),
        2
    );
    assert_eq!(
        bad(&["solve-budget", "--problem", "mst", "--budget", "0.5", "--input", &ex1]),
        2
    );
    assert_eq!(bad(&["solve-budget", "--problem", "mst", "--input", &ex1]), 2);
    assert_eq!(
        bad(&[
            "solve-budget",
            "--problem",
            "mst",
            "--algorithm",
            "fixed",
            "--epsilon",
            "1/2",
            "--budget",
            "3",
            "--input",
            &ex1
        ]),
        2
    );
    assert_eq!(
        bad(&[
            "solve-budget",
            "--problem",
            "vc",
            "--algorithm",
            "binary",
            "--budget",
            "3",
            "--input",
            &fixture("vc.json")
        ]),
        2
    );
    assert_eq!(
        bad(&[
            "pareto",
            "--problem",
            "vc",
            "--algorithm",
            "parametric",
            "--input",
            &fixture("vc.json")
        ]),
        2
    );
    assert_eq!(bad(&["frobnicate"]), 2);
}

#[test]
fn parse_errors_name_the_line() {
    let out = run(&["pareto", "--problem", "mst", "--input", &fixture("malformed.json")]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn reports_are_deterministic() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("wall_time_s");
        serde_json::to_string(&v).unwrap()
    };
    let args_sets: Vec<Vec<String>> = vec![
        [
            "solve-budget",
            "--problem",
            "mst",
            "--budget",
            "3",
            "--epsilon",
            "1/4",
            "--input",
        ]
        .iter()
        .map(|s| s.to_string())
        .chain([fixture("ex1.json")])
        .collect(),
        ["pareto", "--problem", "vc", "--epsilon", "1/2", "--input"]
            .iter()
            .map(|s| s.to_string())
            .chain([fixture("vc.json")])
            .collect(),
        vec!["repro".into(), "--case".into(), "marathe-ex1".into()],
    ];
    for args in args_sets {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(strip(run(&args)), strip(run(&args)));
    }
}

#[test]
fn parallel_flag_does_not_change_output() {
    let path = fixture("path.json");
    let base = [
        "pareto",
        "--problem",
        "path",
        "--epsilon",
        "1/4",
        "--input",
        &path,
        "--format",
        "csv",
    ];
    let seq = run(&base);
    let mut with = base.to_vec();
    with.push("--parallel");
    assert_eq!(seq.stdout, run(&with).stdout);
}
