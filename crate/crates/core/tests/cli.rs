use std::path::PathBuf;
use std::process::Command;

use grouplab::cli::{run_with, EXIT_CAP, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("grouplab").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("grouplab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_pass_and_cap() {
    let (code, out, err) = run(&["verify", "--check", "THM_SUBN2", "--group", "sym:4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS"));
    assert_eq!(err.trim(), "1/0/0");

    let (code, out, _) = run(&["--json", "verify", "--check", "THM_SUBN2,KW", "--group", "sym:4"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["witness"], Value::Null);
    assert_eq!(v[0]["ms"], Value::Null);

    let (code, out, _) = run(&["verify", "--check", "THM_SUBN2", "--group", "alt:10", "--json"]);
    assert_eq!(code, EXIT_CAP);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert!(v[0]["reason"].as_str().unwrap().contains("cap"));
}

#[test]
fn usage_errors() {
    for args in [
        &["frobnicate"][..],
        &["verify", "--check", "NOPE", "--group", "sym:3"],
        &["verify", "--check", "KW", "--group", "sym:x"],
        &["verify", "--check", "KW", "--group", "nosuch:3"],
        &["probe", "--kind", "NOPE"],
        &["analyze"],
        &["relorder", "--group", "sym:3", "--subgroup", "/nonexistent/gens", "--element", "(1 2)"],
        &["verify-all", "--threads", "0"],
        &["--max-order", "abc", "analyze", "--group", "sym:3"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-all"));
}

#[test]
fn analyze_and_caps() {
    let (code, out, _) = run(&["analyze", "--group", "sym:4"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["exponent"], 12);
    assert_eq!(v["fitting_order"], 4);
    assert_eq!(v["sylow"]["2"]["count"], 3);
    assert_eq!(v["sylow"]["3"]["order"], 3);
    assert_eq!(v["solvable"], true);
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["center_order"], 1);

    let (code, _, _) = run(&["--max-order", "20", "analyze", "--group", "sym:4"]);
    assert_eq!(code, EXIT_CAP);
    let (code, _, _) = run(&["--max-subgroups", "10", "analyze", "--group", "sym:4"]);
    assert_eq!(code, EXIT_CAP);
}

#[test]
fn probes() {
    let (code, out, _) = run(&["--json", "probe", "--kind", "POWERSET_NOT_CLOSED", "--group", "sym:3"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["witness"]["H"]["generators"][0], "(1 2)");
    assert_eq!(v[0]["witness"]["set_size"], 4);

    let (code, _, _) = run(&["probe", "--kind", "EXP_JOIN_FAIL", "--group", "sym:3"]);
    assert_eq!(code, EXIT_FAILED);
    let (code, _, _) = run(&["probe", "--kind", "EXP_NOT_INHERITED"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = run(&["probe", "--kind", "ALT10"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = run(&["probe", "--kind", "ALT10", "--group", "sym:3"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn s_set_and_relorder() {
    let (code, out, _) = run(&["--json", "s-set", "--group", "dih:12"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["s_set"]["order"], 6);
    assert_eq!(v["equal"], true);

    let gens = scratch("h.txt");
    std::fs::write(&gens, "# the subgroup <(1 2)>\ndegree 3\n(1 2)\n").unwrap();
    let g = gens.to_str().unwrap();
    let (code, out, _) = run(&["--json", "relorder", "--group", "sym:3", "--subgroup", g, "--element", "(1 2 3)"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["relative_order"], "3");
    let (_, out, _) = run(&["--json", "relorder", "--group", "sym:3", "--subgroup", g, "--element", "(1 3)"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["relative_order"], "2");
    let (code, _, _) = run(&["relorder", "--group", "cyc:3", "--subgroup", g, "--element", "(1 2 3)"]);
    assert_eq!(code, EXIT_USAGE);

    // works without a lattice, through membership tests
    let m10 = scratch("m10.txt");
    let text = format!("degree 10\n{}\n", grouplab::group::M10_GENERATORS.join("\n"));
    std::fs::write(&m10, text).unwrap();
    let (code, out, _) = run(&[
        "--json", "relorder", "--group", "alt:10", "--subgroup", m10.to_str().unwrap(),
        "--element", "(1 2 3 4 5 6 7)",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["element_order"], "7");
    assert_eq!(v["relative_order"], "7");
}

#[test]
fn lattice_dot_to_file_and_stdout() {
    let (code, out, _) = run(&["lattice", "--group", "sym:3", "--dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph lattice {"));
    assert!(out.contains("s4 [label=\"3/2\", shape=doublecircle, style=filled, fillcolor=lightgray];"));
    assert!(out.contains("s1 [label=\"2/3\"];"));

    let path = scratch("s3.dot");
    let (code, _, _) = run(&["lattice", "--group", "sym:3", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);

    let (code, out, _) = run(&["--json", "lattice", "--group", "q8"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["subgroups"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let (code, one, err) = run(&["--json", "verify-all", "--threads", "1"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let (_, four, _) = run(&["--json", "verify-all", "--threads", "4"]);
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.iter().all(|x| x["status"] != "fail"));
    assert_eq!(arr.last().unwrap()["check"], "ALT10");
    let summary: Vec<usize> = err.trim().split('/').map(|s| s.parse().unwrap()).collect();
    assert_eq!(summary[0] + summary[2], arr.len());
    assert_eq!(summary[1], 0);
    assert_eq!(summary[2], 44);

    let (code, corpus_only, _) = run(&["--json", "verify-all", "--corpus-only"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&corpus_only).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 40 * 22);
}

#[test]
fn binary_forwards_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_grouplab");
    let status = Command::new(bin)
        .args(["verify", "--check", "PROP_SUBN", "--group", "dih:12"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = Command::new(bin)
        .args(["verify", "--check", "PROP_SUBN", "--group", "sym:6"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_CAP));
    let status = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
}
