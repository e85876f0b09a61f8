use std::path::Path;

use serde_json::Value;

use nearmis::cli::run;
use nearmis::report::{ErrorReport, RunReport};

fn nearmis(args: &[&str]) -> (String, String, i32) {
    run(std::iter::once("nearmis").chain(args.iter().copied()))
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

const C5: &str = "c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn decide_on_five_cycle_is_yes_by_p2() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", C5);
    let (out, err, code) = nearmis(&["decide", &c5, "--k", "1"]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    assert_eq!(v["command"], "decide");
    assert_eq!(v["result"]["kind"], "decision");
    assert_eq!(v["result"]["answer"], "YES");
    assert_eq!(v["result"]["resolved_at"], "P2_BOUND");
    assert_eq!(v["result"]["p"], 3);
    assert_eq!(v["result"]["certificate"]["p2"], 2);
    let report: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), out);
}

#[test]
fn tight_family_bounds_and_no_answer() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h10_4.el");
    let (_, err, code) = nearmis(&[
        "gen", "--family", "h_np", "--args", "10", "4", "--seed", "1",
        "--out", h.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let (out, _, code) = nearmis(&["bounds", h.to_str().unwrap(), "--p2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!([&v["result"]["p"], &v["result"]["p1"], &v["result"]["p2"]], [4, 4, 4]);

    let (out, _, code) = nearmis(&["decide", h.to_str().unwrap(), "--k", "1"]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["result"]["answer"], "NO");
    let witness = v["result"]["certificate"]["vertices"].as_array().unwrap();
    assert_eq!(witness.len(), 4);
    assert!(witness.iter().all(|x| x.as_u64().unwrap() >= 6));
}

#[test]
fn external_ids_appear_in_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    // star with centre 100 and leaves 7, 8, 9, 10
    let star = write(dir.path(), "star.txt", "100 7\n100 8\n100 9\n100 10\n");
    let (out, _, code) = nearmis(&["oracle", &star, "--alpha"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["alpha"]["value"], 4);
    assert_eq!(v["result"]["alpha"]["witness"], serde_json::json!([7, 8, 9, 10]));
    assert!(v["result"].get("min_vc").is_none());
}

#[test]
fn errors_are_json_with_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let mut k9 = String::from("p edge 9 36\n");
    for u in 1..=9 {
        for v in u + 1..=9 {
            k9.push_str(&format!("e {u} {v}\n"));
        }
    }
    let k9 = write(dir.path(), "k9.col", &k9);
    let (out, err, code) = nearmis(&["decide", &k9, "--k", "1"]);
    assert_eq!((out.as_str(), code), ("", 2));
    let e: ErrorReport = serde_json::from_str(&err).unwrap();
    assert_eq!(e.error.kind, "parameter");

    let bad = write(dir.path(), "bad.col", "p edge 3 1\ne 1 4\n");
    let (_, err, code) = nearmis(&["bounds", &bad]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "parse");

    let (_, err, code) = nearmis(&["bounds", "/nonexistent/g.col"]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "io");

    let (_, err, code) = nearmis(&["decide", &k9]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "usage");

    let (out, _, code) = nearmis(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("decide"));
}

#[test]
fn node_limit_reports_a_resource_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("d1.el");
    let (_, err, code) = nearmis(&[
        "extremal", "generate", "--family", "k3_d1", "--p", "15", "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let g = g.to_str().unwrap();
    let (_, err, code) = nearmis(&["decide", g, "--k", "3", "--skip-bound-steps", "--node-limit", "1"]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "resource");

    let (out, _, code) = nearmis(&["decide", g, "--k", "3", "--skip-bound-steps"]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["result"]["resolved_at"], "VC_SEARCH");
    assert_eq!(v["result"]["certificate"]["vertices"].as_array().unwrap().len(), 13);
}

#[test]
fn kernel_emit_writes_the_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    let (_, err, code) = nearmis(&[
        "gen", "--family", "join(complete(2),union(cycle(5),empty(3)))", "--seed", "0",
        "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let emitted = dir.path().join("kernel.el");
    let (out, _, code) = nearmis(&[
        "kernel", g.to_str().unwrap(), "--k", "3", "--emit", emitted.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["removed"], serde_json::json!([0, 1]));
    assert_eq!(v["result"]["n0"], 8);
    let text = std::fs::read_to_string(&emitted).unwrap();
    assert!(text.starts_with("# n = 8, m = 5"));
}

#[test]
fn extremal_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("d3.el");
    let (_, err, code) = nearmis(&[
        "extremal", "generate", "--family", "k3_d3", "--p", "15", "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let (out, err, code) = nearmis(&[
        "extremal", "classify", g.to_str().unwrap(), "--p", "15", "--k", "3",
    ]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    assert_eq!(v["result"]["family_tag"], "k3_d3");
    assert_eq!(v["result"]["r"], 3);

    let (_, err, code) = nearmis(&[
        "extremal", "generate", "--family", "k1_a", "--p", "3", "--choice", "random",
        "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "usage");

    let (out, _, code) = nearmis(&["extremal", "enumerate", "--p", "3", "4"]);
    assert_eq!(code, 0);
    let v = json(&out);
    for entry in v["result"]["entries"].as_array().unwrap() {
        assert_eq!(entry["unmatched"], 0);
    }
}
