//! The `homlab` binary: exit codes, report contents and witness files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn homlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlab")).args(args).env_remove("HOMLAB_SEED").output().unwrap()
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_ext_of_simple() {
    let k = data("k.json");
    let out = homlab(&[
        "compute",
        "ext",
        "--m",
        arg(&k),
        "--n",
        arg(&k),
        "--bound",
        "6",
        "--algebra",
        arg(&data("k2x.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["schema_version"], "1");
    assert_eq!(r[0]["payload"]["ext"]["dims"], serde_json::json!([1, 1, 1, 1, 1, 1, 1]));
}

#[test]
fn every_compute_op_succeeds() {
    for op in ["transpose", "sigma", "dual", "profile"] {
        let out = homlab(&["compute", op, "--m", arg(&data("k_plane.json"))]);
        assert_eq!(out.status.code(), Some(0), "{op}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(records(&out)[0]["payload"]["kind"], op);
    }
    let out = homlab(&["compute", "sigma", "--m", arg(&data("k_plane.json"))]);
    assert_eq!(records(&out)[0]["payload"]["sigma"]["cokernel_dim"], 3);
    let k = data("k.json");
    let out = homlab(&["compute", "tensor", "--m", arg(&k), "--n", arg(&k)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["payload"]["dim"], 1);
}

#[test]
fn verify_exhaustive_has_no_violations() {
    let out = homlab(&[
        "verify",
        "--predicate",
        "thm3.4",
        "--algebra",
        arg(&data("k2xy.json")),
        "--max-dim",
        "3",
        "--exhaustive",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r[0]["payload"]["violations"], 0);
    assert_eq!(r[0]["payload"]["applicable"], true);
    assert_eq!(r[0]["job"]["seed"], 7);
}

#[test]
fn preconditions_gate_records() {
    let out = homlab(&[
        "verify",
        "--predicate",
        "thm3.4,thm4.6",
        "--algebra",
        arg(&data("quiver_a2.json")),
        "--max-dim",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|x| x["payload"]["applicable"] == false));
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(homlab(&["verify", "--predicate", "thm3.4"]).status.code(), Some(1));
    assert_eq!(homlab(&["verify", "--predicate", "nope", "--algebra", arg(&data("k2x.json"))]).status.code(), Some(1));
    assert_eq!(homlab(&["compute", "ext", "--m", "/missing.json"]).status.code(), Some(1));
    assert_eq!(homlab(&["enumerate", "--algebra", arg(&data("k2x.json")), "--bound", "0"]).status.code(), Some(1));
    assert_eq!(homlab(&["frobnicate"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"quiver\",\n  \"field\": {\"p\": 2},\n  oops\n}").unwrap();
    let out = homlab(&["enumerate", "--algebra", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json:4"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn candidates_exit_two_and_leave_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let alg = data("cycle8.json");
    let out = homlab(&[
        "verify",
        "--predicate",
        "gnc_bounded",
        "--algebra",
        arg(&alg),
        "--bound",
        "3",
        "--max-dim",
        "1",
        "--out",
        arg(&report),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let line = std::fs::read_to_string(&report).unwrap();
    let r: Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    let hash = r["payload"]["witnesses"][0]["content_hash"].as_str().unwrap().to_string();
    let witness = dir.path().join(format!("{hash}.json"));
    assert!(witness.exists());

    // The witness file alone reproduces the module.
    let out = homlab(&["compute", "profile", "--m", arg(&witness), "--bound", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["payload"]["m"], hash.as_str());

    let out = homlab(&["report", arg(&report)]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CANDIDATE (bounded)"));
    assert!(text.contains(&hash));

    let out = homlab(&[
        "search",
        "--predicate",
        "thm4.7",
        "--algebra",
        arg(&alg),
        "--bound",
        "3",
        "--max-dim",
        "1",
        "--samples",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_digest() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    std::fs::write(&report, "").unwrap();
    let out = homlab(&["report", arg(&report)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "no records");

    let out = homlab(&[
        "verify",
        "--predicate",
        "thm4.7",
        "--algebra",
        arg(&data("k2x.json")),
        "--max-dim",
        "3",
        "--out",
        arg(&report),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut text = std::fs::read_to_string(&report).unwrap();
    text.push_str("{not json\n");
    std::fs::write(&report, text).unwrap();
    let out = homlab(&["report", arg(&report)]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().ends_with("OK"), "{text}");
    assert!(text.contains("line 2: malformed record"));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn payloads_are_deterministic_across_workers() {
    let payloads = |workers: &str| {
        let out = homlab(&[
            "verify",
            "--predicate",
            "all",
            "--algebra",
            arg(&data("product.json")),
            "--max-dim",
            "3",
            "--samples",
            "16",
            "--seed",
            "3",
            "--workers",
            workers,
        ]);
        assert_eq!(out.status.code(), Some(0));
        records(&out).into_iter().map(|r| r["payload"].to_string()).collect::<Vec<_>>()
    };
    assert_eq!(payloads("1"), payloads("3"));
}

#[test]
fn seed_falls_back_to_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_homlab"))
        .args(["enumerate", "--algebra", arg(&data("k2x.json")), "--max-dim", "2"])
        .env("HOMLAB_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(records(&out)[0]["job"]["seed"], 99);
}
