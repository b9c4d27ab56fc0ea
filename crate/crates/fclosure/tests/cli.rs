//! End-to-end tests of the `fclosure` binary: exit-code contract, report
//! shape, determinism, and the bundled corpus.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fclosure"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn fclose_on_the_bundled_quartic() {
    let dir = std::env::temp_dir().join("fclosure_cli_fclose");
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("report.json");
    let out = run(&[
        "fclose",
        "--ring",
        "hyp4_p5.ring",
        "--ideal",
        "y^2,z^2",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("x^3*y*z"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["job"]["command"], "fclose");
    assert_eq!(report["job"]["ideal"], "y^2,z^2");
    assert_eq!(report["result"]["certified"], true);
    let gens: Vec<&str> = report["result"]["ideal"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(gens, vec!["z^2", "y^2", "x^3*y*z"]);
}

#[test]
fn exit_codes_follow_the_contract() {
    // 1: precondition failure (not m-primary)
    let out = run(&["fclose", "--ring", "hyp4_p5.ring", "--ideal", "y^2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not m-primary"));

    // 2: cap too small to certify
    let out = run(&[
        "fclose",
        "--ring",
        "hyp4_p5.ring",
        "--ideal",
        "y^2,z^2",
        "--cap-e",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // 1: unknown ring
    let out = run(&["fedder", "--ring", "no_such_ring.ring"]);
    assert_eq!(out.status.code(), Some(1));

    // 0: certified run
    let out = run(&["limclose", "--ring", "regular2_p5.ring", "--gens", "x,y"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("certified"));
}

#[test]
fn ring_files_load_from_disk() {
    let dir = std::env::temp_dir().join("fclosure_cli_disk");
    std::fs::create_dir_all(&dir).unwrap();
    let ring_path: PathBuf = dir.join("node.ring");
    std::fs::write(&ring_path, "char 3\nvars x y\nrel x*y\n").unwrap();
    let out = run(&["length", "--ring", ring_path.to_str().unwrap(), "--ideal", "x+y"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("length: 2"));
}

#[test]
fn reports_are_stable_modulo_timing() {
    let dir = std::env::temp_dir().join("fclosure_cli_stable");
    std::fs::create_dir_all(&dir).unwrap();
    let mut bytes = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.join(name);
        let out = run(&[
            "probe",
            "--ring",
            "quintic_p2.ring",
            "--quantity",
            "len_qF_over_q",
            "--samples",
            "6",
            "--seed",
            "1",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v["timing_ms"] = serde_json::json!(0);
        bytes.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(bytes[0], bytes[1], "same inputs and seed must give identical reports");
    let v: serde_json::Value = serde_json::from_str(&bytes[0]).unwrap();
    assert_eq!(v["result"]["verdict"]["verdict"], "non_constant");
}

#[test]
fn tprobe_and_corgor_run_from_the_cli() {
    let out = run(&[
        "tprobe",
        "--ring",
        "quintic_p2.ring",
        "--ideal",
        "x,y",
        "--element",
        "z^2",
        "--test-element",
        "z^3",
        "--cap-e",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("e <= 4"));

    let out = run(&["corgor", "--ring", "hyp4_p5.ring", "--samples", "6", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("certificate"));
}

#[test]
fn check_corpus_passes() {
    let out = run(&["check-corpus"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS hyp4_p5.ring :: fclose"));
    assert!(!text.contains("FAIL"));
}
