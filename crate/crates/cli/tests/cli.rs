//! End-to-end tests of the `supergrade` binary: the documented example
//! invocations, the exit-code contract, and .slsa round-trip stability.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_BIN_EXE_supergrade"));
    assert!(p.exists(), "{} missing", p.display());
    p = p.canonicalize().unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_spe3() {
    let out = run(&["construct", "spe", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("basis ")).count(), 17);
    assert!(text.contains("dim (8|9) JACOBI PASS"), "{}", text);
}

#[test]
fn construct_spe2_is_a_usage_error() {
    let out = run(&["construct", "spe", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("spe requires n>=3"));
}

#[test]
fn construct_w3() {
    let out = run(&["construct", "W", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim (12|12)"));
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["construct", "spe", "--bogus", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn derivations_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let spe = dir.path().join("spe3.slsa");
    let psq = dir.path().join("psq3.slsa");
    assert!(run(&["construct", "spe", "--n", "3", "--out", spe.to_str().unwrap()])
        .status
        .success());
    assert!(run(&["construct", "psq", "--n", "3", "--out", psq.to_str().unwrap()])
        .status
        .success());

    let out = run(&["derivations", spe.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("CHECK out expected=(1|0) computed=(1|0) PASS"));

    let out = run(&["derivations", psq.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("CHECK out expected=(0|1) computed=(0|1) PASS"));
}

#[test]
fn derivations_unfixtured() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ab2.slsa");
    std::fs::write(&path, "name ab2\nfield Q\nbasis 0 even x\nbasis 1 even y\n").unwrap();
    let out = run(&["derivations", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("UNFIXTURED"));
}

#[test]
fn gradings_spe3() {
    let out = run(&["gradings", "spe", "--n", "3", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // the four one-piece-per-side rows plus the height-2 row
    for row in ["k=-1/", "k=+1/", "node1/", "node2/", "first-k2/"] {
        assert!(text.contains(row), "missing {row} in {text}");
    }
    assert!(text.contains("first-k2/depth-height expected=(1, 2)"));
    assert!(text.trim_end().ends_with("OVERALL PASS"));
}

#[test]
fn gradings_psl22() {
    let out = run(&["gradings", "psl", "--m", "1", "--n", "1", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for row in ["row1/", "row2/", "row3/"] {
        assert!(text.contains(row), "missing {row}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn gradings_out_of_scope() {
    let out = run(&["gradings", "ab3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "DOCUMENTED-ONLY");
}

#[test]
fn theorem_main1_osp12() {
    let out = run(&[
        "theorem", "main1", "--s", "osp(1|2)", "--n", "1", "--case", "II", "--F",
        "section:identity",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("OVERALL PASS"));
}

#[test]
fn theorem_block_expected_fail() {
    let out = run(&["theorem", "block", "--s", "spe3", "--n", "1", "--F", "lambda-plus"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("not admissible"));
    assert!(text.contains("CHECK four-properties-fail expected=true computed=true PASS"));
    assert!(text.trim_end().ends_with("OVERALL PASS"));
}

#[test]
fn theorem_lemmetto_psl22_mid() {
    let out = run(&["theorem", "lemmetto", "--s", "psl22", "--grading", "mid"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("d(der)=2"));
}

#[test]
fn slsa_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["construct", "spe", "--n", "3"],
        &["construct", "psq", "--n", "3"],
        &["construct", "psl", "--n", "2"],
        &["construct", "osp", "--m", "3", "--n", "2"],
        &["construct", "W", "--n", "3"],
        &["construct", "S", "--n", "4"],
        &["construct", "spe", "--n", "3", "--grading", "first-k2"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let p1 = dir.path().join(format!("a{i}.slsa"));
        let p2 = dir.path().join(format!("b{i}.slsa"));
        let mut a1: Vec<&str> = args.to_vec();
        a1.extend(["--out", p1.to_str().unwrap()]);
        assert!(run(&a1).status.success(), "{:?}", args);
        // `check` re-serializes internally and verifies equality; also
        // perform the comparison here against a second build
        let mut a2: Vec<&str> = args.to_vec();
        a2.extend(["--out", p2.to_str().unwrap()]);
        assert!(run(&a2).status.success());
        let t1 = std::fs::read(&p1).unwrap();
        let t2 = std::fs::read(&p2).unwrap();
        assert_eq!(t1, t2, "non-deterministic output for {:?}", args);
        let out = run(&["check", p1.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).contains("CHECK round-trip expected=true computed=true PASS"));
    }
}

#[test]
fn check_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.slsa");
    std::fs::write(&path, "name x\nfield Q\nbasis 0 even a\nbracket 1 0 0:1\n").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn filtration_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spe3g.slsa");
    assert!(run(&[
        "construct", "spe", "--n", "3", "--grading", "k-1", "--out",
        path.to_str().unwrap()
    ])
    .status
    .success());
    let out = run(&["filtration", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("CHECK residual expected=0 computed=0 PASS"));
    assert!(text.contains("graded-jacobi"));
}

#[test]
fn tables_single() {
    let out = run(&["tables", "psq"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("OVERALL PASS"));
    let out = run(&["tables", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["gradings", "psq", "--n", "3"]);
    let b = run(&["gradings", "psq", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let rpt = dir.path().join("psq.srpt");
    let out = run(&["gradings", "psq", "--n", "3", "--out", rpt.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&rpt).unwrap();
    assert_eq!(text, stdout(&out));
}

#[test]
fn max_n_cap() {
    let out = Command::new(bin())
        .args(["construct", "W", "--n", "5"])
        .env("SUPERGRADE_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin())
        .args(["construct", "W", "--n", "5"])
        .env("SUPERGRADE_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}
