//! End-to-end tests of the `dalg` command line against the golden corpus.

use std::path::{Path, PathBuf};
use std::process::Command;

use double_algebra::cli::{run, InstanceFile, Outcome};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn dalg(args: &[&str]) -> Outcome {
    run(std::iter::once("dalg").chain(args.iter().copied()))
}

/// Instance files of the corpus (the group table `z2.json` is an input, not an instance).
fn instances() -> Vec<PathBuf> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir("corpus"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_stem().is_some_and(|s| s != "z2"))
        .collect();
    paths.sort();
    paths
}

fn stem(path: &Path) -> String {
    path.file_stem().unwrap().to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes_follow_recorded_verdicts() {
    for path in instances() {
        let file = InstanceFile::load(&path).unwrap();
        let out = dalg(&["check", path.to_str().unwrap()]);
        let expected = match &file.expected {
            Some(exp) => i32::from(!exp.suites.values().all(|&ok| ok)),
            None => 1,
        };
        assert_eq!(out.code, expected, "{}: {}{}", stem(&path), out.stdout, out.stderr);
        let verdict = if expected == 0 { "verdict: PASS" } else { "verdict: FAIL" };
        assert!(out.stdout.trim_end().ends_with(verdict), "{}", stem(&path));
    }
}

#[test]
fn broken_instance_names_a_witness() {
    let path = dir("corpus").join("broken_a1.json");
    let out = dalg(&["check", path.to_str().unwrap(), "--suite", "axioms"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("A1") && out.stdout.contains("(e11, e11)"), "{}", out.stdout);
    let report = dalg(&["report", path.to_str().unwrap()]);
    assert_eq!(report.code, 1);
    assert!(report.stdout.contains("double algebra: NO (A1 fails at (e11, e11))"), "{}", report.stdout);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    std::fs::write(&bad, "{\"version\": 1, \"field\": \"Q\", \"dim\": 2}").unwrap();
    let out = dalg(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2, "{}", out.stderr);
    assert!(out.stderr.starts_with("error:"));

    let missing = tmp.path().join("missing.json");
    assert_eq!(dalg(&["report", missing.to_str().unwrap()]).code, 2);
    assert_eq!(dalg(&["construct", "matrix"]).code, 2);
    assert_eq!(dalg(&["frobnicate"]).code, 2);
    assert_eq!(dalg(&["construct", "matrix", "--n", "2", "--field", "Fp:4"]).code, 2);
}

#[test]
fn reports_match_golden_files() {
    for path in instances() {
        let golden = std::fs::read_to_string(dir("golden").join(format!("{}.report.txt", stem(&path)))).unwrap();
        let out = dalg(&["report", path.to_str().unwrap()]);
        assert_eq!(out.stdout, golden, "{}", stem(&path));
    }
}

#[test]
fn matrix_report_prints_the_transpose_antipode() {
    let path = dir("corpus").join("matrix2.json");
    let out = dalg(&["report", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("antipode: yes (S(e11)=e11, S(e12)=e21, S(e21)=e12, S(e22)=e22)"));
}

#[test]
fn instance_files_round_trip_byte_for_byte() {
    for path in instances() {
        let text = std::fs::read_to_string(&path).unwrap();
        let file = InstanceFile::parse(&text).unwrap();
        assert_eq!(file.to_json(), text, "{}", stem(&path));
    }
}

#[test]
fn commands_are_deterministic() {
    let path = dir("corpus").join("hopf_s3.json");
    let p = path.to_str().unwrap();
    assert_eq!(dalg(&["check", p, "--json"]), dalg(&["check", p, "--json"]));
    assert_eq!(dalg(&["report", p, "--json"]), dalg(&["report", p, "--json"]));
    let z2 = dir("corpus").join("hopf_z2.json");
    let args = ["construct", "takeuchi", "--from", z2.to_str().unwrap()];
    let a = dalg(&args);
    let b = dalg(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a, b);
}

fn constructed_dim(args: &[&str]) -> usize {
    let out = dalg(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    InstanceFile::parse(&out.stdout).unwrap().dim
}

#[test]
fn construct_produces_expected_dimensions() {
    let z2 = dir("corpus").join("z2.json");
    assert_eq!(constructed_dim(&["construct", "matrix", "--n", "3"]), 9);
    assert_eq!(constructed_dim(&["construct", "matrix", "--n", "1"]), 1);
    assert_eq!(constructed_dim(&["construct", "hopf-group", "--table", z2.to_str().unwrap()]), 2);
    assert_eq!(constructed_dim(&["construct", "groupoid", "--groupoid", "pair:2+trivial"]), 5);
    assert_eq!(constructed_dim(&["construct", "frobext", "--extension", "trace:2"]), 16);
}

#[test]
fn rejected_construction_exits_one() {
    let out = dalg(&["construct", "commutative", "--algebra", "matrix:2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("fails at"), "{}", out.stderr);
}

#[test]
fn constructed_file_checks_clean_with_out_flag() {
    let tmp = tempfile::tempdir().unwrap();
    let file = tmp.path().join("m2.json");
    let f = file.to_str().unwrap();
    let out = dalg(&["construct", "matrix", "--n", "2", "--out", f]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("wrote "));
    let check = dalg(&["check", f]);
    assert_eq!(check.code, 0, "{}", check.stdout);
    assert!(check.stdout.contains("[expected] PASS"));
}

#[test]
fn field_override_changes_the_maschke_verdict() {
    let path = dir("corpus").join("hopf_z2.json");
    let out = dalg(&["report", path.to_str().unwrap(), "--field", "Fp:2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("field: Fp:2"), "{}", out.stdout);
    assert!(!out.stdout.contains("i regular"), "{}", out.stdout);
}

#[test]
fn binary_matches_library_entry_point() {
    let path = dir("corpus").join("matrix2.json");
    let output = Command::new(env!("CARGO_BIN_EXE_dalg")).arg("report").arg(&path).output().unwrap();
    let lib = dalg(&["report", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), lib.stdout);
}
