use std::path::PathBuf;
use std::process::{Command, Output};

use omplab::ModelReport;

fn models() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/models")
}

fn proofs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/proofs")
}

fn omplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omplab"))
        .args(args)
        .output()
        .expect("omplab runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn model(name: &str) -> String {
    models().join(name).to_string_lossy().into_owned()
}

#[test]
fn validate_hexagon_fails_with_witness() {
    let o = omplab(&["validate", &model("hexagon.omp")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness (a,b)"), "{}", stdout(&o));
}

#[test]
fn axioms_on_mo2_pass() {
    let o = omplab(&["axioms", &model("mo2.omp")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("O1..O10: pass"));
}

#[test]
fn arrow_pair_on_even6_prints_three_names() {
    let o = omplab(&["arrow", &model("even6.omp"), "--pair", "{1,2}", "{1,3}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{1,2} → {1,3} = {{1,3,4,5}, {1,3,4,6}, {1,3,5,6}}\n");
}

#[test]
fn json_reports_round_trip() {
    for args in [
        vec!["--json", "validate", &model("hexagon.omp")],
        vec!["--json", "axioms", &model("b8.iop")],
        vec!["--json", "condc", &model("mo3.omp")],
    ] {
        let o = omplab(&args.iter().map(|s| s.as_ref()).collect::<Vec<&str>>());
        let text = stdout(&o);
        let r: ModelReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
        assert_eq!(o.status.code(), Some(if r.passed() { 0 } else { 1 }));
    }
    let o = omplab(&["--json", "validate", &model("hexagon.omp")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let b = &v["items"][0]["witness"]["bindings"];
    assert_eq!(b[0]["name"], "a");
    assert_eq!(b[0]["index"], 1);
}

#[test]
fn usage_and_load_errors_exit_two() {
    assert_eq!(omplab(&["validate", "missing.omp"]).status.code(), Some(2));
    assert_eq!(omplab(&["nonsense"]).status.code(), Some(2));
    assert_eq!(omplab(&["validate", &model("mo2.iop")]).status.code(), Some(2));
    assert_eq!(omplab(&["arrow", &model("mo2.omp"), "--pair", "a", "zz"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.omp");
    std::fs::write(&bad, "elements 2\nzero 0 one 1\ncover 1 0\n").unwrap();
    let o = omplab(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn prove_check_reads_declared_hypotheses() {
    let ok = proofs().join("top-elimination.prf");
    assert_eq!(omplab(&["prove", "check", ok.to_str().unwrap()]).status.code(), Some(0));
    let bad = proofs().join("corrupted/top-elimination.prf");
    let o = omplab(&["prove", "check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("at line 2"));
}

#[test]
fn prove_check_with_extra_hypothesis_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("mp.prf");
    std::fs::write(&f, "1. |- p ; HYP [1]\n2. |- (p->q) ; HYP [2]\n3. |- q ; MP [1,2]\n").unwrap();
    let f = f.to_str().unwrap();
    assert_eq!(omplab(&["prove", "check", f, "--hyp", "|- p"]).status.code(), Some(1));
    assert_eq!(
        omplab(&["prove", "check", f, "--hyp", "|- p", "--hyp", "|- p -> q"]).status.code(),
        Some(0)
    );
}

#[test]
fn search_enum_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = omplab(&["search", "enum", "--n", "6", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("n=6: 2 classes\n"));
    let mut files: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    files.sort();
    assert_eq!(files, ["n6-000.omp", "n6-001.omp"]);
}

#[test]
fn search_scan_and_findc() {
    let o = omplab(&["search", "scan", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=6: 2 classes, 1 orthomodular, 1 not, 0 discrepancies"));
    let o = omplab(&["search", "findc", "--n", "4"]);
    assert!(stdout(&o).starts_with("found: n=4 #0 with a → a' changed from {a'} to {0, a'}"));
    let table = stdout(&o).split_once('\n').unwrap().1.to_string();
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("v.iop");
    std::fs::write(&f, table).unwrap();
    let f = f.to_str().unwrap();
    assert_eq!(omplab(&["axioms", f]).status.code(), Some(0));
    assert_eq!(omplab(&["condc", f]).status.code(), Some(1));
    let o = omplab(&["roundtrip", f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(C) violated"));
}

#[test]
fn thread_cap_is_honoured_and_validated() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_omplab"))
            .args(["soundness", &model("mo2.omp")])
            .env("OMPLAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, omplab(&["soundness", &model("mo2.omp")]).stdout);
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let o = omplab(&["catalog", "list"]);
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = omplab(&["catalog", "dump", "hexagon"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(models().join("hexagon.omp")).unwrap());
    assert_eq!(omplab(&["catalog", "dump", "nope"]).status.code(), Some(2));
}
