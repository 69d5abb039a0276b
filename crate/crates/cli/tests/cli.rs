use std::process::{Command, Output};

fn svand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svand")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn delta_prints_expansion() {
    let o = svand(&["delta", "--n", "3", "--a", "1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2*x1*x2*t{1}*t{2} - 2*x1*x3*t{1}*t{3} + 2*x2*x3*t{2}*t{3}");
}

#[test]
fn empty_sequence_is_classical_vandermonde() {
    let o = svand(&["delta", "--n", "2", "--a", ""]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1*x1 - 1*x2");
}

#[test]
fn hilbert_matrix_of_w3() {
    let o = svand(&["hilb", "--space", "W", "--n", "3", "--a", "1"]);
    assert_eq!(stdout(&o), "1 3 2\n2 3 1\n");
}

#[test]
fn build_reports_dimension() {
    let o = svand(&["build", "--space", "M", "--n", "3"]);
    assert!(stdout(&o).starts_with("dim 16\n"));
}

#[test]
fn frobenius_latex() {
    let o = svand(&["frob", "--space", "W", "--n", "3", "--a", "1", "--basis", "schur", "--format", "latex"]);
    assert!(stdout(&o).contains("s_3 & s_3 + s_{21} & s_{21}"));
}

#[test]
fn exit_codes() {
    assert_eq!(svand(&["check", "duality", "--n", "4", "--a", "2,1"]).status.code(), Some(0));
    assert_eq!(svand(&["check", "no_such_check"]).status.code(), Some(2));
    // outside the range where a λ with the predicted length exists
    assert_eq!(svand(&["check", "tanisaki", "--n", "4", "--a", "2,0"]).status.code(), Some(1));
    // skipped is not a failure
    assert_eq!(svand(&["check", "determinant", "--n", "9"]).status.code(), Some(0));
}

#[test]
fn suite_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = Command::new(env!("CARGO_BIN_EXE_svand"))
        .args(["suite", "--max-n", "2", "--seed", "11", "--out", path.to_str().unwrap()])
        .env("SVAND_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    let reports = svand::verify::parse_reports(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.passed()));
    let seeded = reports.iter().find(|r| r.check_id == "leibniz").unwrap();
    assert_eq!(seeded.params.seed, Some(11));
}

#[test]
fn csv_and_latex_formats() {
    let csv = stdout(&svand(&["check", "frobenius_tables", "--n", "3", "--a", "1", "--format", "csv"]));
    assert!(csv.starts_with("check_id,params,status,kind,origin,runtime_ms,diff\nfrobenius_tables,"));
    let tex = stdout(&svand(&["check", "frobenius_tables", "--n", "3", "--a", "1", "--format", "latex"]));
    assert!(tex.contains("\\begin{tabular}") && tex.contains("\\begin{pmatrix}"));
}
