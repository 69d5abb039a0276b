use std::collections::BTreeSet;

use svand::verify::fixtures::{HilbertTable, SchurTable, HILBERT_TABLES, SCHUR_TABLES};
use svand::verify::{
    check_hilbert_table, check_schur_table, emit, find_check, parse_reports, registry, run_check, run_suite, CheckKind,
    CheckReport, Format, Params, Status, SuiteOptions,
};
use svand::Error;

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn stripped(reports: &[CheckReport]) -> Vec<CheckReport> {
    reports.iter().map(CheckReport::without_timing).collect()
}

#[test]
fn registry_is_complete() {
    let ids: BTreeSet<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), registry().len());
    let conjectures: BTreeSet<&str> =
        registry().iter().filter(|c| c.kind == CheckKind::Conjecture).map(|c| c.id).collect();
    for id in ["tanisaki", "double_frobenius", "zabrocki_sr", "unimodality"] {
        assert!(conjectures.contains(id), "{id}");
    }
    for def in registry() {
        assert!(!def.citation.is_empty() && !def.scope.is_empty(), "{}", def.id);
    }
}

#[test]
fn unknown_check_is_an_error() {
    assert!(matches!(run_check("no_such_check", &Params::n(3)), Err(Error::UnknownCheck(_))));
    assert!(matches!(find_check(""), Err(Error::UnknownCheck(_))));
    let opts = SuiteOptions { only: vec!["nope".into()], ..SuiteOptions::new(3) };
    assert!(run_suite(&opts).is_err());
}

#[test]
fn out_of_range_is_skipped_with_reason() {
    let r = run_check("determinant", &Params::n(9)).unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert!(r.notes[0].contains("n ≤ 5"));
    let r = run_check("dimension_hilbert", &Params::n(4)).unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert!(r.notes[0].contains("`k`"));
}

#[test]
fn listed_examples() {
    let r = run_check("small_vandermondes", &Params::n(3)).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.actual[0]["expansion"], "2*x1*x2*t{1}*t{2} - 2*x1*x3*t{1}*t{3} + 2*x2*x3*t{2}*t{3}");
    assert_eq!(run_check("duality", &Params::n(4).with_a(&[2, 1])).unwrap().status, Status::Pass);
    let r = run_check("unimodality", &Params::n(5).with_a(&[2, 2])).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.notes.iter().any(|n| n.contains("not a proof")));
}

#[test]
fn corrupted_schur_fixture_fails_with_minimal_diff() {
    let good = &SCHUR_TABLES[0];
    assert_eq!(check_schur_table(good).status, Status::Pass);
    let rows: &[&[&str]] = &[&["s_3", "s_3 + s_21", "s_21"], &["s_21", "s_21 + 2*s_111", "s_111"]];
    let bad = SchurTable { n: good.n, a: good.a, citation: good.citation, rows };
    let r = check_schur_table(&bad);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.diff.as_deref(), Some("piece (x=1, second=1): coefficient of s_(1,1,1) expected 2, got 1"));
}

#[test]
fn corrupted_hilbert_fixture_fails_with_minimal_diff() {
    let good = &HILBERT_TABLES[0];
    // one entry of the middle row changed
    let rows: &[&[u64]] =
        &[&[1, 5, 15, 29, 39, 35, 20, 6], &[4, 19, 50, 77, 78, 50, 19, 4], &[6, 20, 35, 39, 29, 15, 5, 1]];
    let bad = HilbertTable { n: good.n, a: good.a, citation: good.citation, rows };
    let r = check_hilbert_table(&bad);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.diff.as_deref(), Some("entry (row 1, column 4) expected 78, got 77"));
}

#[test]
fn small_sweep_passes_and_is_deterministic() {
    let opts = SuiteOptions::new(3);
    let one = in_pool(1, || run_suite(&opts).unwrap());
    let four = in_pool(4, || run_suite(&opts).unwrap());
    assert!(one.iter().all(CheckReport::passed), "{:?}", one.iter().find(|r| !r.passed()));
    assert!(one.iter().all(|r| r.status != Status::Skipped));
    // no orphans: every registered check runs at n ≤ 3
    let seen: BTreeSet<&str> = one.iter().map(|r| r.check_id.as_str()).collect();
    assert_eq!(seen, registry().iter().map(|c| c.id).collect());
    assert_eq!(stripped(&one), stripped(&four));
    // ordered by check id, then parameters
    let keys: Vec<(String, Params)> = one.iter().map(|r| (r.check_id.clone(), r.params.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn seed_changes_randomized_checks_only() {
    let a = run_check("leibniz", &Params::default().with_seed(1).with_cases(50)).unwrap();
    let b = run_check("leibniz", &Params::default().with_seed(1).with_cases(50)).unwrap();
    let c = run_check("leibniz", &Params::default().with_seed(2).with_cases(50)).unwrap();
    assert_eq!(a.without_timing(), b.without_timing());
    assert_ne!(a.actual["nontrivial"], serde_json::Value::Null);
    assert_eq!(c.status, Status::Pass);
}

#[test]
fn json_round_trip() {
    let reports =
        run_suite(&SuiteOptions { only: vec!["frobenius_tables".into(), "tanisaki".into()], ..SuiteOptions::new(4) })
            .unwrap();
    let json = emit(&reports, Format::Json).unwrap();
    assert_eq!(parse_reports(&json).unwrap(), reports);
}

#[test]
fn csv_has_one_row_per_report() {
    let reports = run_suite(&SuiteOptions { only: vec!["determinant".into()], ..SuiteOptions::new(3) }).unwrap();
    let csv = emit(&reports, Format::Csv).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "check_id,params,status,kind,origin,runtime_ms,diff");
    assert_eq!(lines.len(), reports.len() + 1);
    assert!(lines[1].starts_with("determinant,\"{\"\"n\"\":1}\",pass,theorem,elementary,"));
}

#[test]
fn latex_renders_w31_matrix() {
    let r = run_check("frobenius_tables", &Params::n(3).with_a(&[1])).unwrap();
    let tex = emit(&[r], Format::Latex).unwrap();
    let want =
        "\\begin{pmatrix}\ns_3 & s_3 + s_{21} & s_{21} \\\\\ns_{21} & s_{21} + s_{111} & s_{111} \\\\\n\\end{pmatrix}";
    assert!(tex.contains(want), "{tex}");
    assert!(tex.contains("frobenius\\_tables & \\texttt{"));
}

#[test]
fn tanisaki_outside_entry_bound_fails_honestly() {
    // a = (2,0) at n = 4: the fitting Q'_λ has three parts, not two
    let r = run_check("tanisaki", &Params::n(4).with_a(&[2, 0])).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.diff.unwrap().contains("Q'_(2,1,1)"));
    let r = run_check("tanisaki", &Params::n(4).with_a(&[1, 1])).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.actual["lambda"], serde_json::json!([2, 2]));
}

#[test]
fn projection_check_reports_assumption() {
    let r = run_check("zabrocki_projection", &Params::n(3).with_k(2)).unwrap();
    assert_eq!(r.status, Status::Assumption);
    assert!(r.passed());
    assert!(!r.notes.is_empty());
}
