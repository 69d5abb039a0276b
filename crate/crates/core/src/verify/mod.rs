//! Check registry, reports and their serializations.
//!
//! Every check is a named job with one cited statement. [`run_check`] runs a
//! single parameter set and [`run_suite`] walks the default grid of every
//! selected check up to a maximum `n`.

mod checks;
pub mod fixtures;
pub mod properties;

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use checks::{check_hilbert_table, check_schur_table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Consistent, but only under an assumption recorded in the notes.
    Assumption,
}

/// Whether a passing check confirms a proved statement or is only evidence
/// for a conjecture at the tested scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Transcribed from a published table or worked example.
    Published,
    /// Immediate from the definitions.
    Elementary,
    /// Computed by an independent route (a formula, an enumeration or a
    /// second algorithm).
    Independent,
}

/// Parameters of one check run. Unused fields stay `None` and are omitted
/// from the serialized map.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params { n: Some(n), ..Params::default() }
    }

    pub fn with_k(mut self, k: usize) -> Params {
        self.k = Some(k);
        self
    }

    pub fn with_s(mut self, s: u32) -> Params {
        self.s = Some(s);
        self
    }

    pub fn with_r(mut self, r: usize) -> Params {
        self.r = Some(r);
        self
    }

    pub fn with_a(mut self, a: &[u32]) -> Params {
        self.a = Some(a.to_vec());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Params {
        self.seed = Some(seed);
        self
    }

    pub fn with_cases(mut self, cases: usize) -> Params {
        self.cases = Some(cases);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: Params,
    pub status: Status,
    pub kind: CheckKind,
    pub citation: String,
    pub expected: Expected,
    pub actual: Value,
    pub runtime_ms: u64,
    /// First point of disagreement; always present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    /// The report with its wall-clock time zeroed, for comparing runs.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport { runtime_ms: 0, ..self.clone() }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Assumption)
    }
}

/// What a check body returns; [`run_check`] adds the registry metadata.
#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    status: Status,
    expected: Value,
    origin: Origin,
    actual: Value,
    diff: Option<String>,
    notes: Vec<String>,
}

impl Outcome {
    /// Pass iff `diff` is `None`.
    fn compare(expected: Value, origin: Origin, actual: Value, diff: Option<String>) -> Outcome {
        let status = if diff.is_some() { Status::Fail } else { Status::Pass };
        Outcome { status, expected, origin, actual, diff, notes: Vec::new() }
    }

    fn skipped(reason: impl Into<String>) -> Outcome {
        Outcome {
            status: Status::Skipped,
            expected: Value::Null,
            origin: Origin::Elementary,
            actual: Value::Null,
            diff: None,
            notes: vec![reason.into()],
        }
    }

    fn note(mut self, note: impl Into<String>) -> Outcome {
        self.notes.push(note.into());
        self
    }
}

/// A registered check.
pub struct CheckDef {
    pub id: &'static str,
    pub kind: CheckKind,
    pub citation: &'static str,
    /// Human-readable summary of the default parameter grid.
    pub scope: &'static str,
    run: fn(&Params) -> Result<Outcome>,
    grid: fn(&SuiteOptions) -> Vec<Params>,
}

/// Every registered check, in suite order.
pub fn registry() -> &'static [CheckDef] {
    checks::REGISTRY
}

pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check. Unknown ids are errors; unsupported parameters give a
/// skipped report, and a computation error gives a failed one.
pub fn run_check(id: &str, params: &Params) -> Result<CheckReport> {
    let def = find_check(id)?;
    let start = Instant::now();
    Ok(finish(def, params, (def.run)(params), start))
}

fn finish(def: &CheckDef, params: &Params, outcome: Result<Outcome>, start: Instant) -> CheckReport {
    let outcome = outcome.unwrap_or_else(|e| Outcome {
        status: Status::Fail,
        expected: Value::Null,
        origin: Origin::Elementary,
        actual: Value::Null,
        diff: Some(format!("error: {e}")),
        notes: Vec::new(),
    });
    CheckReport {
        check_id: def.id.to_string(),
        params: params.clone(),
        status: outcome.status,
        kind: def.kind,
        citation: def.citation.to_string(),
        expected: Expected { value: outcome.expected, origin: outcome.origin },
        actual: outcome.actual,
        runtime_ms: start.elapsed().as_millis() as u64,
        diff: outcome.diff,
        notes: outcome.notes,
    }
}

/// Suite selection.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_n: usize,
    /// Check ids to run; empty means all.
    pub only: Vec<String>,
    /// Lift the default caps (W-spaces at n = 6, SR_n at n = 4).
    pub large: bool,
    /// Seed for the randomized checks.
    pub seed: u64,
}

impl SuiteOptions {
    pub fn new(max_n: usize) -> SuiteOptions {
        SuiteOptions { max_n, only: Vec::new(), large: false, seed: properties::DEFAULT_SEED }
    }
}

/// Runs the default grid of every selected check. Reports are ordered by
/// check id, then parameters.
pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    for id in &opts.only {
        find_check(id)?;
    }
    let mut jobs: Vec<(&'static str, Params)> = Vec::new();
    for def in registry() {
        if opts.only.is_empty() || opts.only.iter().any(|o| o == def.id) {
            jobs.extend((def.grid)(opts).into_iter().map(|p| (def.id, p)));
        }
    }
    jobs.sort();
    jobs.iter().map(|(id, p)| run_check(id, p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn tex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}").replace('_', "\\_").replace('&', "\\&").replace('%', "\\%").replace('#', "\\#")
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
        Status::Assumption => "assumption",
    }
}

pub fn emit(reports: &[CheckReport], format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).map_err(|e| Error::Parse(e.to_string())),
        Format::Csv => {
            let mut out = String::from("check_id,params,status,kind,origin,runtime_ms,diff\n");
            for r in reports {
                let params = serde_json::to_string(&r.params).map_err(|e| Error::Parse(e.to_string()))?;
                let origin = serde_json::to_value(r.expected.origin).map_err(|e| Error::Parse(e.to_string()))?;
                let kind = serde_json::to_value(r.kind).map_err(|e| Error::Parse(e.to_string()))?;
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.check_id,
                    csv_field(&params),
                    status_name(r.status),
                    kind.as_str().unwrap_or_default(),
                    origin.as_str().unwrap_or_default(),
                    r.runtime_ms,
                    csv_field(r.diff.as_deref().unwrap_or(""))
                );
            }
            Ok(out)
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llll}\ncheck & parameters & status & ms \\\\\n\\hline\n");
            for r in reports {
                let params = serde_json::to_string(&r.params).map_err(|e| Error::Parse(e.to_string()))?;
                let _ = writeln!(
                    out,
                    "{} & \\texttt{{{}}} & {} & {} \\\\",
                    tex_escape(&r.check_id),
                    tex_escape(&params),
                    status_name(r.status),
                    r.runtime_ms
                );
            }
            out.push_str("\\end{tabular}\n");
            // Frobenius tables: rows are the θ-degree, columns the x-degree
            for r in reports {
                if let Some(m) = r.actual.get("latex").and_then(Value::as_str) {
                    let _ = writeln!(
                        out,
                        "\n% {} {}\n\\begin{{equation*}}\n{m}\n\\end{{equation*}}",
                        r.check_id,
                        tex_escape(&r.citation)
                    );
                }
            }
            Ok(out)
        }
    }
}

/// Inverse of [`emit`] with [`Format::Json`].
pub fn parse_reports(json: &str) -> Result<Vec<CheckReport>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}
