use std::fmt::Write as _;

use ecparity::signs::SignLedger;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct LedgerLine {
    pub place: String,
    pub name: String,
    pub value: i32,
    pub source: &'static str,
}

pub fn ledger_lines(ledger: &SignLedger) -> Vec<LedgerLine> {
    ledger.entries().iter().map(|e| LedgerLine { place: e.place.clone(), name: e.name.clone(), value: e.value, source: e.source }).collect()
}

/// One checked identity with its full inputs.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub inputs: Value,
    pub values: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ledger: Vec<LedgerLine>,
    #[serde(skip)]
    pub precision_exhausted: bool,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, pass: bool, inputs: Value, values: Value) -> Self {
        CheckResult {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            inputs,
            values,
            reason: None,
            ledger: Vec::new(),
            precision_exhausted: false,
        }
    }

    pub fn skipped(id: impl Into<String>, inputs: Value, reason: impl Into<String>) -> Self {
        CheckResult { status: Status::Skipped, reason: Some(reason.into()), ..Self::new(id, true, inputs, Value::Null) }
    }

    /// Engine errors other than unsupported cases count as failures.
    pub fn from_error(id: impl Into<String>, inputs: Value, err: &ecparity::Error) -> Self {
        match err {
            ecparity::Error::Unsupported(w) => Self::skipped(id, inputs, format!("unsupported: {w}")),
            _ => CheckResult {
                reason: Some(err.to_string()),
                precision_exhausted: matches!(err, ecparity::Error::PrecisionExhausted(_)),
                ..Self::new(id, false, inputs, Value::Null)
            },
        }
    }

    pub fn with_ledger(mut self, ledger: &SignLedger) -> Self {
        self.ledger = ledger_lines(ledger);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
    /// Every entry was skipped: nothing was verified.
    NoEffectiveChecks,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub precision: u32,
    pub outcome: Outcome,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, seed: u64, precision: u32, results: Vec<CheckResult>) -> Self {
        let mut s = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skip += 1,
            }
        }
        let outcome = if s.fail > 0 {
            Outcome::Fail
        } else if s.pass == 0 {
            Outcome::NoEffectiveChecks
        } else {
            Outcome::Pass
        };
        Report { suite: suite.into(), seed, precision, outcome, results, summary: s }
    }

    /// 0 pass, 1 check failure or nothing verified, 3 precision exhaustion.
    pub fn exit_code(&self) -> i32 {
        if self.results.iter().any(|r| r.precision_exhausted) {
            3
        } else if self.outcome == Outcome::Pass {
            0
        } else {
            1
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One line per result, failures with their inputs, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIPPED",
            };
            let _ = write!(out, "{tag:7} {}", r.id);
            if let Some(reason) = &r.reason {
                let _ = write!(out, " ({reason})");
            }
            if r.status == Status::Fail {
                let _ = write!(out, " inputs={} values={}", r.inputs, r.values);
            }
            out.push('\n');
        }
        let outcome = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::NoEffectiveChecks => "NO EFFECTIVE CHECKS",
        };
        let _ = writeln!(
            out,
            "{}: {outcome} (pass {}, fail {}, skip {}; seed {}, precision {})",
            self.suite, self.summary.pass, self.summary.fail, self.summary.skip, self.seed, self.precision
        );
        out
    }
}
