use ecparity::curves::{from_ints, WeierstrassModel};
use ecparity::exact::Rational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A rational 2- or 3-isogeny datum: `y² = x³ + ax² + bx` for `p = 2`,
/// `y² = x³ + a(x − b)²` for `p = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsogenyDatum {
    pub a: i64,
    pub b: i64,
    pub p: u64,
}

/// Frozen reference values for regression checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub w: i32,
    pub d: usize,
}

/// One corpus line: `[a1, a2, a3, a4, a6]` plus optional data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub label: String,
    pub a: [i64; 5],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isogeny: Option<IsogenyDatum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl CurveRecord {
    pub fn new(label: impl Into<String>, a: [i64; 5]) -> Self {
        CurveRecord { label: label.into(), a, twist: None, isogeny: None, expected: None }
    }

    pub fn model(&self) -> Result<WeierstrassModel<Rational>, CliError> {
        Ok(from_ints(self.a)?)
    }

    fn validate(&self) -> Result<(), String> {
        from_ints(self.a).map_err(|e| format!("{}: {e}", self.label))?;
        if let Some(r) = self.twist {
            if !is_squarefree(r) {
                return Err(format!("{}: twist {r} is not squarefree", self.label));
            }
        }
        Ok(())
    }
}

pub fn is_squarefree(r: i64) -> bool {
    if r == 0 {
        return false;
    }
    let n = r.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// One record per line; blank lines and lines starting with `#` are
/// ignored. Errors carry 1-based line numbers.
pub fn parse_corpus(text: &str) -> Result<Vec<CurveRecord>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec: CurveRecord = serde_json::from_str(line).map_err(|e| CliError::Parse { line: i + 1, msg: e.to_string() })?;
        rec.validate().map_err(|msg| CliError::Parse { line: i + 1, msg })?;
        out.push(rec);
    }
    Ok(out)
}

/// `a1,a2,a3,a4,a6`.
pub fn parse_coefficients(s: &str) -> Result<[i64; 5], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(CliError::Input(format!("expected five comma-separated integers, got {s:?}")));
    }
    let mut a = [0i64; 5];
    for (x, p) in a.iter_mut().zip(&parts) {
        *x = p.parse().map_err(|_| CliError::Input(format!("not an integer: {p:?}")))?;
    }
    from_ints(a)?;
    Ok(a)
}
