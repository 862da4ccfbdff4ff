//! The JSON run report and the value encoders shared by every command.

use std::path::{Path, PathBuf};

use harmonia::geometry::{to_decimal_string, GaussianRational, LabeledTriangle, PointSet, Rational};
use harmonia::Triple;
use num::BigUint;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const REPORT_VERSION: u64 = 1;
const DECIMAL_DIGITS: usize = 12;

/// Why a command did not produce a clean report.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable input or an unmet precondition (exit 2).
    Usage(String),
}

impl From<harmonia::Error> for Failure {
    fn from(e: harmonia::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// A violated invariant and the smallest evidence the command found.
#[derive(Debug)]
pub struct Violation {
    pub invariant: String,
    pub witness: Value,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    pub inputs: Vec<Input>,
    pub violation: Option<Violation>,
}

impl Outcome {
    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.into(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), v.into());
        self
    }

    pub fn fail(&mut self, invariant: impl Into<String>, witness: Value) {
        if self.violation.is_none() {
            self.violation = Some(Violation {
                invariant: invariant.into(),
                witness,
            });
        }
    }
}

/// An input file, read once so the digest matches what was parsed.
#[derive(Debug)]
pub struct Input {
    pub path: PathBuf,
    pub text: String,
    pub sha256: String,
}

impl Input {
    pub fn read(path: &Path) -> Result<Input, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let sha256 = hex::encode(Sha256::digest(&bytes));
        let text = String::from_utf8(bytes).map_err(|_| Failure::Usage(format!("{}: not UTF-8", path.display())))?;
        Ok(Input {
            path: path.to_path_buf(),
            text,
            sha256,
        })
    }
}

pub fn render(command: &str, outcome: &Outcome, elapsed_ms: u128) -> String {
    let mut results = outcome.results.clone();
    if let Some(v) = &outcome.violation {
        results.insert(
            "violation".into(),
            json!({ "invariant": v.invariant, "witness": v.witness }),
        );
    }
    let inputs: Map<String, Value> = outcome
        .inputs
        .iter()
        .map(|i| (i.path.display().to_string(), Value::from(i.sha256.clone())))
        .collect();
    let report = json!({
        "report": REPORT_VERSION,
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "parameters": outcome.parameters,
        "results": results,
        "inputs": inputs,
        "elapsed_ms": elapsed_ms as u64,
    });
    let mut s = serde_json::to_string_pretty(&report).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Exact rational as decimal text plus numerator and denominator.
pub fn rational(r: &Rational) -> Value {
    json!({
        "decimal": to_decimal_string(r, DECIMAL_DIGITS),
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn gaussian(g: &GaussianRational) -> Value {
    json!({ "re": rational(&g.re), "im": rational(&g.im) })
}

pub fn biguint(x: &BigUint) -> Value {
    Value::from(x.to_string())
}

/// Numbers that may overflow a JSON-safe integer are written as strings.
pub fn count(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn triple(t: &Triple) -> Value {
    json!(t)
}

pub fn triangle(t: &LabeledTriangle, s: &PointSet) -> Value {
    json!({
        "a": t.a, "b": t.b, "c": t.c,
        "points": [gaussian(s.point(t.a)), gaussian(s.point(t.b)), gaussian(s.point(t.c))],
    })
}
