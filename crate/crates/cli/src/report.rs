// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use masure_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Violation,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: String,
    pub witness: String,
}

impl Diagnostic {
    pub fn from_error(e: &Error) -> Self {
        let severity = if is_violation(e) { Severity::Violation } else { Severity::Error };
        Diagnostic { severity, code: error_code(e), witness: e.to_string() }
    }
}

/// Errors meaning the model is not a masure, as opposed to bad input.
pub fn is_violation(e: &Error) -> bool {
    matches!(
        e,
        Error::TheoremViolation(_)
            | Error::InconsistentGluing(_)
            | Error::NoApartmentContainsBoth(_)
            | Error::LevelNotInLambda { .. }
    )
}

/// The variant name, e.g. `NotAffine`.
pub fn error_code(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

/// Inputs that determine a report: argument list and file contents.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn new(args: &[String]) -> Self {
        let mut hasher = Sha256::new();
        for a in args {
            hasher.update((a.len() as u64).to_le_bytes());
            hasher.update(a.as_bytes());
        }
        Inputs { hasher }
    }

    pub fn file(&mut self, contents: &str) {
        self.hasher.update((contents.len() as u64).to_le_bytes());
        self.hasher.update(contents.as_bytes());
    }

    pub fn digest(self) -> String {
        self.hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub bounds: Value,
    pub results: Value,
    pub diagnostics: Vec<Diagnostic>,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        if self.diagnostics.iter().any(|d| d.severity == Severity::Error) {
            1
        } else if self.diagnostics.iter().any(|d| d.severity == Severity::Violation) {
            2
        } else {
            0
        }
    }
}
