//! Run reports: deterministic JSON with sorted keys and every float rounded
//! to 12 significant digits.

use std::collections::BTreeMap;
use std::path::Path;

use qgame_core::analysis::{SpectrumCheck, MAGNITUDE_NOTE, PROBABILITY_MAPPING_NOTE};
use qgame_core::{GramMatrix, Matrix2, PureState, ReproReport, SearchResult, C64};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::io::OpsFile;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` rounded to [`SIGNIFICANT_DIGITS`]; negative zero becomes zero.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Text form of [`round_sig`]: plain notation for moderate magnitudes,
/// scientific otherwise.
pub fn display(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 || (1e-4..1e12).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

pub fn num(x: f64) -> Value {
    json!(round_sig(x))
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn cnum(c: C64) -> Value {
    json!([round_sig(c.re), round_sig(c.im)])
}

pub fn matrix(m: &Matrix2) -> Value {
    json!(m.entries.map(|row| row.map(cnum)))
}

pub fn amplitudes(s: &PureState) -> Value {
    Value::Array(s.amplitudes().iter().map(|&a| cnum(a)).collect())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Report shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: Vec<String>,
    /// Role -> (path as given, SHA-256 of the bytes read).
    pub inputs: BTreeMap<String, (String, String)>,
    pub result: Value,
    pub notes: Vec<&'static str>,
    /// Only recorded on request, so default reports stay byte-identical.
    pub wall_time_s: Option<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            inputs: BTreeMap::new(),
            result: Value::Object(Map::new()),
            notes: Vec::new(),
            wall_time_s: None,
        }
    }

    pub fn add_input(&mut self, role: &str, path: &Path, bytes: &[u8]) {
        self.inputs.insert(
            role.to_string(),
            (path.display().to_string(), sha256_hex(bytes)),
        );
    }

    pub fn to_value(&self) -> Value {
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(role, (path, digest))| (role.clone(), json!({ "path": path, "sha256": digest })))
            .collect();
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("inputs".into(), Value::Object(inputs));
        top.insert("result".into(), self.result.clone());
        top.insert("tool".into(), json!(env!("CARGO_PKG_NAME")));
        top.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        if !self.notes.is_empty() {
            top.insert("notes".into(), json!(self.notes));
        }
        if let Some(t) = self.wall_time_s {
            top.insert("wall_time_s".into(), num(t));
        }
        Value::Object(top)
    }

    /// Pretty JSON with a trailing newline. Keys are sorted because
    /// `serde_json::Map` is ordered.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }
}

pub fn gram_value(g: &GramMatrix) -> Value {
    let dim = g.dim();
    Value::Array(
        (0..dim)
            .map(|a| Value::Array((0..dim).map(|b| cnum(g.get(a, b))).collect()))
            .collect(),
    )
}

pub fn spectrum_value(s: &SpectrumCheck) -> Value {
    json!({
        "ok": s.ok,
        "eigenvalues": s.eigenvalues.map(cnum),
        "degenerate": s.degenerate,
        "diagonalizer": matrix(&s.diagonalizer),
        "phase": num(s.phase),
    })
}

pub fn repro_value(r: &ReproReport) -> Value {
    json!({
        "verdict": if r.pass { "pass" } else { "fail" },
        "pass": r.pass,
        "tol": num(r.tol),
        "max_offdiag": num(r.max_offdiag),
        "worst_pair": [r.worst_pair.0, r.worst_pair.1],
        "spectrum_ok": r.spectrum_ok(),
        "spectrum": r.spectrum.iter().map(spectrum_value).collect::<Vec<_>>(),
        "max_sigma_z_residual": r.max_sigma_z_residual().map(round_sig),
        "sigma_z_residuals": nums(&r.sigma_z_residuals),
        "magnitude_deviation": r.magnitude_deviation.map(round_sig),
        "canonical_state": r.canonical_state.as_ref().map(amplitudes),
        "gram": gram_value(&r.gram),
    })
}

pub fn search_value(r: &SearchResult, restarts: usize) -> Value {
    let summary = if r.converged {
        format!(
            "witness found at residual {:e} (restart {})",
            round_sig(r.best_residual),
            r.best_restart
        )
    } else {
        format!(
            "no witness found at residual >= {:e} after {restarts} restarts",
            round_sig(r.best_residual)
        )
    };
    json!({
        "verdict": if r.converged { "pass" } else { "fail" },
        "converged": r.converged,
        "best_residual": num(r.best_residual),
        "best_restart": r.best_restart,
        "trace": nums(&r.trace),
        "best_assignment": serde_json::to_value(OpsFile::from_assignment(&r.best_assignment))
            .map(round_floats)
            .expect("ops serialize"),
        "summary": summary,
    })
}

/// Applies [`round_sig`] to every number in a JSON tree.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => num(n.as_f64().expect("f64 number")),
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

pub const ANALYSIS_NOTES: [&str; 2] = [MAGNITUDE_NOTE, PROBABILITY_MAPPING_NOTE];
