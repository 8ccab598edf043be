//! The JSON report written by `solve`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tropolocate_core::{SolutionReport, TropVector};

/// Grid-oracle comparison embedded with `--oracle`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub value: f64,
    pub argmin: Vec<f64>,
    pub step: f64,
}

impl OracleSummary {
    pub fn new(value: f64, argmin: Vec<f64>, step: f64) -> Self {
        OracleSummary {
            value: unsigned_zero(value),
            argmin: argmin.into_iter().map(unsigned_zero).collect(),
            step,
        }
    }
}

/// Field order here is the field order in the file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub delta: f64,
    pub witness: TropVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub box_lower: Option<TropVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub box_upper: Option<TropVector>,
    pub p: TropVector,
    pub q: TropVector,
    pub constraint_kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

// Keeps "-0.0" out of the output.
fn unsigned_zero(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

impl ReportFile {
    pub fn from_solution(rep: &SolutionReport, oracle: Option<OracleSummary>) -> Self {
        ReportFile {
            delta: unsigned_zero(rep.delta),
            witness: rep.witness.clone(),
            box_lower: rep.solution_box.as_ref().map(|b| b.lower.clone()),
            box_upper: rep.solution_box.as_ref().map(|b| b.upper.clone()),
            p: rep.p.clone(),
            q: rep.q.clone(),
            constraint_kind: rep.constraint_kind.as_str().to_owned(),
            oracle,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let vec = |v: &TropVector| {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(", "))
        };
        let mut out = String::new();
        let _ = writeln!(out, "constraint: {}", self.constraint_kind);
        let _ = writeln!(out, "optimal value: {}", self.delta);
        let _ = writeln!(out, "location: {}", vec(&self.witness));
        if let (Some(lo), Some(hi)) = (&self.box_lower, &self.box_upper) {
            let _ = writeln!(out, "all optimal locations: {} .. {}", vec(lo), vec(hi));
        }
        let _ = writeln!(out, "p: {}", vec(&self.p));
        let _ = writeln!(out, "q: {}", vec(&self.q));
        if let Some(o) = &self.oracle {
            let argmin: Vec<String> = o.argmin.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                out,
                "grid check (step {}): {} at ({}), gap {}",
                o.step,
                o.value,
                argmin.join(", "),
                o.value - self.delta
            );
        }
        out
    }
}
