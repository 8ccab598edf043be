//! Problem files.
//!
//! ```json
//! {
//!   "points": [[-2, 5], [6, 13]],
//!   "weights": [0, 0],
//!   "constraint": { "kind": "equality", "matrix": [[0, -3], [-5, -2]] }
//! }
//! ```
//!
//! `weights` defaults to all zeros and `constraint` to none. `null` in the
//! constraint matrix stands for `−∞`.

use serde_json::{Map, Value};
use tropolocate_core::{LocationConstraint, LocationProblem, TropMatrix, Tropical};

use crate::CliError;

const KEYS: [&str; 3] = ["points", "weights", "constraint"];

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn finite_number(v: &Value, key: &str) -> Result<f64, CliError> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(schema(format!("{key}: expected a finite number, got {v}"))),
    }
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array()
        .ok_or_else(|| schema(format!("{key}: expected an array, got {v}")))
}

fn parse_points(v: &Value) -> Result<Vec<Vec<f64>>, CliError> {
    let rows = array(v, "points")?;
    if rows.is_empty() {
        return Err(schema("points: at least one point is required"));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let key = format!("points[{i}]");
        let coords = array(row, &key)?
            .iter()
            .enumerate()
            .map(|(k, c)| finite_number(c, &format!("{key}[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.is_empty() {
            return Err(schema(format!(
                "{key}: a point needs at least one coordinate"
            )));
        }
        if let Some(first) = out.first().map(Vec::len) {
            if coords.len() != first {
                return Err(schema(format!(
                    "{key}: has {} coordinates but points[0] has {first} (ragged array)",
                    coords.len()
                )));
            }
        }
        out.push(coords);
    }
    Ok(out)
}

fn parse_weights(v: Option<&Value>, m: usize) -> Result<Vec<f64>, CliError> {
    let Some(v) = v else {
        return Ok(vec![0.0; m]);
    };
    let ws = array(v, "weights")?
        .iter()
        .enumerate()
        .map(|(i, w)| finite_number(w, &format!("weights[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if ws.len() != m {
        return Err(schema(format!(
            "weights: expected {m} entries, got {}",
            ws.len()
        )));
    }
    Ok(ws)
}

fn parse_matrix(v: &Value, n: usize) -> Result<TropMatrix, CliError> {
    let rows = array(v, "constraint.matrix")?;
    if rows.len() != n {
        return Err(schema(format!(
            "constraint.matrix: expected {n} rows for points of dimension {n}, got {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let key = format!("constraint.matrix[{i}]");
        let entries = array(row, &key)?;
        if entries.len() != n {
            return Err(schema(format!(
                "{key}: expected {n} entries, got {}",
                entries.len()
            )));
        }
        let entries = entries
            .iter()
            .enumerate()
            .map(|(j, e)| {
                if e.is_null() {
                    Ok(Tropical::ZERO)
                } else {
                    finite_number(e, &format!("{key}[{j}]")).map(Tropical::new)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(entries);
    }
    TropMatrix::from_trop_rows(out).map_err(|e| schema(format!("constraint.matrix: {e}")))
}

fn parse_constraint(v: Option<&Value>, n: usize) -> Result<LocationConstraint, CliError> {
    let Some(v) = v else {
        return Ok(LocationConstraint::None);
    };
    if v.is_null() {
        return Ok(LocationConstraint::None);
    }
    let obj = v
        .as_object()
        .ok_or_else(|| schema(format!("constraint: expected an object, got {v}")))?;
    if let Some(k) = obj.keys().find(|k| *k != "kind" && *k != "matrix") {
        return Err(schema(format!("constraint.{k}: unknown key")));
    }
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| schema("constraint.kind: expected \"equality\" or \"inequality\""))?;
    let matrix = obj
        .get("matrix")
        .ok_or_else(|| schema("constraint.matrix: missing"))?;
    let a = parse_matrix(matrix, n)?;
    match kind {
        "equality" => Ok(LocationConstraint::Equality(a)),
        "inequality" => Ok(LocationConstraint::Inequality(a)),
        other => Err(schema(format!(
            "constraint.kind: expected \"equality\" or \"inequality\", got \"{other}\""
        ))),
    }
}

fn parse_object(obj: &Map<String, Value>) -> Result<LocationProblem, CliError> {
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(format!("{k}: unknown key")));
    }
    let points = parse_points(obj.get("points").ok_or_else(|| schema("points: missing"))?)?;
    let weights = parse_weights(obj.get("weights"), points.len())?;
    let constraint = parse_constraint(obj.get("constraint"), points[0].len())?;
    LocationProblem::new(&points, &weights, constraint).map_err(|e| schema(e.to_string()))
}

/// Parses and validates a problem document.
pub fn parse_problem(text: &str) -> Result<LocationProblem, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema("top level: expected a JSON object"))?;
    parse_object(obj)
}
