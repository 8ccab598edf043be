//! Brute-force verification in plain `f64` arithmetic.
//!
//! Nothing here goes through the tropical types beyond reading the problem
//! data out of them: the objective, the constraint check and the search are
//! all conventional arithmetic, so agreement with the closed forms is an
//! independent check.

use crate::error::{Error, Result};
use crate::location::{ConstraintKind, LocationProblem};

/// Largest grid the oracle will scan.
pub const MAX_GRID_NODES: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub step: f64,
    pub feas_tol: f64,
}

impl OracleConfig {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>, step: f64, feas_tol: f64) -> Result<Self> {
        let cfg = OracleConfig {
            lower,
            upper,
            step,
            feas_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Bounding box of the points, inflated on every side by
    /// `(max w − min w) + spread`, where spread is the widest coordinate
    /// range of the points. With a constraint, the pad also grows by
    /// `max |aᵢⱼ|` over finite entries plus the largest coordinate range
    /// within a single point, so that the box reaches feasible sets lying
    /// along the diagonal away from the points. The pad is at least 1.
    pub fn around(problem: &LocationProblem, step: f64, feas_tol: f64) -> Result<Self> {
        let points = plain_points(problem);
        let n = problem.dim();
        let mut lower = vec![f64::INFINITY; n];
        let mut upper = vec![f64::NEG_INFINITY; n];
        for p in &points {
            for k in 0..n {
                lower[k] = lower[k].min(p[k]);
                upper[k] = upper[k].max(p[k]);
            }
        }
        let spread = lower
            .iter()
            .zip(&upper)
            .map(|(l, u)| u - l)
            .fold(0.0, f64::max);
        let w = problem.weights();
        let w_range = w.iter().copied().fold(f64::NEG_INFINITY, f64::max)
            - w.iter().copied().fold(f64::INFINITY, f64::min);
        let reach = problem.constraint().matrix().map_or(0.0, |a| {
            let entries = a
                .to_rows()
                .iter()
                .flatten()
                .filter(|v| v.is_finite())
                .fold(0.0, |acc: f64, v| acc.max(v.abs()));
            let skew = points
                .iter()
                .map(|p| {
                    p.iter().copied().fold(f64::NEG_INFINITY, f64::max)
                        - p.iter().copied().fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max);
            entries + skew
        });
        let pad = (w_range + spread + reach).max(1.0);
        Self::new(
            lower.iter().map(|l| l - pad).collect(),
            upper.iter().map(|u| u + pad).collect(),
            step,
            feas_tol,
        )
    }

    /// Bounding box of the points with no inflation (degenerate ranges are
    /// widened by one step). Enough for unconstrained problems, since
    /// clamping a location into the box never increases any distance.
    pub fn bounding_box(problem: &LocationProblem, step: f64, feas_tol: f64) -> Result<Self> {
        let points = plain_points(problem);
        let n = problem.dim();
        let lower: Vec<f64> = (0..n)
            .map(|k| points.iter().map(|p| p[k]).fold(f64::INFINITY, f64::min))
            .collect();
        let upper: Vec<f64> = (0..n)
            .map(|k| {
                points
                    .iter()
                    .map(|p| p[k])
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .zip(&lower)
            .map(|(u, &l)| if u > l { u } else { l + step })
            .collect();
        Self::new(lower, upper, step, feas_tol)
    }

    fn validate(&self) -> Result<()> {
        if self.lower.len() != self.upper.len() || self.lower.is_empty() {
            return Err(Error::InvalidConfig(
                "bounds must be non-empty and of equal length".into(),
            ));
        }
        if self.lower.iter().chain(&self.upper).any(|v| !v.is_finite()) {
            return Err(Error::InvalidConfig("bounds must be finite".into()));
        }
        if let Some(k) = (0..self.lower.len()).find(|&k| self.lower[k] >= self.upper[k]) {
            return Err(Error::InvalidConfig(format!(
                "lower[{k}] must be below upper[{k}]"
            )));
        }
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        if !(self.feas_tol.is_finite() && self.feas_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "feasibility tolerance must be positive, got {}",
                self.feas_tol
            )));
        }
        Ok(())
    }

    /// Nodes per axis: `lower + k·step` for `k = 0..=K`, `K = ⌊(upper − lower)/step⌋`.
    fn axis_counts(&self) -> Vec<usize> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| ((u - l) / self.step + 1e-9).floor() as usize + 1)
            .collect()
    }

    pub fn node_count(&self) -> u128 {
        self.axis_counts().iter().map(|&c| c as u128).product()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub argmin: Vec<f64>,
    pub feasible_nodes: u64,
}

fn plain_points(problem: &LocationProblem) -> Vec<Vec<f64>> {
    problem.points().iter().map(|p| p.to_f64s()).collect()
}

/// Constraint rows with `None` for `−∞` entries.
type PlainMatrix = Vec<Vec<Option<f64>>>;

fn plain_constraint(problem: &LocationProblem) -> Option<(ConstraintKind, PlainMatrix)> {
    let a = problem.constraint().matrix()?;
    let rows = a
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.is_finite().then_some(v)).collect())
        .collect();
    Some((problem.constraint().kind(), rows))
}

fn chebyshev_objective(points: &[Vec<f64>], weights: &[f64], x: &[f64]) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for (r, w) in points.iter().zip(weights) {
        let mut dist = 0.0f64;
        for (rk, xk) in r.iter().zip(x) {
            dist = dist.max((rk - xk).abs());
        }
        worst = worst.max(dist + w);
    }
    worst
}

/// `max_i (max_k |r_ik − x_k| + w_i)`.
pub fn objective(problem: &LocationProblem, x: &[f64]) -> Result<f64> {
    if x.len() != problem.dim() {
        return Err(Error::DimensionMismatch(format!(
            "location of length {} for a problem in dimension {}",
            x.len(),
            problem.dim()
        )));
    }
    Ok(chebyshev_objective(
        &plain_points(problem),
        problem.weights(),
        x,
    ))
}

fn feasible(kind: ConstraintKind, a: &PlainMatrix, x: &[f64], tol: f64) -> bool {
    a.iter().zip(x).all(|(row, &xi)| {
        let ax = row
            .iter()
            .zip(x)
            .filter_map(|(aij, xj)| aij.map(|v| v + xj))
            .fold(f64::NEG_INFINITY, f64::max);
        match kind {
            ConstraintKind::Equality => (ax - xi).abs() <= tol,
            _ => ax - xi <= tol,
        }
    })
}

/// Whether `x` passes the oracle's feasibility filter: `|A⊗x − x|∞ ≤ tol`
/// for equality constraints, `A⊗x − x ≤ tol` for inequalities.
pub fn is_feasible(problem: &LocationProblem, x: &[f64], tol: f64) -> Result<bool> {
    if x.len() != problem.dim() {
        return Err(Error::DimensionMismatch(format!(
            "location of length {} for a problem in dimension {}",
            x.len(),
            problem.dim()
        )));
    }
    Ok(match plain_constraint(problem) {
        None => true,
        Some((kind, a)) => feasible(kind, &a, x, tol),
    })
}

/// Scans every grid node, keeping those that pass the feasibility filter,
/// and returns the smallest objective value found. Ties go to the
/// lexicographically smallest node.
pub fn grid_minimize(problem: &LocationProblem, cfg: &OracleConfig) -> Result<OracleResult> {
    cfg.validate()?;
    let n = problem.dim();
    if cfg.lower.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "grid of dimension {} for a problem in dimension {n}",
            cfg.lower.len()
        )));
    }
    let nodes = cfg.node_count();
    if nodes > MAX_GRID_NODES {
        return Err(Error::GridTooLarge {
            nodes,
            cap: MAX_GRID_NODES,
        });
    }

    let points = plain_points(problem);
    let weights = problem.weights();
    let constraint = plain_constraint(problem);
    let counts = cfg.axis_counts();

    let mut idx = vec![0usize; n];
    let mut x = cfg.lower.clone();
    let mut best = f64::INFINITY;
    let mut argmin: Option<Vec<f64>> = None;
    let mut feasible_nodes = 0u64;
    loop {
        let ok = constraint
            .as_ref()
            .is_none_or(|(kind, a)| feasible(*kind, a, &x, cfg.feas_tol));
        if ok {
            feasible_nodes += 1;
            let v = chebyshev_objective(&points, weights, &x);
            if v < best {
                best = v;
                argmin = Some(x.clone());
            }
        }
        // Odometer with the last axis varying fastest, so nodes are visited
        // in lexicographic order.
        let mut k = n;
        loop {
            if k == 0 {
                return match argmin {
                    Some(argmin) => Ok(OracleResult {
                        value: best,
                        argmin,
                        feasible_nodes,
                    }),
                    None => Err(Error::NoFeasibleNode),
                };
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < counts[k] {
                x[k] = cfg.lower[k] + idx[k] as f64 * cfg.step;
                break;
            }
            idx[k] = 0;
            x[k] = cfg.lower[k];
        }
    }
}
