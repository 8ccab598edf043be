//! Minimax single-facility location under the Chebyshev distance:
//!
//! ```text
//! minimize  max_i ( ρ(rᵢ, x) + wᵢ )
//! ```
//!
//! over all of `ℝⁿ`, over `S₀ = {x : A ⊗ x = x}` or over
//! `S₁ = {x : A ⊗ x ≤ x}`. The objective is rewritten as `x⁻p ⊕ q⁻x` with
//! `p = ⊕ wᵢrᵢ` and `q⁻ = ⊕ wᵢrᵢ⁻`, which turns every variant into one of the
//! minimization problems of [`crate::minimax`].

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::minimax::{minimize_identity, minimize_two_sided};
use crate::scalar::Tropical;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    None,
    Equality,
    Inequality,
}

impl ConstraintKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintKind::None => "none",
            ConstraintKind::Equality => "equality",
            ConstraintKind::Inequality => "inequality",
        }
    }
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LocationConstraint {
    None,
    /// Feasible set `{x : A ⊗ x = x}`.
    Equality(TropMatrix),
    /// Feasible set `{x : A ⊗ x ≤ x}`.
    Inequality(TropMatrix),
}

impl LocationConstraint {
    pub fn kind(&self) -> ConstraintKind {
        match self {
            LocationConstraint::None => ConstraintKind::None,
            LocationConstraint::Equality(_) => ConstraintKind::Equality,
            LocationConstraint::Inequality(_) => ConstraintKind::Inequality,
        }
    }

    pub fn matrix(&self) -> Option<&TropMatrix> {
        match self {
            LocationConstraint::None => None,
            LocationConstraint::Equality(a) | LocationConstraint::Inequality(a) => Some(a),
        }
    }
}

/// Points `r₁..rₘ` in `ℝⁿ`, addends `w₁..wₘ` and an optional constraint.
#[derive(Clone, Debug, PartialEq)]
pub struct LocationProblem {
    points: Vec<TropVector>,
    weights: Vec<f64>,
    constraint: LocationConstraint,
}

impl LocationProblem {
    pub fn new<P: AsRef<[f64]>>(
        points: &[P],
        weights: &[f64],
        constraint: LocationConstraint,
    ) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidProblem(
                "at least one point is required".into(),
            ));
        };
        let n = first.as_ref().len();
        if n == 0 {
            return Err(Error::InvalidProblem(
                "points must have at least one coordinate".into(),
            ));
        }
        let mut pts = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            let p = p.as_ref();
            if p.len() != n {
                return Err(Error::InvalidProblem(format!(
                    "point {i} has {} coordinates, expected {n}",
                    p.len()
                )));
            }
            if let Some(v) = p.iter().find(|v| !v.is_finite()) {
                return Err(Error::InvalidProblem(format!(
                    "point {i} has non-finite coordinate {v}"
                )));
            }
            pts.push(TropVector::from_f64s(p)?);
        }
        if weights.len() != points.len() {
            return Err(Error::InvalidProblem(format!(
                "{} weights for {} points",
                weights.len(),
                points.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
            return Err(Error::InvalidProblem(format!("non-finite weight {w}")));
        }
        if let Some(a) = constraint.matrix() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::InvalidProblem(format!(
                    "constraint matrix is {}x{}, expected {n}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(LocationProblem {
            points: pts,
            weights: weights.to_vec(),
            constraint,
        })
    }

    /// Unconstrained problem with all addends zero.
    pub fn unweighted<P: AsRef<[f64]>>(points: &[P]) -> Result<Self> {
        Self::new(points, &vec![0.0; points.len()], LocationConstraint::None)
    }

    pub fn with_constraint(&self, constraint: LocationConstraint) -> Result<Self> {
        let points: Vec<Vec<f64>> = self.points.iter().map(TropVector::to_f64s).collect();
        Self::new(&points, &self.weights, constraint)
    }

    pub fn points(&self) -> &[TropVector] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn constraint(&self) -> &LocationConstraint {
        &self.constraint
    }

    /// Dimension `n` of the space.
    pub fn dim(&self) -> usize {
        self.points[0].len()
    }
}

/// The optimal set `[lower, upper]` of the unconstrained problem.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionBox {
    pub lower: TropVector,
    pub upper: TropVector,
}

impl SolutionBox {
    pub fn contains(&self, x: &TropVector, tol: f64) -> bool {
        self.lower.approx_le(x, tol) && x.approx_le(&self.upper, tol)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionReport {
    /// Optimal objective value.
    pub delta: f64,
    /// One optimal location.
    pub witness: TropVector,
    /// Every optimal location; only known for unconstrained problems.
    pub solution_box: Option<SolutionBox>,
    pub p: TropVector,
    pub q: TropVector,
    pub constraint_kind: ConstraintKind,
}

/// `p = w₁r₁ ⊕ ⋯ ⊕ wₘrₘ` and `q` with `q⁻ = w₁r₁⁻ ⊕ ⋯ ⊕ wₘrₘ⁻`.
///
/// In plain terms `pᵢ = maxⱼ(rᵢⱼ + wⱼ)` and `qᵢ = minⱼ(rᵢⱼ − wⱼ)`.
pub fn derive_pq(problem: &LocationProblem) -> Result<(TropVector, TropVector)> {
    let n = problem.dim();
    let mut p = TropVector::zeros(n)?;
    let mut q_inv = TropVector::zeros(n)?.transpose();
    for (r, &w) in problem.points.iter().zip(&problem.weights) {
        let w = Tropical::new(w);
        p = p.oplus(&r.scale(w))?;
        q_inv = q_inv.oplus(&r.pseudo_inverse()?.scale(w))?;
    }
    Ok((p, q_inv.pseudo_inverse()?))
}

/// Closed-form optimum without constraints: `Δ = (q⁻p)^{1/2}`, attained on
/// the whole box `Δ⁻¹p ≤ x ≤ Δq`. The witness is the lower corner.
pub fn solve_unconstrained(problem: &LocationProblem) -> Result<SolutionReport> {
    if problem.constraint.kind() != ConstraintKind::None {
        return Err(Error::InvalidProblem(format!(
            "solve_unconstrained called on a problem with {} constraints",
            problem.constraint.kind()
        )));
    }
    let (p, q) = derive_pq(problem)?;
    let res = minimize_identity(&p, &q)?;
    Ok(SolutionReport {
        delta: res.delta.value(),
        witness: res.lower.clone(),
        solution_box: Some(SolutionBox {
            lower: res.lower,
            upper: res.upper,
        }),
        p,
        q,
        constraint_kind: ConstraintKind::None,
    })
}

fn irreducible_trace(a: &TropMatrix) -> Result<Tropical> {
    if !a.is_irreducible()? {
        return Err(Error::NotIrreducible);
    }
    a.tr()
}

/// Minimizes `x⁻p ⊕ q⁻x` over `x = G ⊗ y` and maps the optimum back.
fn solve_over_span(
    generator: &TropMatrix,
    p: TropVector,
    q: TropVector,
    kind: ConstraintKind,
) -> Result<SolutionReport> {
    let res = minimize_two_sided(generator, &p, &q)?;
    Ok(SolutionReport {
        delta: res.delta.value(),
        witness: generator.mul_vec(&res.minimizer)?,
        solution_box: None,
        p,
        q,
        constraint_kind: kind,
    })
}

/// Optimum over `{x : A ⊗ x = x}` for irreducible `A` with `Tr(A) = 𝟙`:
/// `Δ = √((A⁺(q⁻A⁺)⁻)⁻p)`, attained at `x = ΔA⁺(q⁻A⁺)⁻`.
pub fn solve_equality_constrained(problem: &LocationProblem, tol: f64) -> Result<SolutionReport> {
    let LocationConstraint::Equality(a) = &problem.constraint else {
        return Err(Error::InvalidProblem(
            "expected an equality constraint".into(),
        ));
    };
    let tr = irreducible_trace(a)?;
    if !tr.approx_eq(Tropical::ONE, tol) {
        return Err(Error::PremiseViolation(format!(
            "Tr(A) = {tr}, but the equality-constrained solution requires Tr(A) = 0"
        )));
    }
    let plus = a.plus_matrix(tol)?;
    let (p, q) = derive_pq(problem)?;
    solve_over_span(&plus, p, q, ConstraintKind::Equality)
}

/// Optimum over `{x : A ⊗ x ≤ x}` for irreducible `A` with `Tr(A) ≤ 𝟙`:
/// `Δ = √((A*(q⁻A*)⁻)⁻p)`, attained at `x = ΔA*(q⁻A*)⁻`.
pub fn solve_inequality_constrained(problem: &LocationProblem, tol: f64) -> Result<SolutionReport> {
    let LocationConstraint::Inequality(a) = &problem.constraint else {
        return Err(Error::InvalidProblem(
            "expected an inequality constraint".into(),
        ));
    };
    let tr = irreducible_trace(a)?;
    if tr.value() > tol {
        return Err(Error::PremiseViolation(format!(
            "Tr(A) = {tr} > 0, so only the trivial solution x = -inf satisfies Ax <= x \
             and no regular location is feasible"
        )));
    }
    let (p, q) = derive_pq(problem)?;
    solve_over_span(&a.star()?, p, q, ConstraintKind::Inequality)
}

/// Dispatches on the constraint kind.
pub fn solve(problem: &LocationProblem, tol: f64) -> Result<SolutionReport> {
    match problem.constraint.kind() {
        ConstraintKind::None => solve_unconstrained(problem),
        ConstraintKind::Equality => solve_equality_constrained(problem, tol),
        ConstraintKind::Inequality => solve_inequality_constrained(problem, tol),
    }
}
