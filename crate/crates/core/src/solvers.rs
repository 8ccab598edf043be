//! Linear equations over `ℝmax,+`.
//!
//! First kind: `A ⊗ x = d` for regular `A` and `d`, solved through the
//! residual `Δ = √((A(d⁻A)⁻)⁻ d)`, the minimum over regular `x` of
//! `ρ(Ax, d)`. Second kind: `A ⊗ x = x` and `A ⊗ x ≤ x` for irreducible `A`,
//! whose solutions are generated by `A⁺` and `A*` respectively.

use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::Tropical;

#[derive(Clone, Debug, PartialEq)]
pub struct FirstKindResult {
    /// `Δ ≥ 𝟙`; the equation is solvable iff `Δ = 𝟙`.
    pub delta: Tropical,
    /// `Δ ⊗ (d⁻A)⁻`: the maximum solution when solvable, otherwise the
    /// vector closest to solving it in the metric `ρ`.
    pub best_x: TropVector,
    pub solvable: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SecondKindSolution {
    /// Every solution is `G ⊗ v` for some `v`, with `G` the generator.
    Family(TropMatrix),
    /// The `Tr` premise fails: only `x = 𝟘` solves the relation.
    TrivialOnly,
}

impl SecondKindSolution {
    pub fn generator(&self) -> Option<&TropMatrix> {
        match self {
            SecondKindSolution::Family(g) => Some(g),
            SecondKindSolution::TrivialOnly => None,
        }
    }

    pub fn is_trivial_only(&self) -> bool {
        matches!(self, SecondKindSolution::TrivialOnly)
    }
}

fn check_first_kind(a: &TropMatrix, d: &TropVector) -> Result<()> {
    if !a.is_regular() {
        return Err(Error::NotRegular("matrix"));
    }
    if !d.is_regular() {
        return Err(Error::NotRegular("right-hand side"));
    }
    if d.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with right-hand side of length {}",
            a.rows(),
            a.cols(),
            d.len()
        )));
    }
    Ok(())
}

/// `(d⁻A)⁻` together with `Δ²`.
fn residual_parts(a: &TropMatrix, d: &TropVector) -> Result<(TropVector, Tropical)> {
    let x0 = d.pseudo_inverse()?.mul_matrix(a)?.pseudo_inverse()?;
    let delta_sq = a.mul_vec(&x0)?.pseudo_inverse()?.dot(d)?;
    Ok((x0, delta_sq))
}

/// `Δ = min over regular x of ρ(A ⊗ x, d)`.
pub fn first_kind_residual(a: &TropMatrix, d: &TropVector) -> Result<Tropical> {
    check_first_kind(a, d)?;
    Ok(residual_parts(a, d)?.1.sqrt())
}

/// Solves `A ⊗ x = d`, reporting solvability with tolerance `tol` on `Δ = 𝟙`.
pub fn solve_first_kind(a: &TropMatrix, d: &TropVector, tol: f64) -> Result<FirstKindResult> {
    check_first_kind(a, d)?;
    let (x0, delta_sq) = residual_parts(a, d)?;
    let delta = delta_sq.sqrt();
    Ok(FirstKindResult {
        delta,
        best_x: x0.scale(delta),
        solvable: delta.approx_eq(Tropical::ONE, tol),
    })
}

fn require_irreducible(a: &TropMatrix) -> Result<()> {
    if a.is_irreducible()? {
        Ok(())
    } else {
        Err(Error::NotIrreducible)
    }
}

/// All solutions of `A ⊗ x = x` for irreducible `A`.
///
/// `Tr(A) = 𝟙` (within `tol`) gives the family generated by `A⁺`.
pub fn solve_second_kind_eq(a: &TropMatrix, tol: f64) -> Result<SecondKindSolution> {
    require_irreducible(a)?;
    if !a.tr()?.approx_eq(Tropical::ONE, tol) {
        return Ok(SecondKindSolution::TrivialOnly);
    }
    Ok(SecondKindSolution::Family(a.plus_matrix(tol)?))
}

/// All solutions of `A ⊗ x ≤ x` for irreducible `A`.
///
/// `Tr(A) ≤ 𝟙` (within `tol`) gives the family generated by `A*`.
pub fn solve_second_kind_ineq(a: &TropMatrix, tol: f64) -> Result<SecondKindSolution> {
    require_irreducible(a)?;
    if a.tr()?.value() > tol {
        return Ok(SecondKindSolution::TrivialOnly);
    }
    Ok(SecondKindSolution::Family(a.star()?))
}
