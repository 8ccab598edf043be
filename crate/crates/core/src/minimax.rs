//! Minimization of the two-sided functional `(Ax)⁻b ⊕ c⁻Ax` over regular
//! `x`, and its special case `A = I`.

use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::Tropical;

#[derive(Clone, Debug, PartialEq)]
pub struct TwoSidedResult {
    /// The minimum `Δ = √((A(c⁻A)⁻)⁻ b)`.
    pub delta: Tropical,
    /// `Δ ⊗ (c⁻A)⁻`, a regular minimizer.
    pub minimizer: TropVector,
    /// `Δ⁻¹ ⊗ b`
    pub image_lower: TropVector,
    /// `Δ ⊗ c`
    pub image_upper: TropVector,
}

impl TwoSidedResult {
    /// Whether `A ⊗ x` lies in `[Δ⁻¹b, Δc]`, a necessary condition for `x`
    /// to be a minimizer. It is not sufficient for general `A`.
    pub fn image_in_box(&self, a: &TropMatrix, x: &TropVector, tol: f64) -> Result<bool> {
        let ax = a.mul_vec(x)?;
        Ok(self.image_lower.approx_le(&ax, tol) && ax.approx_le(&self.image_upper, tol))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResult {
    /// `Δ = (c⁻b)^{1/2}`
    pub delta: Tropical,
    /// `Δ⁻¹ ⊗ b`
    pub lower: TropVector,
    /// `Δ ⊗ c`
    pub upper: TropVector,
}

fn check_operands(a: &TropMatrix, b: &TropVector, c: &TropVector) -> Result<()> {
    if !a.is_regular() {
        return Err(Error::NotRegular("matrix"));
    }
    if !b.is_regular() || !c.is_regular() {
        return Err(Error::NotRegular("vector"));
    }
    if b.len() != a.rows() || c.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with vectors of length {} and {}",
            a.rows(),
            a.cols(),
            b.len(),
            c.len()
        )));
    }
    Ok(())
}

/// `(Ax)⁻b ⊕ c⁻Ax`.
pub fn two_sided_objective(
    a: &TropMatrix,
    b: &TropVector,
    c: &TropVector,
    x: &TropVector,
) -> Result<Tropical> {
    check_operands(a, b, c)?;
    let ax = a.mul_vec(x)?;
    Ok(ax.pseudo_inverse()?.dot(b)? + c.pseudo_inverse()?.dot(&ax)?)
}

pub fn minimize_two_sided(
    a: &TropMatrix,
    b: &TropVector,
    c: &TropVector,
) -> Result<TwoSidedResult> {
    check_operands(a, b, c)?;
    let x0 = c.pseudo_inverse()?.mul_matrix(a)?.pseudo_inverse()?;
    let delta = a.mul_vec(&x0)?.pseudo_inverse()?.dot(b)?.sqrt();
    // An all-𝟘 column of A leaves the matching entry of (c⁻A)⁻ at 𝟘; that
    // coordinate does not affect Ax, so 𝟙 keeps the minimizer regular.
    let x0 = TropVector::column(
        x0.iter()
            .map(|t| if t.is_zero() { Tropical::ONE } else { t })
            .collect(),
    )?;
    Ok(TwoSidedResult {
        delta,
        minimizer: x0.scale(delta),
        image_lower: b.scale(delta.inv()),
        image_upper: c.scale(delta),
    })
}

/// Minimizes `x⁻b ⊕ c⁻x`; every `x` in `[lower, upper]` attains the minimum.
pub fn minimize_identity(b: &TropVector, c: &TropVector) -> Result<IdentityResult> {
    if !b.is_regular() || !c.is_regular() {
        return Err(Error::NotRegular("vector"));
    }
    if b.len() != c.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            b.len(),
            c.len()
        )));
    }
    let delta = c.pseudo_inverse()?.dot(b)?.sqrt();
    Ok(IdentityResult {
        delta,
        lower: b.scale(delta.inv()),
        upper: c.scale(delta),
    })
}
