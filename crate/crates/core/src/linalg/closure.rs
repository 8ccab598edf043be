//! Traces, the `Tr` function, the closures `A*`, `A×`, `A⁺`, irreducibility
//! and span membership.

use crate::error::{Error, Result};
use crate::linalg::{Orientation, TropMatrix, TropVector};
use crate::scalar::Tropical;

/// Outcome of [`span_member`].
#[derive(Clone, Debug, PartialEq)]
pub struct SpanMembership {
    pub member: bool,
    /// The greatest coefficients `cᵢ` with `cᵢ ⊗ xᵢ ≤ y`.
    pub coefficients: TropVector,
}

/// Tests whether `y` is a max-plus combination of the columns of `generators`.
///
/// Each coefficient is the residual `cᵢ = max{c : c ⊗ xᵢ ≤ y}`; `y` lies in
/// the span iff `⊕ cᵢ xᵢ` reproduces `y` (finite entries within `tol`, `𝟘`
/// entries exactly).
pub fn span_member(y: &TropVector, generators: &TropMatrix, tol: f64) -> Result<SpanMembership> {
    if y.is_zero() {
        return Err(Error::ZeroVector);
    }
    if y.len() != generators.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against {} generator rows",
            y.len(),
            generators.rows()
        )));
    }
    let y = match y.orientation() {
        Orientation::Column => y.clone(),
        Orientation::Row => y.clone().transpose(),
    };
    let coefficients: Vec<Tropical> = generators
        .columns()
        .iter()
        .map(|x| residual_coefficient(&y, x))
        .collect();
    let coefficients = TropVector::column(coefficients)?;
    let combination = generators.mul_vec(&coefficients)?;
    Ok(SpanMembership {
        member: combination.approx_eq(&y, tol),
        coefficients,
    })
}

/// `min{yⱼ − xⱼ : xⱼ finite}`, which is `(y⁻x)⁻¹` for regular `y`; `𝟘` when
/// `x` has support outside `y`'s, or when `x` itself is zero.
fn residual_coefficient(y: &TropVector, x: &TropVector) -> Tropical {
    let mut best: Option<f64> = None;
    for (yj, xj) in y.iter().zip(x.iter()) {
        if xj.is_zero() {
            continue;
        }
        if yj.is_zero() {
            return Tropical::ZERO;
        }
        let c = yj.value() - xj.value();
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best.map_or(Tropical::ZERO, Tropical::new)
}

impl TropMatrix {
    /// `tr A = ⊕ᵢ aᵢᵢ`.
    pub fn trace(&self) -> Result<Tropical> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    /// `Tr(A) = ⊕_{m=1..n} tr Aᵐ`, the maximal weight of a closed walk of
    /// length at most `n` in the weighted digraph of `A`.
    pub fn tr(&self) -> Result<Tropical> {
        let n = self.require_square()?;
        let mut power = self.clone();
        let mut acc = power.trace()?;
        for _ in 1..n {
            power = power.mul(self)?;
            acc = acc + power.trace()?;
        }
        Ok(acc)
    }

    /// `A* = I ⊕ A ⊕ ⋯ ⊕ Aⁿ⁻¹`.
    pub fn star(&self) -> Result<TropMatrix> {
        let n = self.require_square()?;
        let mut acc = TropMatrix::identity(n)?;
        let mut power = TropMatrix::identity(n)?;
        for _ in 1..n {
            power = power.mul(self)?;
            acc = acc.oplus(&power)?;
        }
        Ok(acc)
    }

    /// `A× = A ⊗ A*`.
    pub fn times_closure(&self) -> Result<TropMatrix> {
        self.mul(&self.star()?)
    }

    /// `A⁺`: the columns of `A×` with diagonal entry `𝟙` (within `tol`),
    /// thinned to a linearly independent subset with the same span.
    ///
    /// Candidates are scanned in ascending column order; a column is dropped
    /// when it lies in the span of the candidates still retained.
    pub fn plus_matrix(&self, tol: f64) -> Result<TropMatrix> {
        let times = self.times_closure()?;
        let mut kept: Vec<TropVector> = (0..times.cols())
            .filter(|&i| times.get(i, i).approx_eq(Tropical::ONE, tol))
            .map(|i| times.column(i))
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyPlus);
        }
        let mut idx = 0;
        while idx < kept.len() {
            let others: Vec<TropVector> = kept
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, c)| c.clone())
                .collect();
            let redundant = !others.is_empty()
                && !kept[idx].is_zero()
                && span_member(&kept[idx], &TropMatrix::from_columns(&others)?, tol)?.member;
            if redundant {
                kept.remove(idx);
            } else {
                idx += 1;
            }
        }
        TropMatrix::from_columns(&kept)
    }

    /// Whether the digraph with an arc `i → j` for every finite `aᵢⱼ` is
    /// strongly connected. A `1×1` matrix is always irreducible.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.require_square()?;
        let forward = reachable_from_first(n, |i, j| self.get(i, j).is_finite());
        let backward = reachable_from_first(n, |i, j| self.get(j, i).is_finite());
        Ok(forward.into_iter().chain(backward).all(|seen| seen))
    }
}

fn reachable_from_first(n: usize, arc: impl Fn(usize, usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, s) in seen.iter_mut().enumerate() {
            if !*s && arc(i, j) {
                *s = true;
                stack.push(j);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    const NEG: f64 = f64::NEG_INFINITY;
    const TOL: f64 = 1e-9;

    fn m(rows: &[&[f64]]) -> TropMatrix {
        TropMatrix::from_rows(rows).unwrap()
    }

    fn col(values: &[f64]) -> TropVector {
        TropVector::from_f64s(values).unwrap()
    }

    fn worked() -> TropMatrix {
        m(&[&[0.0, -3.0], &[-5.0, -2.0]])
    }

    #[test]
    fn traces() {
        assert_eq!(worked().tr().unwrap(), Tropical::ONE);
        assert_eq!(
            TropMatrix::identity(3).unwrap().trace().unwrap(),
            Tropical::ONE
        );
        assert_eq!(m(&[&[2.0]]).tr().unwrap(), Tropical::new(2.0));
        // The only cycle is 1 -> 2 -> 1 with weight 1 + 3.
        assert_eq!(
            m(&[&[NEG, 1.0], &[3.0, NEG]]).tr().unwrap(),
            Tropical::new(4.0)
        );
        assert!(matches!(
            m(&[&[0.0, 1.0]]).trace(),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn closures_of_worked_matrix() {
        assert_eq!(worked().star().unwrap(), m(&[&[0.0, -3.0], &[-5.0, 0.0]]));
        assert_eq!(worked().times_closure().unwrap(), worked());
        assert_eq!(
            TropMatrix::zeros(3, 3).unwrap().star().unwrap(),
            TropMatrix::identity(3).unwrap()
        );
    }

    #[test]
    fn plus_of_worked_matrix_keeps_first_column() {
        let plus = worked().plus_matrix(TOL).unwrap();
        assert_eq!(plus, m(&[&[0.0], &[-5.0]]));
    }

    #[test]
    fn plus_of_identity_keeps_both_unit_columns() {
        let i = TropMatrix::identity(2).unwrap();
        let plus = i.plus_matrix(TOL).unwrap();
        assert_eq!(plus.cols(), 2);
        for c in i.columns() {
            assert!(span_member(&c, &plus, TOL).unwrap().member);
        }
    }

    #[test]
    fn plus_drops_collinear_columns() {
        // All-zero 3x3: every column of A× is (0,0,0), so one survives.
        let a = TropMatrix::new(3, 3, vec![Tropical::ONE; 9]).unwrap();
        let plus = a.plus_matrix(TOL).unwrap();
        assert_eq!(plus, m(&[&[0.0], &[0.0], &[0.0]]));
    }

    #[test]
    fn plus_empty_when_no_unit_diagonal() {
        let a = m(&[&[-1.0, -3.0], &[-5.0, -2.0]]);
        assert_eq!(a.plus_matrix(TOL), Err(Error::EmptyPlus));
    }

    #[test]
    fn irreducibility() {
        assert!(worked().is_irreducible().unwrap());
        assert!(!TropMatrix::identity(2).unwrap().is_irreducible().unwrap());
        assert!(m(&[&[5.0]]).is_irreducible().unwrap());
        // 0 -> 1 -> 2 -> 0 cycle.
        assert!(m(&[&[NEG, 0.0, NEG], &[NEG, NEG, 0.0], &[0.0, NEG, NEG]])
            .is_irreducible()
            .unwrap());
        // Upper triangular.
        assert!(!m(&[&[0.0, 1.0], &[NEG, 0.0]]).is_irreducible().unwrap());
    }

    #[test]
    fn span_membership() {
        let x = col(&[1.0, -2.0, 4.0]);
        let gens = TropMatrix::from_columns(std::slice::from_ref(&x)).unwrap();
        let res = span_member(&x.scale(Tropical::new(2.0)), &gens, TOL).unwrap();
        assert!(res.member);
        assert_eq!(res.coefficients.to_f64s(), vec![2.0]);

        let res = span_member(&col(&[0.0, 0.0]), &TropMatrix::identity(2).unwrap(), TOL).unwrap();
        assert!(res.member);
        assert_eq!(res.coefficients.to_f64s(), vec![0.0, 0.0]);

        let res = span_member(&col(&[0.0, 1.0]), &m(&[&[0.0], &[0.0]]), TOL).unwrap();
        assert!(!res.member);
        assert_eq!(res.coefficients.to_f64s(), vec![0.0]);

        assert_eq!(
            span_member(&col(&[NEG, NEG]), &worked(), TOL),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn span_membership_with_partial_support() {
        // (0, 𝟘) is not generated by (𝟘, 0): coefficient must be 𝟘.
        let gens = m(&[&[NEG], &[0.0]]);
        let res = span_member(&col(&[0.0, NEG]), &gens, TOL).unwrap();
        assert!(!res.member);
        assert!(res.coefficients.get(0).is_zero());
    }

    #[test]
    fn span_of_one_generator_matches_grid_scan() {
        // Brute force over c for y = (0, 1) and x = (0, 0): c ⊗ x ≤ y holds
        // up to c = 0, and no c reproduces y.
        let y = [0.0, 1.0];
        let mut best = f64::NEG_INFINITY;
        let mut hit = false;
        for k in -400..=400 {
            let c = k as f64 * 0.01;
            if c <= y[0] && c <= y[1] {
                best = best.max(c);
            }
            hit |= (c - y[0]).abs() < 1e-12 && (c - y[1]).abs() < 1e-12;
        }
        assert_eq!(best, 0.0);
        assert!(!hit);
    }
}
