#![forbid(unsafe_code)]

//! Max-plus (tropical) linear algebra and closed-form solvers for minimax
//! single-facility location under the Chebyshev distance.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalar`]: the idempotent semifield `(ℝ ∪ {−∞}, max, +)`.
//! - [`linalg`]: vectors and matrices over it, pseudo-inverses, the metric,
//!   closures (`A*`, `A×`, `A⁺`), irreducibility and span membership.
//! - [`solvers`]: first-kind equations `Ax = d` and second-kind equations
//!   and inequalities `Ax = x`, `Ax ≤ x`.
//! - [`minimax`]: minimization of `(Ax)⁻b ⊕ c⁻Ax` over regular `x`.
//! - [`location`]: the facility location problem itself, unconstrained and
//!   with tropical equality or inequality constraints.
//! - [`oracle`]: a brute-force grid search in plain `f64` arithmetic, used to
//!   cross-check the closed forms.

pub mod error;
pub mod linalg;
pub mod location;
pub mod minimax;
pub mod oracle;
pub mod scalar;
pub mod solvers;

pub use error::{Error, Result};
pub use linalg::{Orientation, TropMatrix, TropVector};
pub use location::{ConstraintKind, LocationConstraint, LocationProblem, SolutionReport};
pub use scalar::Tropical;

/// Default absolute tolerance for comparing finite tropical values.
pub const DEFAULT_TOL: f64 = 1e-9;
