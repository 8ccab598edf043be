//! Vectors and matrices over `ℝmax,+`.
//!
//! Products follow the usual max-plus rule `{BC}ᵢⱼ = ⊕ₖ bᵢₖ ⊗ cₖⱼ`. Vectors
//! carry an [`Orientation`] tag so that `x⁻ ⊗ y` is a scalar while `A ⊗ x`
//! is a column; mixing orientations in a product is a dimension error.

mod closure;
mod matrix;
mod vector;

pub use closure::{span_member, SpanMembership};
pub use matrix::TropMatrix;
pub use vector::{Orientation, TropVector};
