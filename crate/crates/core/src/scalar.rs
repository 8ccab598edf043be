//! Scalars of the idempotent semifield `ℝmax,+ = (ℝ ∪ {−∞}, −∞, 0, max, +)`.
//!
//! `⊕` is `max`, `⊗` is conventional addition, the zero `𝟘` is `−∞` and the
//! identity `𝟙` is `0`. The linear order induced by `⊕` is the usual order on
//! the extended reals, so [`Tropical`] implements [`Ord`].

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `ℝmax,+`: a finite `f64` or the bottom element `−∞`.
///
/// NaN and `+∞` are never representable.
#[derive(Clone, Copy, Default)]
pub struct Tropical(f64);

impl Tropical {
    /// The additive identity `𝟘 = −∞`.
    pub const ZERO: Self = Tropical(f64::NEG_INFINITY);
    /// The multiplicative identity `𝟙 = 0`.
    pub const ONE: Self = Tropical(0.0);

    /// Builds a scalar, mapping `−∞` to [`Tropical::ZERO`].
    ///
    /// Panics on NaN or `+∞`; use [`Tropical::try_new`] for untrusted input.
    pub fn new(value: f64) -> Self {
        match Self::try_new(value) {
            Ok(t) => t,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(value: f64) -> Result<Self> {
        if value.is_nan() || value == f64::INFINITY {
            return Err(Error::NonFinite(value));
        }
        if value == f64::NEG_INFINITY {
            return Ok(Self::ZERO);
        }
        // Collapse -0.0 so that equality and serialization see one 𝟙.
        Ok(Tropical(value + 0.0))
    }

    /// `None` maps to `𝟘`.
    pub fn from_option(value: Option<f64>) -> Result<Self> {
        match value {
            None => Ok(Self::ZERO),
            Some(v) if v.is_finite() => Ok(Tropical(v + 0.0)),
            Some(v) => Err(Error::NonFinite(v)),
        }
    }

    /// The underlying extended real (`−∞` for `𝟘`).
    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `None` for `𝟘`, `Some(v)` otherwise.
    #[inline]
    pub fn to_option(self) -> Option<f64> {
        if self.is_zero() {
            None
        } else {
            Some(self.0)
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        !self.is_zero()
    }

    /// `a ⊕ b = max(a, b)`.
    #[inline]
    pub fn oplus(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    /// `a ⊗ b = a + b`, with `𝟘` absorbing.
    #[inline]
    pub fn otimes(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            Self::ZERO
        } else {
            Tropical(self.0 + other.0 + 0.0)
        }
    }

    /// Multiplicative inverse `−a`; `𝟘` maps to itself, matching the
    /// pseudo-inverse convention for vectors.
    #[inline]
    pub fn inv(self) -> Self {
        if self.is_zero() {
            Self::ZERO
        } else {
            Tropical(-self.0 + 0.0)
        }
    }

    /// Tropical power `a^r`, i.e. the conventional product `r·a`.
    ///
    /// Only integer and half-integer exponents are accepted. `𝟘^r` is `𝟘`
    /// for `r > 0` and a domain error otherwise.
    pub fn pow(self, exponent: f64) -> Result<Self> {
        if !exponent.is_finite() || (2.0 * exponent).fract() != 0.0 {
            return Err(Error::Domain(format!(
                "exponent {exponent} is not an integer or half-integer"
            )));
        }
        if self.is_zero() {
            return if exponent > 0.0 {
                Ok(Self::ZERO)
            } else {
                Err(Error::Domain(format!(
                    "𝟘 raised to non-positive power {exponent}"
                )))
            };
        }
        if exponent == 0.0 {
            return Ok(Self::ONE);
        }
        Ok(Tropical(exponent * self.0 + 0.0))
    }

    /// Square root `a^{1/2}`; total on the domain since `𝟘^{1/2} = 𝟘`.
    #[inline]
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            Self::ZERO
        } else {
            Tropical(self.0 / 2.0)
        }
    }

    /// `𝟘` equals only `𝟘`; finite values compare with absolute tolerance.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => (self.0 - other.0).abs() <= tol,
            _ => false,
        }
    }
}

impl PartialEq for Tropical {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Tropical {}

impl PartialOrd for Tropical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tropical {
    fn cmp(&self, other: &Self) -> Ordering {
        // No NaN can be constructed, so this never falls through.
        self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal)
    }
}

impl fmt::Debug for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("-inf")
        } else {
            fmt::Display::fmt(&self.0, f)
        }
    }
}

impl Add for Tropical {
    type Output = Tropical;

    /// `⊕`
    fn add(self, rhs: Self) -> Self {
        self.oplus(rhs)
    }
}

impl Mul for Tropical {
    type Output = Tropical;

    /// `⊗`
    fn mul(self, rhs: Self) -> Self {
        self.otimes(rhs)
    }
}

impl Sum for Tropical {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Tropical::oplus)
    }
}

impl Product for Tropical {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ONE, Tropical::otimes)
    }
}

impl From<Tropical> for f64 {
    fn from(t: Tropical) -> f64 {
        t.0
    }
}

impl Serialize for Tropical {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_option().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tropical {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Option::<f64>::deserialize(deserializer)?;
        Tropical::from_option(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: f64) -> Tropical {
        Tropical::new(v)
    }

    #[test]
    fn oplus_is_max() {
        assert_eq!(t(3.0).oplus(t(5.0)), t(5.0));
        assert_eq!(Tropical::ZERO.oplus(t(7.0)), t(7.0));
        assert_eq!(t(-2.0).oplus(t(-2.0)), t(-2.0));
    }

    #[test]
    fn otimes_is_plus_with_absorbing_zero() {
        assert_eq!(t(3.0).otimes(t(5.0)), t(8.0));
        assert!(Tropical::ZERO.otimes(t(5.0)).is_zero());
        assert!(t(5.0).otimes(Tropical::ZERO).is_zero());
        for x in [-3.5, 0.0, 12.25] {
            assert_eq!(Tropical::ONE.otimes(t(x)), t(x));
        }
    }

    #[test]
    fn inverse() {
        assert_eq!(t(4.0).inv(), t(-4.0));
        assert_eq!(Tropical::ONE.inv(), Tropical::ONE);
        assert!(Tropical::ZERO.inv().is_zero());
    }

    #[test]
    fn powers() {
        assert_eq!(t(8.0).pow(0.5).unwrap(), t(4.0));
        assert_eq!(t(-3.0).pow(0.0).unwrap(), Tropical::ONE);
        assert!(Tropical::ZERO.pow(3.0).unwrap().is_zero());
        assert_eq!(t(2.0).pow(-3.0).unwrap(), t(-6.0));
        assert!(matches!(Tropical::ZERO.pow(0.0), Err(Error::Domain(_))));
        assert!(matches!(Tropical::ZERO.pow(-1.0), Err(Error::Domain(_))));
        assert!(matches!(t(1.0).pow(1.0 / 3.0), Err(Error::Domain(_))));
        assert_eq!(t(8.0).sqrt(), t(4.0));
    }

    #[test]
    fn rejects_nan_and_plus_infinity() {
        assert!(Tropical::try_new(f64::NAN).is_err());
        assert!(Tropical::try_new(f64::INFINITY).is_err());
        assert!(Tropical::try_new(f64::NEG_INFINITY).unwrap().is_zero());
        assert!(Tropical::from_option(Some(f64::NAN)).is_err());
        assert!(Tropical::from_option(Some(f64::NEG_INFINITY)).is_err());
    }

    #[test]
    fn negative_zero_is_one() {
        let z = t(-0.0);
        assert_eq!(z, Tropical::ONE);
        assert!(z.value().is_sign_positive());
    }

    #[test]
    fn json_uses_null_for_zero() {
        assert_eq!(serde_json::to_string(&Tropical::ZERO).unwrap(), "null");
        assert_eq!(serde_json::to_string(&t(2.5)).unwrap(), "2.5");
        let back: Tropical = serde_json::from_str("null").unwrap();
        assert!(back.is_zero());
        let back: Tropical = serde_json::from_str("-7.25").unwrap();
        assert_eq!(back, t(-7.25));
    }

    #[test]
    fn approx_eq_treats_zero_exactly() {
        assert!(Tropical::ZERO.approx_eq(Tropical::ZERO, 1e-9));
        assert!(!Tropical::ZERO.approx_eq(t(-1e300), 1e-9));
        assert!(t(1.0).approx_eq(t(1.0 + 1e-12), 1e-9));
    }
}
