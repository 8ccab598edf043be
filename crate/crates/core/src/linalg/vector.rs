use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::TropMatrix;
use crate::scalar::Tropical;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Column,
    Row,
}

/// A dense vector over `ℝmax,+`, tagged as a column or a row.
///
/// Vectors are columns unless they come out of [`TropVector::pseudo_inverse`]
/// or [`TropVector::transpose`].
#[derive(Clone, PartialEq, Eq)]
pub struct TropVector {
    entries: Vec<Tropical>,
    orientation: Orientation,
}

impl TropVector {
    /// A column vector. Fails on an empty entry list.
    pub fn column(entries: Vec<Tropical>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch(
                "vector must have at least one entry".into(),
            ));
        }
        Ok(TropVector {
            entries,
            orientation: Orientation::Column,
        })
    }

    pub fn row(entries: Vec<Tropical>) -> Result<Self> {
        Ok(Self::column(entries)?.transpose())
    }

    /// A column vector from plain floats; `−∞` becomes `𝟘`.
    pub fn from_f64s(values: &[f64]) -> Result<Self> {
        let entries = values
            .iter()
            .map(|&v| Tropical::try_new(v))
            .collect::<Result<Vec<_>>>()?;
        Self::column(entries)
    }

    /// The column vector with every entry equal to `𝟘`.
    pub fn zeros(len: usize) -> Result<Self> {
        Self::column(vec![Tropical::ZERO; len])
    }

    pub fn constant(len: usize, value: Tropical) -> Result<Self> {
        Self::column(vec![value; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: vectors have at least one entry.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Tropical {
        self.entries[i]
    }

    #[inline]
    pub fn entries(&self) -> &[Tropical] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = Tropical> + '_ {
        self.entries.iter().copied()
    }

    #[inline]
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Raw values, with `−∞` for `𝟘`.
    pub fn to_f64s(&self) -> Vec<f64> {
        self.iter().map(Tropical::value).collect()
    }

    /// The same entries with the opposite orientation tag.
    pub fn transpose(mut self) -> Self {
        self.orientation = match self.orientation {
            Orientation::Column => Orientation::Row,
            Orientation::Row => Orientation::Column,
        };
        self
    }

    /// No entry is `𝟘`.
    pub fn is_regular(&self) -> bool {
        self.iter().all(Tropical::is_finite)
    }

    /// Every entry is `𝟘`.
    pub fn is_zero(&self) -> bool {
        self.iter().all(Tropical::is_zero)
    }

    fn check_same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.len() != other.len() || self.orientation != other.orientation {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {:?} of length {} vs {:?} of length {}",
                self.orientation,
                self.len(),
                other.orientation,
                other.len()
            )));
        }
        Ok(())
    }

    /// Componentwise `⊕`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "vector sum")?;
        Ok(TropVector {
            entries: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| a.oplus(b))
                .collect(),
            orientation: self.orientation,
        })
    }

    /// Scalar multiple `c ⊗ x`.
    pub fn scale(&self, c: Tropical) -> Self {
        TropVector {
            entries: self.iter().map(|a| c.otimes(a)).collect(),
            orientation: self.orientation,
        }
    }

    /// `x⁻`: entrywise inverse of the finite entries, `𝟘` kept as `𝟘`,
    /// with the orientation flipped.
    pub fn pseudo_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(TropVector {
            entries: self.iter().map(Tropical::inv).collect(),
            orientation: match self.orientation {
                Orientation::Column => Orientation::Row,
                Orientation::Row => Orientation::Column,
            },
        })
    }

    /// Inner product of a row with a column: `⊕ᵢ xᵢ ⊗ yᵢ`.
    pub fn dot(&self, column: &Self) -> Result<Tropical> {
        if self.orientation != Orientation::Row
            || column.orientation != Orientation::Column
            || self.len() != column.len()
        {
            return Err(Error::DimensionMismatch(format!(
                "inner product needs row·column of equal length, got {:?}({}) · {:?}({})",
                self.orientation,
                self.len(),
                column.orientation,
                column.len()
            )));
        }
        Ok(self.iter().zip(column.iter()).map(|(a, b)| a * b).sum())
    }

    /// Row vector times matrix, `x ⊗ A`, giving a row.
    pub fn mul_matrix(&self, a: &TropMatrix) -> Result<Self> {
        if self.orientation != Orientation::Row || self.len() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "row vector of length {} ({:?}) times {}x{} matrix",
                self.len(),
                self.orientation,
                a.rows(),
                a.cols()
            )));
        }
        let entries = (0..a.cols())
            .map(|j| (0..a.rows()).map(|i| self.entries[i] * a.get(i, j)).sum())
            .collect();
        Ok(TropVector {
            entries,
            orientation: Orientation::Row,
        })
    }

    /// Outer product of a column with a row, `x ⊗ y`, giving a matrix.
    pub fn outer(&self, row: &Self) -> Result<TropMatrix> {
        if self.orientation != Orientation::Column || row.orientation != Orientation::Row {
            return Err(Error::DimensionMismatch(
                "outer product needs column ⊗ row".into(),
            ));
        }
        let data = self
            .iter()
            .flat_map(|a| row.iter().map(move |b| a * b))
            .collect();
        TropMatrix::new(self.len(), row.len(), data)
    }

    /// The metric `ρ(x, y) = y⁻x ⊕ x⁻y`, the Chebyshev distance for regular
    /// vectors.
    pub fn rho(&self, other: &Self) -> Result<Tropical> {
        self.check_same_shape(other, "rho")?;
        if !self.is_regular() || !other.is_regular() {
            return Err(Error::NotRegular("vector"));
        }
        let (x, y) = match self.orientation {
            Orientation::Column => (self.clone(), other.clone()),
            Orientation::Row => (self.clone().transpose(), other.clone().transpose()),
        };
        Ok(y.pseudo_inverse()?.dot(&x)? + x.pseudo_inverse()?.dot(&y)?)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self.orientation == other.orientation
            && self
                .iter()
                .zip(other.iter())
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Componentwise `self ≤ other + tol` (orientation ignored).
    pub fn approx_le(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .iter()
                .zip(other.iter())
                .all(|(a, b)| a.is_zero() || (b.is_finite() && a.value() <= b.value() + tol))
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientation == Orientation::Row {
            f.write_str("row")?;
        }
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

impl Serialize for TropVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropVector {
    /// Always yields a column vector.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Tropical>::deserialize(deserializer)?;
        TropVector::column(entries).map_err(serde::de::Error::custom)
    }
}
