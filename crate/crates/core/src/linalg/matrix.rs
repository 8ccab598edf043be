use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Orientation, TropVector};
use crate::scalar::Tropical;

/// Dense row-major matrix over `ℝmax,+`.
#[derive(Clone, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Tropical>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Tropical>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(TropMatrix { rows, cols, data })
    }

    /// From nested rows of plain floats; `−∞` becomes `𝟘`.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let trop = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| Tropical::try_new(v)).collect())
            .collect::<Result<Vec<Vec<Tropical>>>>()?;
        Self::from_trop_rows(trop)
    }

    pub fn from_trop_rows(rows: Vec<Vec<Tropical>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n_cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged matrix: row {i} has {} entries, row 0 has {n_cols}",
                r.len()
            )));
        }
        Self::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given column vectors.
    pub fn from_columns(columns: &[TropVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, TropVector::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("columns of unequal length".into()));
        }
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            data.extend(columns.iter().map(|c| c.get(i)));
        }
        Self::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Tropical::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = Tropical::ONE;
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Tropical {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> TropVector {
        let entries = self.data[i * self.cols..(i + 1) * self.cols].to_vec();
        TropVector::row(entries).expect("matrix rows are non-empty")
    }

    pub fn column(&self, j: usize) -> TropVector {
        let entries = (0..self.rows).map(|i| self.get(i, j)).collect();
        TropVector::column(entries).expect("matrix columns are non-empty")
    }

    pub fn columns(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Nested rows with `−∞` for `𝟘`.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.cols)
            .map(|r| r.iter().map(|t| t.value()).collect())
            .collect()
    }

    /// No row consists entirely of `𝟘`.
    pub fn is_regular(&self) -> bool {
        self.data
            .chunks(self.cols)
            .all(|r| r.iter().any(|t| t.is_finite()))
    }

    /// Every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|t| t.is_finite())
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Componentwise `⊕`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix sum of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a + b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, c: Tropical) -> Self {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| c * a).collect(),
        }
    }

    /// Max-plus product `A ⊗ B`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                data.push(
                    (0..self.cols)
                        .map(|k| self.get(i, k) * other.get(k, j))
                        .sum(),
                );
            }
        }
        Self::new(self.rows, other.cols, data)
    }

    /// `A ⊗ x` for a column vector `x`.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        if x.orientation() != Orientation::Column || x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times {:?} vector of length {}",
                self.rows,
                self.cols,
                x.orientation(),
                x.len()
            )));
        }
        let entries = self
            .data
            .chunks(self.cols)
            .map(|r| r.iter().zip(x.iter()).map(|(&a, b)| a * b).sum())
            .collect();
        TropVector::column(entries)
    }

    /// `A^p` by repeated multiplication, with `A⁰ = I`.
    pub fn pow(&self, p: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n)?;
        for _ in 0..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols)).finish()
    }
}

impl Serialize for TropMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for r in self.data.chunks(self.cols) {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Tropical>>::deserialize(deserializer)?;
        TropMatrix::from_trop_rows(rows).map_err(serde::de::Error::custom)
    }
}
