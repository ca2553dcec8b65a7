use std::fmt;

use super::scalar::{Number, TropScalar};
use super::vector::TropVector;
use crate::error::{Result, TropError};

/// Dense row-major max-plus matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TropMatrix<T = i64> {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar<T>>,
}

impl<T: Number> TropMatrix<T> {
    pub fn bottom(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![TropScalar::Bottom; rows * cols],
        }
    }

    /// Max-plus unity matrix: 𝟏 on the diagonal, 𝟎 elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::bottom(n, n);
        for i in 0..n {
            m.set(i, i, TropScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar<T>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(TropError::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> TropScalar<T> {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: TropScalar<T>) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[TropScalar<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> TropVector<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(TropError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.oplus(*b))
                .collect(),
        })
    }

    /// Tropical product `self ⊗ other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(TropError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::bottom(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_bottom() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a.otimes(other.get(t, j));
                    if v > out.get(i, j) {
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Tropical matrix-vector product `self ⊗ x`.
    pub fn mul_vec(&self, x: &TropVector<T>) -> Result<TropVector<T>> {
        if self.cols != x.len() {
            return Err(TropError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.entries())
                    .fold(TropScalar::Bottom, |acc, (a, b)| acc.oplus(a.otimes(*b)))
            })
            .collect())
    }

    /// Entrywise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }
}

impl<T: fmt::Display> fmt::Display for TropMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Matrix product, as a free function.
pub fn mat_mul<T: Number>(a: &TropMatrix<T>, x: &TropMatrix<T>) -> Result<TropMatrix<T>> {
    a.mul(x)
}

/// Matrix-vector product, as a free function.
pub fn mat_vec<T: Number>(a: &TropMatrix<T>, x: &TropVector<T>) -> Result<TropVector<T>> {
    a.mul_vec(x)
}
