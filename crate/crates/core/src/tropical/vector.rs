use std::fmt;
use std::ops::Index;

use super::scalar::{Number, TropScalar};

/// Dense max-plus vector. The support is derived from the entries on demand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TropVector<T = i64> {
    entries: Vec<TropScalar<T>>,
}

impl<T: Number> TropVector<T> {
    pub fn new(entries: Vec<TropScalar<T>>) -> Self {
        Self { entries }
    }

    pub fn bottom(n: usize) -> Self {
        Self {
            entries: vec![TropScalar::Bottom; n],
        }
    }

    /// Unit vector `e_i` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::bottom(n);
        v.entries[i] = TropScalar::one();
        v
    }

    pub fn from_finite<I: IntoIterator<Item = T>>(values: I) -> Self {
        Self {
            entries: values.into_iter().map(TropScalar::Finite).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[TropScalar<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<TropScalar<T>> {
        self.entries
    }

    pub fn set(&mut self, i: usize, value: TropScalar<T>) {
        self.entries[i] = value;
    }

    /// Indices of finite entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.is_finite().then_some(i))
            .collect()
    }

    pub fn is_bottom(&self) -> bool {
        self.entries.iter().all(TropScalar::is_bottom)
    }

    pub fn oplus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(*b))
                .collect(),
        }
    }

    /// Scalar multiple `λ ⊗ x`.
    pub fn scale(&self, lambda: TropScalar<T>) -> Self {
        Self {
            entries: self.entries.iter().map(|v| lambda.otimes(*v)).collect(),
        }
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Largest finite entry, if any.
    pub fn max_finite(&self) -> Option<T> {
        self.entries.iter().filter_map(TropScalar::finite).max()
    }

    /// Rescales so the largest finite entry is 0. The all-bottom vector is
    /// returned unchanged.
    pub fn canonical(&self) -> Self {
        match self.max_finite() {
            None => self.clone(),
            Some(m) => self.scale(TropScalar::Finite(-m)),
        }
    }

    /// True if `other = λ ⊗ self` for some finite λ.
    pub fn proportional(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<T> Index<usize> for TropVector<T> {
    type Output = TropScalar<T>;

    fn index(&self, i: usize) -> &TropScalar<T> {
        &self.entries[i]
    }
}

impl<T: fmt::Display> fmt::Display for TropVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.entries.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl<T> FromIterator<TropScalar<T>> for TropVector<T> {
    fn from_iter<I: IntoIterator<Item = TropScalar<T>>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}
