use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::TropError;

/// Exact ordered number type carried by finite scalars.
///
/// Implemented for every type with the listed operations; in practice `i64`
/// and `Ratio<i64>`. Floating point is deliberately excluded by the `Ord` and
/// `Hash` bounds.
pub trait Number:
    Copy
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Number for T where
    T: Copy
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + Zero
        + Add<Output = T>
        + Sub<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
        + 'static
{
}

/// Exact rationals, for systems with non-integer data.
pub type Rational = Ratio<i64>;

/// An element of the max-plus semiring: `Bottom` (minus infinity) or a finite
/// exact number.
///
/// The derived order puts `Bottom` below every finite value, which is the
/// order used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TropScalar<T = i64> {
    Bottom,
    Finite(T),
}

impl<T: Number> TropScalar<T> {
    /// The semiring zero.
    pub const fn zero() -> Self {
        TropScalar::Bottom
    }

    /// The semiring unity, the finite value 0.
    pub fn one() -> Self {
        TropScalar::Finite(T::zero())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    pub fn finite(&self) -> Option<T> {
        match *self {
            TropScalar::Bottom => None,
            TropScalar::Finite(v) => Some(v),
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(self, other: Self) -> Self {
        self.max(other)
    }

    /// `a ⊗ b = a + b`, absorbing at `Bottom`.
    pub fn otimes(self, other: Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }

    /// Multiplicative inverse `-a`.
    pub fn inv(self) -> Result<Self, TropError> {
        match self {
            TropScalar::Bottom => Err(TropError::InversionOfBottom),
            TropScalar::Finite(a) => Ok(TropScalar::Finite(-a)),
        }
    }

    /// Compares against the unity 𝟏.
    pub fn cmp_one(&self) -> Ordering {
        self.cmp(&Self::one())
    }
}

impl<T> From<T> for TropScalar<T> {
    fn from(v: T) -> Self {
        TropScalar::Finite(v)
    }
}

impl<T: Display> Display for TropScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            TropScalar::Finite(v) => Display::fmt(v, f),
        }
    }
}

pub fn t_add<T: Number>(a: TropScalar<T>, b: TropScalar<T>) -> TropScalar<T> {
    a.oplus(b)
}

pub fn t_mul<T: Number>(a: TropScalar<T>, b: TropScalar<T>) -> TropScalar<T> {
    a.otimes(b)
}

pub fn t_inv<T: Number>(a: TropScalar<T>) -> Result<TropScalar<T>, TropError> {
    a.inv()
}
