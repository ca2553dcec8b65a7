//! Two-inequality systems `A ⊗ x ≤ B ⊗ x` and the I/J/K index partition.
//!
//! Indices are 0-based in this API; file formats and printed output use
//! 1-based indices.

use std::collections::BTreeSet;

use crate::error::{Result, TropError};
use crate::tropical::{Number, TropMatrix, TropScalar, TropVector};

/// Selects one of the two inequalities.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Row {
    First,
    Second,
}

impl Row {
    pub const BOTH: [Row; 2] = [Row::First, Row::Second];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Row::First => 0,
            Row::Second => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn other(self) -> Row {
        match self {
            Row::First => Row::Second,
            Row::Second => Row::First,
        }
    }
}

/// The pair `(A, B)` of `2 × n` matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoRowSystem<T = i64> {
    a: TropMatrix<T>,
    b: TropMatrix<T>,
}

impl<T: Number> TwoRowSystem<T> {
    pub fn new(a: TropMatrix<T>, b: TropMatrix<T>) -> Result<Self> {
        if a.rows() != 2 || b.rows() != 2 || a.cols() != b.cols() || a.cols() == 0 {
            return Err(TropError::BadSystemShape(format!(
                "A is {}x{}, B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        Ok(Self { a, b })
    }

    /// Builds a system from its four rows in file order.
    pub fn from_rows(
        a1: Vec<TropScalar<T>>,
        a2: Vec<TropScalar<T>>,
        b1: Vec<TropScalar<T>>,
        b2: Vec<TropScalar<T>>,
    ) -> Result<Self> {
        let a = TropMatrix::from_rows(vec![a1, a2])?;
        let b = TropMatrix::from_rows(vec![b1, b2])?;
        Self::new(a, b)
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn a_matrix(&self) -> &TropMatrix<T> {
        &self.a
    }

    pub fn b_matrix(&self) -> &TropMatrix<T> {
        &self.b
    }

    #[inline]
    pub fn a(&self, row: Row, j: usize) -> TropScalar<T> {
        self.a.get(row.index(), j)
    }

    #[inline]
    pub fn b(&self, row: Row, j: usize) -> TropScalar<T> {
        self.b.get(row.index(), j)
    }

    /// `γ^row_{ki} = b_{row,k}⁻¹ ⊗ a_{row,i}`.
    pub fn gamma(&self, row: Row, k: usize, i: usize) -> Result<TropScalar<T>> {
        Ok(self.b(row, k).inv()?.otimes(self.a(row, i)))
    }

    /// Same as [`gamma`](Self::gamma) for callers that already know
    /// `b_{row,k}` is finite.
    #[inline]
    pub(crate) fn gamma_fast(&self, row: Row, k: usize, i: usize) -> TropScalar<T> {
        match (self.a(row, i), self.b(row, k)) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a - b),
            (_, TropScalar::Finite(_)) => TropScalar::Bottom,
            _ => panic!("gamma with bottom b at pivot {k}"),
        }
    }

    /// Both sides of each inequality evaluated at `x`.
    pub fn sides(&self, x: &TropVector<T>) -> Result<[(TropScalar<T>, TropScalar<T>); 2]> {
        let ax = self.a.mul_vec(x)?;
        let bx = self.b.mul_vec(x)?;
        Ok([(ax[0], bx[0]), (ax[1], bx[1])])
    }

    pub fn is_solution(&self, x: &TropVector<T>) -> Result<bool> {
        Ok(self.sides(x)?.iter().all(|(l, r)| l <= r))
    }

    pub fn classify(&self) -> IndexClassification {
        let kinds = Row::BOTH.map(|row| {
            (0..self.n())
                .map(|i| {
                    let (a, b) = (self.a(row, i), self.b(row, i));
                    if a > b {
                        IndexKind::I
                    } else if b.is_finite() {
                        IndexKind::J
                    } else {
                        IndexKind::K
                    }
                })
                .collect()
        });
        IndexClassification { kinds }
    }

    /// The system on the given coordinates only (in the given order).
    pub fn restrict(&self, coords: &[usize]) -> Result<Self> {
        let pick = |m: &TropMatrix<T>, r: usize| coords.iter().map(|&j| m.get(r, j)).collect();
        Self::from_rows(
            pick(&self.a, 0),
            pick(&self.a, 1),
            pick(&self.b, 0),
            pick(&self.b, 1),
        )
    }

    /// Replaces one inequality by the always-true `𝟎 ≤ x₁ ⊕ … ⊕ xₙ`.
    pub(crate) fn with_vacuous_row(&self, row: Row) -> Self {
        let mut out = self.clone();
        for j in 0..self.n() {
            out.a.set(row.index(), j, TropScalar::Bottom);
            out.b.set(row.index(), j, TropScalar::one());
        }
        out
    }

    /// The same system with column `j` of both `A` and `B` multiplied by `c`.
    pub fn shift_column(&self, j: usize, c: T) -> Self {
        let mut out = self.clone();
        for r in 0..2 {
            out.a.set(r, j, self.a.get(r, j).otimes(TropScalar::Finite(c)));
            out.b.set(r, j, self.b.get(r, j).otimes(TropScalar::Finite(c)));
        }
        out
    }
}

pub fn classify<T: Number>(sys: &TwoRowSystem<T>) -> IndexClassification {
    sys.classify()
}

pub fn gamma<T: Number>(sys: &TwoRowSystem<T>, row: Row, k: usize, i: usize) -> Result<TropScalar<T>> {
    sys.gamma(row, k, i)
}

pub fn is_solution<T: Number>(sys: &TwoRowSystem<T>, x: &TropVector<T>) -> Result<bool> {
    sys.is_solution(x)
}

/// Role of an index in one inequality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IndexKind {
    /// `a > b`: the variable only matters on the left.
    I,
    /// `a ≤ b`, `b` finite: the variable can dominate the right side.
    J,
    /// `a = b = 𝟎`: the variable does not occur.
    K,
}

/// The partitions `{1..n} = I₁ ∪ J₁ ∪ K₁ = I₂ ∪ J₂ ∪ K₂`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexClassification {
    kinds: [Vec<IndexKind>; 2],
}

impl IndexClassification {
    pub fn n(&self) -> usize {
        self.kinds[0].len()
    }

    #[inline]
    pub fn kind(&self, row: Row, i: usize) -> IndexKind {
        self.kinds[row.index()][i]
    }

    #[inline]
    pub fn in_i(&self, row: Row, i: usize) -> bool {
        self.kind(row, i) == IndexKind::I
    }

    #[inline]
    pub fn in_j(&self, row: Row, i: usize) -> bool {
        self.kind(row, i) == IndexKind::J
    }

    #[inline]
    pub fn in_k(&self, row: Row, i: usize) -> bool {
        self.kind(row, i) == IndexKind::K
    }

    /// All indices of the given kind in the given row, ascending.
    pub fn set(&self, row: Row, kind: IndexKind) -> BTreeSet<usize> {
        self.filter(|i| self.kind(row, i) == kind).into_iter().collect()
    }

    /// The complement `Ī_row = J_row ∪ K_row`.
    pub fn not_i(&self, row: Row) -> BTreeSet<usize> {
        self.filter(|i| !self.in_i(row, i)).into_iter().collect()
    }

    pub fn i1(&self) -> BTreeSet<usize> {
        self.set(Row::First, IndexKind::I)
    }
    pub fn j1(&self) -> BTreeSet<usize> {
        self.set(Row::First, IndexKind::J)
    }
    pub fn k1(&self) -> BTreeSet<usize> {
        self.set(Row::First, IndexKind::K)
    }
    pub fn i2(&self) -> BTreeSet<usize> {
        self.set(Row::Second, IndexKind::I)
    }
    pub fn j2(&self) -> BTreeSet<usize> {
        self.set(Row::Second, IndexKind::J)
    }
    pub fn k2(&self) -> BTreeSet<usize> {
        self.set(Row::Second, IndexKind::K)
    }

    /// Indices satisfying `pred`, ascending.
    pub fn filter(&self, pred: impl Fn(usize) -> bool) -> Vec<usize> {
        (0..self.n()).filter(|&i| pred(i)).collect()
    }
}
