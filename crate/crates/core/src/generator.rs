//! Generators of the solution cone and their canonical forms.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::tropical::{Number, TropScalar, TropVector};

/// Inline storage covers every family generator (support at most 3).
type Entries<T> = SmallVec<[(usize, T); 3]>;

/// Classified generator families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    S1,
    S2A1,
    S2A2,
    S2B,
    S2C,
    S3A,
    S3B1,
    S3B2,
    S3C1,
    S3C2,
    S3D1,
    S3D2,
    S3E,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::S1,
        Family::S2A1,
        Family::S2A2,
        Family::S2B,
        Family::S2C,
        Family::S3A,
        Family::S3B1,
        Family::S3B2,
        Family::S3C1,
        Family::S3C2,
        Family::S3D1,
        Family::S3D2,
        Family::S3E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S1 => "S1",
            Family::S2A1 => "S2A1",
            Family::S2A2 => "S2A2",
            Family::S2B => "S2B",
            Family::S2C => "S2C",
            Family::S3A => "S3A",
            Family::S3B1 => "S3B1",
            Family::S3B2 => "S3B2",
            Family::S3C1 => "S3C1",
            Family::S3C2 => "S3C2",
            Family::S3D1 => "S3D1",
            Family::S3D2 => "S3D2",
            Family::S3E => "S3E",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Size of the support of every generator in the family.
    pub fn arity(self) -> usize {
        match self {
            Family::S1 => 1,
            Family::S2A1 | Family::S2A2 | Family::S2B | Family::S2C => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a generator came from.
///
/// For family generators, `i` is the index whose coefficient is 𝟏 in the
/// closed-form expression; `k` and `l` are the pivot indices (for `S2A2`
/// the single pivot lies in `J₂` and is stored in `k`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Origin {
    Family {
        family: Family,
        i: usize,
        k: Option<usize>,
        l: Option<usize>,
    },
    /// Column `column` of a generic Kleene star for the pivot pair `(k, l)`;
    /// a `None` pivot marks an inequality with empty J-set.
    StarColumn {
        k: Option<usize>,
        l: Option<usize>,
        column: usize,
    },
    /// A vector supplied from outside (e.g. a basis file).
    External { line: usize },
}

impl Origin {
    pub fn family(&self) -> Option<Family> {
        match self {
            Origin::Family { family, .. } => Some(*family),
            _ => None,
        }
    }
}

/// A cone generator with at most a handful of finite entries, stored sparsely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator<T = i64> {
    pub origin: Origin,
    n: usize,
    entries: Entries<T>,
}

impl<T: Number> Generator<T> {
    /// `entries` are `(index, finite value)` pairs with distinct indices.
    pub fn from_entries(origin: Origin, n: usize, entries: impl IntoIterator<Item = (usize, T)>) -> Self {
        let mut entries: Entries<T> = entries.into_iter().collect();
        entries.sort_unstable_by_key(|e| e.0);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| e.0 < n));
        Self { origin, n, entries }
    }

    pub fn from_vector(origin: Origin, v: &TropVector<T>) -> Self {
        let entries = v
            .entries()
            .iter()
            .enumerate()
            .filter_map(|(j, x)| x.finite().map(|x| (j, x)))
            .collect();
        Self {
            origin,
            n: v.len(),
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> TropScalar<T> {
        self.entries
            .binary_search_by_key(&j, |e| e.0)
            .map_or(TropScalar::Bottom, |p| TropScalar::Finite(self.entries[p].1))
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn vector(&self) -> TropVector<T> {
        let mut v = TropVector::bottom(self.n);
        for &(j, x) in &self.entries {
            v.set(j, TropScalar::Finite(x));
        }
        v
    }

    pub fn canonical(&self) -> CanonicalVec<T> {
        CanonicalVec::from_sparse(self.n, &self.entries)
    }

    /// The same generator rescaled to canonical form.
    pub fn normalized(&self) -> Self {
        Self {
            origin: self.origin,
            n: self.n,
            entries: self.canonical().entries,
        }
    }

    /// Order of the canonical forms, for generators already in canonical
    /// scaling.
    pub(crate) fn cmp_normalized(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        cmp_sparse(&self.entries, &other.entries)
    }

    /// Re-indexes into a larger ambient space: coordinate `j` becomes
    /// `coords[j]`; origin indices are mapped the same way.
    pub(crate) fn embed(&self, n: usize, coords: &[usize]) -> Self {
        let map = |o: Option<usize>| o.map(|j| coords[j]);
        let origin = match self.origin {
            Origin::Family { family, i, k, l } => Origin::Family {
                family,
                i: coords[i],
                k: map(k),
                l: map(l),
            },
            Origin::StarColumn { k, l, column } => Origin::StarColumn {
                k: map(k),
                l: map(l),
                column: coords[column],
            },
            o @ Origin::External { .. } => o,
        };
        Self::from_entries(origin, n, self.entries.iter().map(|&(j, x)| (coords[j], x)))
    }
}

/// A nonzero vector scaled so that its largest finite entry is 𝟏 (= 0).
///
/// Two generators are proportional iff their canonical forms are equal.
/// The order is lexicographic over the dense coordinates with `Bottom` lowest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalVec<T = i64> {
    n: usize,
    entries: Entries<T>,
}

impl<T: Number> CanonicalVec<T> {
    fn from_sparse(n: usize, entries: &[(usize, T)]) -> Self {
        let shift = entries.iter().map(|e| e.1).max().unwrap_or_else(T::zero);
        Self {
            n,
            entries: entries.iter().map(|&(j, x)| (j, x - shift)).collect(),
        }
    }

    pub fn from_vector(v: &TropVector<T>) -> Self {
        let entries: Entries<T> = v
            .entries()
            .iter()
            .enumerate()
            .filter_map(|(j, x)| x.finite().map(|x| (j, x)))
            .collect();
        Self::from_sparse(v.len(), &entries)
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn vector(&self) -> TropVector<T> {
        let mut v = TropVector::bottom(self.n);
        for &(j, x) in &self.entries {
            v.set(j, TropScalar::Finite(x));
        }
        v
    }
}

/// Dense lexicographic order of two sparse vectors, `Bottom` lowest.
fn cmp_sparse<T: Number>(x: &[(usize, T)], y: &[(usize, T)]) -> Ordering {
    let (mut a, mut b) = (x.iter(), y.iter());
    loop {
        match (a.next(), b.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) => {
                // the side with the smaller index is finite where the
                // other is bottom
                let ord = y.0.cmp(&x.0).then(x.1.cmp(&y.1));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

impl<T: Number> Ord for CanonicalVec<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| cmp_sparse(&self.entries, &other.entries))
    }
}

impl<T: Number> PartialOrd for CanonicalVec<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Number> fmt::Display for CanonicalVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.vector(), f)
    }
}
