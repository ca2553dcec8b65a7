//! Extremality: auxiliary index sets, per-family selection rules, the
//! multiorder principle and max-linear decomposition.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::engine::{for_each_candidate, g1, g2, in_w, Partition};
use crate::generator::{CanonicalVec, Family, Generator, Origin};
use crate::system::{IndexClassification, Row, TwoRowSystem};
use crate::tropical::{Number, TropScalar, TropVector};

/// Index sets that decide extremality of the 2- and 3-generators, stored
/// as dense bit tables. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxSets {
    n: usize,
    /// `(k, l) ∈ (J₁∩I₂)×(J₂∩I₁)` with `γ¹_{kl}γ²_{lk} ≤ 𝟏`.
    w: FixedBitSet,
    /// The remaining pairs of `(J₁∩I₂)×(J₂∩I₁)`, `γ¹_{kl}γ²_{lk} > 𝟏`.
    wbar: FixedBitSet,
    /// `L₁(i) = {k ∈ J₁∩J₂ : γ¹_{ki} < γ²_{ki}}` for `i ∈ I₁∩I₂`.
    l1: FixedBitSet,
    /// `L₂(i) = {l ∈ J₁∩J₂ : γ²_{li} < γ¹_{li}}` for `i ∈ I₁∩I₂`.
    l2: FixedBitSet,
    /// `M₁(i,l) = {t ∈ J₁∩J₂ : γ¹_{tl}γ²_{li} < γ²_{ti}}`, `i ∈ I₂∩Ī₁`, `l ∈ J₂∩I₁`.
    m1: FixedBitSet,
    /// `M₂(i,k) = {t ∈ J₁∩J₂ : γ²_{tk}γ¹_{ki} < γ¹_{ti}}`, `i ∈ I₁∩Ī₂`, `k ∈ J₁∩I₂`.
    m2: FixedBitSet,
    /// `N₁(i,l) = {t ∈ L₁(i) : γ¹_{tl}γ²_{li} < γ²_{ti}}`, `i ∈ I₁∩I₂`, `l ∈ J₂∩I₁`.
    n1: FixedBitSet,
    /// `N₂(i,k) = {t ∈ L₂(i) : γ²_{tk}γ¹_{ki} < γ¹_{ti}}`, `i ∈ I₁∩I₂`, `k ∈ J₁∩I₂`.
    n2: FixedBitSet,
}

impl AuxSets {
    fn new(n: usize) -> Self {
        let pairs = FixedBitSet::with_capacity(n * n);
        let triples = FixedBitSet::with_capacity(n * n * n);
        Self {
            n,
            w: pairs.clone(),
            wbar: pairs.clone(),
            l1: pairs.clone(),
            l2: pairs,
            m1: triples.clone(),
            m2: triples.clone(),
            n1: triples.clone(),
            n2: triples,
        }
    }

    #[inline]
    fn at2(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    #[inline]
    fn at3(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n + b) * self.n + c
    }

    pub fn in_w(&self, k: usize, l: usize) -> bool {
        self.w.contains(self.at2(k, l))
    }
    pub fn in_wbar(&self, k: usize, l: usize) -> bool {
        self.wbar.contains(self.at2(k, l))
    }
    pub fn in_l1(&self, i: usize, k: usize) -> bool {
        self.l1.contains(self.at2(i, k))
    }
    pub fn in_l2(&self, i: usize, l: usize) -> bool {
        self.l2.contains(self.at2(i, l))
    }
    pub fn in_m1(&self, i: usize, l: usize, t: usize) -> bool {
        self.m1.contains(self.at3(i, l, t))
    }
    pub fn in_m2(&self, i: usize, k: usize, t: usize) -> bool {
        self.m2.contains(self.at3(i, k, t))
    }
    pub fn in_n1(&self, i: usize, l: usize, t: usize) -> bool {
        self.n1.contains(self.at3(i, l, t))
    }
    pub fn in_n2(&self, i: usize, k: usize, t: usize) -> bool {
        self.n2.contains(self.at3(i, k, t))
    }

    /// The pairs of `W`, ascending.
    pub fn w_pairs(&self) -> Vec<(usize, usize)> {
        self.w.ones().map(|x| (x / self.n, x % self.n)).collect()
    }

    /// The pairs of `W̄`, ascending.
    pub fn wbar_pairs(&self) -> Vec<(usize, usize)> {
        self.wbar.ones().map(|x| (x / self.n, x % self.n)).collect()
    }
}

pub fn compute_aux<T: Number>(sys: &TwoRowSystem<T>, cls: &IndexClassification) -> AuxSets {
    let p = Partition::new(cls);
    let mut aux = AuxSets::new(sys.n());

    for &k in &p.j1_i2 {
        for &l in &p.j2_i1 {
            let at = aux.at2(k, l);
            if in_w(sys, k, l) {
                aux.w.insert(at);
            } else {
                aux.wbar.insert(at);
            }
        }
    }
    for &i in &p.c {
        for &t in &p.j1_j2 {
            let (x, y) = (g1(sys, t, i), g2(sys, t, i));
            let at = aux.at2(i, t);
            aux.l1.set(at, x < y);
            aux.l2.set(at, y < x);
        }
    }
    for &i in &p.b {
        for &l in &p.j2_i1 {
            let li = g2(sys, l, i);
            for &t in &p.j1_j2 {
                let at = aux.at3(i, l, t);
                aux.m1.set(at, g1(sys, t, l).otimes(li) < g2(sys, t, i));
            }
        }
    }
    for &i in &p.a {
        for &k in &p.j1_i2 {
            let ki = g1(sys, k, i);
            for &t in &p.j1_j2 {
                let at = aux.at3(i, k, t);
                aux.m2.set(at, g2(sys, t, k).otimes(ki) < g1(sys, t, i));
            }
        }
    }
    for &i in &p.c {
        for &l in &p.j2_i1 {
            let li = g2(sys, l, i);
            for &t in &p.j1_j2 {
                let at = aux.at3(i, l, t);
                aux.n1
                    .set(at, aux.in_l1(i, t) && g1(sys, t, l).otimes(li) < g2(sys, t, i));
            }
        }
        for &k in &p.j1_i2 {
            let ki = g1(sys, k, i);
            for &t in &p.j1_j2 {
                let at = aux.at3(i, k, t);
                aux.n2
                    .set(at, aux.in_l2(i, t) && g2(sys, t, k).otimes(ki) < g1(sys, t, i));
            }
        }
    }
    aux
}

/// The closed-form extremality rule for one classified candidate.
///
/// `S1` and `S2A*`/`S2B` are always extremal. For a proportional `S2C` pair
/// (`γ¹_{kl}γ²_{lk} = 𝟏`) the copy with its unit coefficient at `k` is dropped.
pub fn is_selected<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
    aux: &AuxSets,
    origin: &Origin,
) -> bool {
    let Origin::Family { family, i, k, l } = *origin else {
        return false;
    };
    let in_k1 = |t: usize| cls.in_k(Row::First, t);
    let in_k2 = |t: usize| cls.in_k(Row::Second, t);
    let (k, l) = (k.unwrap_or(usize::MAX), l.unwrap_or(usize::MAX));
    match family {
        Family::S1 | Family::S2A1 | Family::S2A2 | Family::S2B => true,
        Family::S2C => aux.in_w(k, l) && (i == l || g1(sys, k, l).otimes(g2(sys, l, k)) != TropScalar::one()),
        Family::S3A => (in_k2(k) || aux.in_l1(i, k)) && (in_k1(l) || aux.in_l2(i, l)),
        Family::S3B1 => (in_k1(i) || aux.in_wbar(i, l)) && (aux.in_m1(i, l, k) || in_k2(k)),
        Family::S3B2 => (in_k2(i) || aux.in_wbar(k, i)) && (aux.in_m2(i, k, l) || in_k1(l)),
        Family::S3C1 => in_k2(k) || aux.in_n1(i, l, k),
        Family::S3C2 => in_k1(l) || aux.in_n2(i, k, l),
        Family::S3D1 => aux.in_w(k, l) && (in_k1(i) || aux.in_wbar(i, l)),
        Family::S3D2 => aux.in_w(k, l) && (in_k2(i) || aux.in_wbar(k, i)),
        Family::S3E => aux.in_w(k, l),
    }
}

/// Applies the family rules to `candidates`.
pub fn select_basis<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
    aux: &AuxSets,
    candidates: impl IntoIterator<Item = Generator<T>>,
) -> Basis<T> {
    let mut acc = BasisBuilder::new(sys.n());
    for g in candidates {
        if is_selected(sys, cls, aux, &g.origin) {
            acc.insert(g);
        }
    }
    acc.finish()
}

/// Coordinates left after forcing `xᵢ = 𝟎` wherever an inequality has an
/// empty J-set, plus the reduced system on them. Rows that become vacuous
/// are replaced by an always-true row so both J-sets are nonempty.
#[derive(Clone, Debug)]
pub struct Reduction<T> {
    pub coords: Vec<usize>,
    pub system: Option<TwoRowSystem<T>>,
}

pub fn reduce<T: Number>(sys: &TwoRowSystem<T>) -> Reduction<T> {
    let cls = sys.classify();
    let n = sys.n();
    let mut forced = vec![false; n];
    loop {
        let mut changed = false;
        for row in Row::BOTH {
            let has_pivot = (0..n).any(|j| cls.in_j(row, j) && !forced[j]);
            if has_pivot {
                continue;
            }
            for (i, f) in forced.iter_mut().enumerate() {
                if cls.in_i(row, i) && !*f {
                    *f = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let coords: Vec<usize> = (0..n).filter(|&j| !forced[j]).collect();
    if coords.is_empty() {
        return Reduction { coords, system: None };
    }
    let mut reduced = if coords.len() == n {
        sys.clone()
    } else {
        sys.restrict(&coords).expect("restriction keeps shape")
    };
    let rcls = reduced.classify();
    for row in Row::BOTH {
        if rcls.set(row, crate::system::IndexKind::J).is_empty() {
            debug_assert!(rcls.set(row, crate::system::IndexKind::I).is_empty());
            reduced = reduced.with_vacuous_row(row);
        }
    }
    Reduction {
        coords,
        system: Some(reduced),
    }
}

/// The basis of the solution cone of `sys`, in canonical scaling.
///
/// Candidates are streamed through the family rules, so memory is
/// proportional to the basis size; time is `O(n³)`.
pub fn compute_basis<T: Number>(sys: &TwoRowSystem<T>) -> Basis<T> {
    let n = sys.n();
    let red = reduce(sys);
    let Some(rsys) = red.system else {
        return Basis::empty(n);
    };
    let cls = rsys.classify();
    let aux = compute_aux(&rsys, &cls);
    let mut acc = BasisBuilder::new(n);
    let identity = red.coords.len() == n;
    for_each_candidate(&rsys, &cls, |g| {
        if is_selected(&rsys, &cls, &aux, &g.origin) {
            acc.insert(if identity { g } else { g.embed(n, &red.coords) });
        }
    });
    acc.finish()
}

/// `x ≤ᵢ y`: both `xᵢ`, `yᵢ` finite and `x ⊗ xᵢ⁻¹ ≤ y ⊗ yᵢ⁻¹`.
pub fn leq_i<T: Number>(x: &TropVector<T>, y: &TropVector<T>, i: usize) -> bool {
    let (TropScalar::Finite(xi), TropScalar::Finite(yi)) = (x[i], y[i]) else {
        return false;
    };
    x.len() == y.len()
        && x.entries().iter().zip(y.entries()).all(|(a, b)| match (a, b) {
            (TropScalar::Bottom, _) => true,
            (_, TropScalar::Bottom) => false,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => *a - xi <= *b - yi,
        })
}

/// [`leq_i`] on sparse generators.
pub fn leq_i_gen<T: Number>(x: &Generator<T>, y: &Generator<T>, i: usize) -> bool {
    let (TropScalar::Finite(xi), TropScalar::Finite(yi)) = (x.get(i), y.get(i)) else {
        return false;
    };
    x.entries().iter().all(|&(j, a)| match y.get(j) {
        TropScalar::Bottom => false,
        TropScalar::Finite(b) => a - xi <= b - yi,
    })
}

/// Multiorder principle: `y` is extremal in the cone generated by `set` iff
/// for some `i ∈ supp(y)` no member not proportional to `y` lies below `y`
/// in `≤ᵢ`.
pub fn is_extremal_multiorder<T: Number>(y: &Generator<T>, set: &[Generator<T>]) -> bool {
    y.entries()
        .iter()
        .any(|&(i, _)| !set.iter().any(|z| leq_i_gen(z, y, i) && !leq_i_gen(y, z, i)))
}

/// One term `coefficient ⊗ members[member]` of a max-linear combination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Term<T> {
    pub coefficient: T,
    pub member: usize,
}

/// Writes `y` as a max-linear combination of `members`, or returns `None`.
///
/// Each member `z` gets the largest coefficient with `λ ⊗ z ≤ y`,
/// `λ = min_{j∈supp z}(yⱼ − zⱼ)`; members that cannot fit under `y` are
/// skipped. `y` is generated iff these terms reach `y` on its whole support.
pub fn decompose<T: Number>(y: &Generator<T>, members: &[Generator<T>]) -> Option<Vec<Term<T>>> {
    let mut terms = Vec::new();
    let mut reached = vec![false; y.entries().len()];
    for (idx, z) in members.iter().enumerate() {
        if z.entries().is_empty() {
            continue;
        }
        let mut lambda: Option<T> = None;
        let mut fits = true;
        for &(j, zj) in z.entries() {
            match y.get(j) {
                TropScalar::Bottom => {
                    fits = false;
                    break;
                }
                TropScalar::Finite(yj) => {
                    let d = yj - zj;
                    lambda = Some(lambda.map_or(d, |m| m.min(d)));
                }
            }
        }
        let Some(lambda) = lambda.filter(|_| fits) else {
            continue;
        };
        for (p, &(j, yj)) in y.entries().iter().enumerate() {
            if let TropScalar::Finite(zj) = z.get(j) {
                if lambda + zj == yj {
                    reached[p] = true;
                }
            }
        }
        terms.push(Term {
            coefficient: lambda,
            member: idx,
        });
    }
    reached.iter().all(|&r| r).then_some(terms)
}

/// [`decompose`] for a dense vector.
pub fn decompose_vector<T: Number>(y: &TropVector<T>, members: &[Generator<T>]) -> Option<Vec<Term<T>>> {
    decompose(&Generator::from_vector(Origin::External { line: 0 }, y), members)
}

/// Canonically scaled, deduplicated set of extremal generators, sorted by
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis<T = i64> {
    n: usize,
    generators: Vec<Generator<T>>,
}

impl<T: Number> Basis<T> {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
        }
    }

    /// Normalizes, deduplicates (keeping the smallest origin) and sorts.
    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Generator<T>>) -> Self {
        let mut acc = BasisBuilder::new(n);
        for g in gens {
            acc.insert(g);
        }
        acc.finish()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator<T>] {
        &self.generators
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Generator<T>> {
        self.generators.iter()
    }

    pub fn canonical_set(&self) -> BTreeSet<CanonicalVec<T>> {
        self.generators.iter().map(Generator::canonical).collect()
    }

    pub fn contains_proportional(&self, v: &TropVector<T>) -> bool {
        let c = CanonicalVec::from_vector(v);
        self.generators
            .binary_search_by(|g| g.canonical().cmp(&c))
            .is_ok()
    }

    /// The basis without its `idx`-th element.
    pub fn without(&self, idx: usize) -> Vec<Generator<T>> {
        let mut v = self.generators.clone();
        v.remove(idx);
        v
    }
}

impl<'a, T> IntoIterator for &'a Basis<T> {
    type Item = &'a Generator<T>;
    type IntoIter = std::slice::Iter<'a, Generator<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.generators.iter()
    }
}

struct BasisBuilder<T> {
    n: usize,
    gens: Vec<Generator<T>>,
}

impl<T: Number> BasisBuilder<T> {
    fn new(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    fn insert(&mut self, g: Generator<T>) {
        if !g.entries().is_empty() {
            self.gens.push(g.normalized());
        }
    }

    /// Sorts canonically and keeps the smallest origin among proportional
    /// generators.
    fn finish(mut self) -> Basis<T> {
        self.gens
            .sort_unstable_by(|a, b| a.cmp_normalized(b).then(a.origin.cmp(&b.origin)));
        self.gens
            .dedup_by(|later, first| later.cmp_normalized(first).is_eq());
        Basis {
            n: self.n,
            generators: self.gens,
        }
    }
}
