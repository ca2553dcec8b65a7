//! Candidate generators of the solution cone.
//!
//! For pivots `k ∈ J₁`, `l ∈ J₂` the subcone
//! `S^{kl} = {x : ⊕_{I₁} a₁ᵢxᵢ ≤ b₁ₖxₖ, ⊕_{I₂} a₂ᵢxᵢ ≤ b₂ₗxₗ}` equals
//! `{x : A^{kl} ⊗ x ≤ x}` and is generated by the columns of `(A^{kl})*`.
//! The union over all pivot pairs is the full solution set. The columns fall
//! into the thirteen [`Family`] classes, enumerated here in closed form.

use crate::error::{Result, TropError};
use crate::generator::{Family, Generator, Origin};
use crate::system::{IndexClassification, Row, TwoRowSystem};
use crate::tropical::{Number, TropMatrix, TropScalar};

/// Index lists used by the closed forms. `N = Ī₁∩Ī₂`, `A = I₁∩Ī₂`,
/// `B = Ī₁∩I₂`, `C = I₁∩I₂`.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub n: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub j1_not_i2: Vec<usize>,
    pub j2_not_i1: Vec<usize>,
    pub j1_i2: Vec<usize>,
    pub j2_i1: Vec<usize>,
    pub j1_j2: Vec<usize>,
}

impl Partition {
    pub fn new(cls: &IndexClassification) -> Self {
        let (r1, r2) = (Row::First, Row::Second);
        Self {
            n: cls.filter(|i| !cls.in_i(r1, i) && !cls.in_i(r2, i)),
            a: cls.filter(|i| cls.in_i(r1, i) && !cls.in_i(r2, i)),
            b: cls.filter(|i| !cls.in_i(r1, i) && cls.in_i(r2, i)),
            c: cls.filter(|i| cls.in_i(r1, i) && cls.in_i(r2, i)),
            j1_not_i2: cls.filter(|i| cls.in_j(r1, i) && !cls.in_i(r2, i)),
            j2_not_i1: cls.filter(|i| cls.in_j(r2, i) && !cls.in_i(r1, i)),
            j1_i2: cls.filter(|i| cls.in_j(r1, i) && cls.in_i(r2, i)),
            j2_i1: cls.filter(|i| cls.in_j(r2, i) && cls.in_i(r1, i)),
            j1_j2: cls.filter(|i| cls.in_j(r1, i) && cls.in_j(r2, i)),
        }
    }
}

#[inline]
pub(crate) fn g1<T: Number>(sys: &TwoRowSystem<T>, k: usize, i: usize) -> TropScalar<T> {
    sys.gamma_fast(Row::First, k, i)
}

#[inline]
pub(crate) fn g2<T: Number>(sys: &TwoRowSystem<T>, k: usize, i: usize) -> TropScalar<T> {
    sys.gamma_fast(Row::Second, k, i)
}

/// `γ¹_{kl} ⊗ γ²_{lk} ≤ 𝟏`, the condition for `(k, l) ∈ W`.
#[inline]
pub(crate) fn in_w<T: Number>(sys: &TwoRowSystem<T>, k: usize, l: usize) -> bool {
    g1(sys, k, l).otimes(g2(sys, l, k)) <= TropScalar::one()
}

fn check_pivots(cls: &IndexClassification, k: usize, l: usize) -> Result<()> {
    if k >= cls.n() || !cls.in_j(Row::First, k) {
        return Err(TropError::IndexNotInJ { row: 1, index: k + 1 });
    }
    if l >= cls.n() || !cls.in_j(Row::Second, l) {
        return Err(TropError::IndexNotInJ { row: 2, index: l + 1 });
    }
    Ok(())
}

/// The matrix `A^{kl}` with `S^{kl} = {x : A^{kl} ⊗ x ≤ x}`.
///
/// Row `k` is `e'_k ⊕ ⊕_{i∈I₁} γ¹_{ki} e'_i`, row `l` is
/// `e'_l ⊕ ⊕_{i∈I₂} γ²_{li} e'_i` (merged into one row when `k = l`), and
/// every other row is a unit row.
pub fn build_akl<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
    k: usize,
    l: usize,
) -> Result<TropMatrix<T>> {
    check_pivots(cls, k, l)?;
    let n = sys.n();
    let mut m = TropMatrix::identity(n);
    for i in 0..n {
        if cls.in_i(Row::First, i) {
            m.set(k, i, m.get(k, i).oplus(g1(sys, k, i)));
        }
        if cls.in_i(Row::Second, i) {
            m.set(l, i, m.get(l, i).oplus(g2(sys, l, i)));
        }
    }
    Ok(m)
}

/// `(A^{kl})*` from the closed forms, without a generic closure.
///
/// * `k = l`, or `k ∉ I₂` and `l ∉ I₁`: the star is `A^{kl}` itself.
/// * `k ∈ I₂`, `l ∉ I₁`: row `l` becomes
///   `e'_l ⊕ ⊕_{Ī₂∩I₁} γ²_{lk}γ¹_{ki} ⊕ ⊕_{I₂∩I₁} (γ²_{li} ⊕ γ²_{lk}γ¹_{ki}) ⊕ ⊕_{Ī₁∩I₂} γ²_{li}`.
/// * `k ∉ I₂`, `l ∈ I₁`: row `k` becomes the mirror image.
/// * `k ∈ I₂`, `l ∈ I₁`: both rows change if `γ¹_{kl}γ²_{lk} ≤ 𝟏`, otherwise
///   the star diverges.
pub fn star_akl<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
    k: usize,
    l: usize,
) -> Result<TropMatrix<T>> {
    let mut s = build_akl(sys, cls, k, l)?;
    if k == l {
        return Ok(s);
    }
    let k_in_i2 = cls.in_i(Row::Second, k);
    let l_in_i1 = cls.in_i(Row::First, l);
    if k_in_i2 && l_in_i1 && !in_w(sys, k, l) {
        return Err(TropError::Divergent);
    }
    let n = sys.n();
    let unit = |row: usize, i: usize| {
        if row == i {
            TropScalar::one()
        } else {
            TropScalar::Bottom
        }
    };
    if k_in_i2 {
        let via_k = g2(sys, l, k);
        for i in 0..n {
            let (in1, in2) = (cls.in_i(Row::First, i), cls.in_i(Row::Second, i));
            let term = match (in1, in2) {
                (true, false) => via_k.otimes(g1(sys, k, i)),
                (true, true) => g2(sys, l, i).oplus(via_k.otimes(g1(sys, k, i))),
                (false, true) => g2(sys, l, i),
                (false, false) => TropScalar::Bottom,
            };
            s.set(l, i, unit(l, i).oplus(term));
        }
    }
    if l_in_i1 {
        let via_l = g1(sys, k, l);
        for i in 0..n {
            let (in1, in2) = (cls.in_i(Row::First, i), cls.in_i(Row::Second, i));
            let term = match (in1, in2) {
                (false, true) => via_l.otimes(g2(sys, l, i)),
                (true, true) => g1(sys, k, i).oplus(via_l.otimes(g2(sys, l, i))),
                (true, false) => g1(sys, k, i),
                (false, false) => TropScalar::Bottom,
            };
            s.set(k, i, unit(k, i).oplus(term));
        }
    }
    Ok(s)
}

fn coef<T: Number>(s: TropScalar<T>) -> T {
    s.finite().expect("closed-form coefficient evaluated to bottom")
}

/// Streams every classified candidate generator to `emit`, family by family.
///
/// Requires `J₁` and `J₂` nonempty for the candidates to generate the whole
/// solution set; [`crate::basis::compute_basis`] reduces degenerate systems
/// before calling this.
pub fn for_each_candidate<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
    mut emit: impl FnMut(Generator<T>),
) {
    let p = Partition::new(cls);
    let n = sys.n();
    let zero = T::zero();
    let mut put = |family: Family, i: usize, k: Option<usize>, l: Option<usize>, e: &[(usize, T)]| {
        debug_assert_eq!(e.len(), family.arity());
        emit(Generator::from_entries(
            Origin::Family { family, i, k, l },
            n,
            e.iter().copied(),
        ));
    };

    for &i in &p.n {
        put(Family::S1, i, None, None, &[(i, zero)]);
    }
    for &k in &p.j1_not_i2 {
        for &i in &p.a {
            put(
                Family::S2A1,
                i,
                Some(k),
                None,
                &[(k, coef(g1(sys, k, i))), (i, zero)],
            );
        }
    }
    for &k in &p.j2_not_i1 {
        for &i in &p.b {
            put(
                Family::S2A2,
                i,
                Some(k),
                None,
                &[(k, coef(g2(sys, k, i))), (i, zero)],
            );
        }
    }
    for &k in &p.j1_j2 {
        for &i in &p.c {
            let c = g1(sys, k, i).oplus(g2(sys, k, i));
            put(Family::S2B, i, Some(k), None, &[(k, coef(c)), (i, zero)]);
        }
    }
    for &k in &p.j1_i2 {
        for &l in &p.j2_i1 {
            if !in_w(sys, k, l) {
                continue;
            }
            put(
                Family::S2C,
                l,
                Some(k),
                Some(l),
                &[(k, coef(g1(sys, k, l))), (l, zero)],
            );
            put(
                Family::S2C,
                k,
                Some(k),
                Some(l),
                &[(l, coef(g2(sys, l, k))), (k, zero)],
            );
        }
    }
    for &k in &p.j1_not_i2 {
        for &l in &p.j2_not_i1 {
            if k == l {
                continue;
            }
            for &i in &p.c {
                let e = [(k, coef(g1(sys, k, i))), (l, coef(g2(sys, l, i))), (i, zero)];
                put(Family::S3A, i, Some(k), Some(l), &e);
            }
        }
    }
    for &k in &p.j1_not_i2 {
        for &l in &p.j2_i1 {
            let kl = g1(sys, k, l);
            for &i in &p.b {
                let li = g2(sys, l, i);
                let e = [(k, coef(kl.otimes(li))), (l, coef(li)), (i, zero)];
                put(Family::S3B1, i, Some(k), Some(l), &e);
            }
        }
    }
    for &k in &p.j1_i2 {
        for &l in &p.j2_not_i1 {
            let lk = g2(sys, l, k);
            for &i in &p.a {
                let ki = g1(sys, k, i);
                let e = [(l, coef(lk.otimes(ki))), (k, coef(ki)), (i, zero)];
                put(Family::S3B2, i, Some(k), Some(l), &e);
            }
        }
    }
    for &k in &p.j1_not_i2 {
        for &l in &p.j2_i1 {
            let kl = g1(sys, k, l);
            for &i in &p.c {
                let li = g2(sys, l, i);
                let e = [
                    (k, coef(g1(sys, k, i).oplus(kl.otimes(li)))),
                    (l, coef(li)),
                    (i, zero),
                ];
                put(Family::S3C1, i, Some(k), Some(l), &e);
            }
        }
    }
    for &k in &p.j1_i2 {
        for &l in &p.j2_not_i1 {
            let lk = g2(sys, l, k);
            for &i in &p.c {
                let ki = g1(sys, k, i);
                let e = [
                    (l, coef(g2(sys, l, i).oplus(lk.otimes(ki)))),
                    (k, coef(ki)),
                    (i, zero),
                ];
                put(Family::S3C2, i, Some(k), Some(l), &e);
            }
        }
    }
    for &k in &p.j1_i2 {
        for &l in &p.j2_i1 {
            if !in_w(sys, k, l) {
                continue;
            }
            let (kl, lk) = (g1(sys, k, l), g2(sys, l, k));
            for &i in p.b.iter().filter(|&&i| i != k) {
                let li = g2(sys, l, i);
                let e = [(k, coef(kl.otimes(li))), (l, coef(li)), (i, zero)];
                put(Family::S3D1, i, Some(k), Some(l), &e);
            }
            for &i in p.a.iter().filter(|&&i| i != l) {
                let ki = g1(sys, k, i);
                let e = [(l, coef(lk.otimes(ki))), (k, coef(ki)), (i, zero)];
                put(Family::S3D2, i, Some(k), Some(l), &e);
            }
            for &i in &p.c {
                let (ki, li) = (g1(sys, k, i), g2(sys, l, i));
                let e = [
                    (l, coef(li.oplus(lk.otimes(ki)))),
                    (k, coef(ki.oplus(kl.otimes(li)))),
                    (i, zero),
                ];
                put(Family::S3E, i, Some(k), Some(l), &e);
            }
        }
    }
}

/// All candidate generators, ordered by family and then by `(i, k, l)`.
pub fn enumerate_candidates<T: Number>(
    sys: &TwoRowSystem<T>,
    cls: &IndexClassification,
) -> Vec<Generator<T>> {
    let mut out = Vec::new();
    for_each_candidate(sys, cls, |g| out.push(g));
    out.sort_by_key(|g| g.origin);
    out
}
