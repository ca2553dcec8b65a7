//! Brute-force reference path.
//!
//! Gathers generators as columns of generic Kleene stars (Floyd–Warshall) for
//! every pivot pair and keeps the extremals by the multiorder principle. None
//! of the closed-form stars or family rules are used here.

use crate::basis::{compute_basis, decompose, is_extremal_multiorder, Basis};
use crate::error::TropError;
use crate::generator::{CanonicalVec, Generator, Origin};
use crate::system::{IndexKind, Row, TwoRowSystem};
use crate::tropical::{kleene_star, Number, TropMatrix, TropScalar, TropVector};

/// Outcome of comparing a basis against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport<T = i64> {
    pub basis_match: bool,
    /// Oracle extremals absent from the checked basis.
    pub missing: Vec<Generator<T>>,
    /// Elements of the checked basis that are not oracle extremals.
    pub extra: Vec<Generator<T>>,
    /// Elements of the checked basis that do not solve the system.
    pub solution_violations: Vec<TropVector<T>>,
    /// Gathered oracle generators the checked basis cannot reproduce.
    pub membership_failures: Vec<TropVector<T>>,
}

impl<T> OracleReport<T> {
    pub fn is_clean(&self) -> bool {
        self.basis_match && self.solution_violations.is_empty() && self.membership_failures.is_empty()
    }
}

/// `M` with `{x : M ⊗ x ≤ x} = {x : ⊕_{I_r} a_{ri}xᵢ ≤ b_{r,p_r} x_{p_r}, r = 1, 2}`,
/// built directly from the inequalities. A `None` pivot contributes no row;
/// its I-set is returned as coordinates forced to bottom.
pub fn constraint_matrix<T: Number>(
    sys: &TwoRowSystem<T>,
    pivots: [Option<usize>; 2],
) -> (TropMatrix<T>, Vec<bool>) {
    let n = sys.n();
    let mut m = TropMatrix::identity(n);
    let mut forced = vec![false; n];
    for row in Row::BOTH {
        for (i, f) in forced.iter_mut().enumerate() {
            let a = sys.a(row, i);
            if a <= sys.b(row, i) {
                continue;
            }
            match pivots[row.index()] {
                Some(p) => {
                    let TropScalar::Finite(bp) = sys.b(row, p) else {
                        panic!("pivot {p} has bottom right-hand coefficient");
                    };
                    let w = a.otimes(TropScalar::Finite(-bp));
                    m.set(p, i, m.get(p, i).oplus(w));
                }
                None => *f = true,
            }
        }
    }
    (m, forced)
}

/// Generators of `{x : M ⊗ x ≤ x, x_F = 𝟎}` for any square `M`.
///
/// A finite `x_j` forces every `xᵢ` with `M_{ij} ≠ 𝟎` to be finite, so a
/// coordinate that can reach `F` or a positive cycle must be bottom. The
/// remaining coordinates carry no positive cycle, and the cone is spanned by
/// the columns of the star of `M` restricted to them.
pub fn subeigen_cone_generators<T: Number>(m: &TropMatrix<T>, forced: &[bool]) -> Vec<TropVector<T>> {
    let n = m.rows();
    let mut doomed = forced.to_vec();
    if forced.iter().any(|&f| f) || kleene_star(m).is_err() {
        for (v, on_cycle) in positive_cycle_nodes(m).into_iter().enumerate() {
            doomed[v] |= on_cycle;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| doomed[v]).collect();
        while let Some(i) = stack.pop() {
            for (j, d) in doomed.iter_mut().enumerate() {
                if !*d && m.get(i, j).is_finite() {
                    *d = true;
                    stack.push(j);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !doomed[v]).collect();
    if keep.is_empty() {
        return Vec::new();
    }
    let sub = TropMatrix::from_rows(
        keep.iter()
            .map(|&i| keep.iter().map(|&j| m.get(i, j)).collect())
            .collect(),
    )
    .expect("square restriction");
    let star = kleene_star(&sub).expect("no positive cycle survives the restriction");
    (0..keep.len())
        .map(|c| {
            let mut v = TropVector::bottom(n);
            for (r, &i) in keep.iter().enumerate() {
                v.set(i, star.get(r, c));
            }
            v
        })
        .collect()
}

/// Nodes `u` with `(M^t)_{uu} > 𝟏` for some `1 ≤ t ≤ n`, by repeated products.
fn positive_cycle_nodes<T: Number>(m: &TropMatrix<T>) -> Vec<bool> {
    let n = m.rows();
    let mut hit = vec![false; n];
    let mut power = m.clone();
    for _ in 0..n {
        for (u, h) in hit.iter_mut().enumerate() {
            *h |= power.get(u, u) > TropScalar::one();
        }
        power = power.mul(m).expect("square");
    }
    hit
}

/// Every generator gathered from the pivot pairs, deduplicated by canonical
/// form (first occurrence kept).
pub fn oracle_candidates<T: Number>(sys: &TwoRowSystem<T>) -> Vec<Generator<T>> {
    let cls = sys.classify();
    let pivots = |row: Row| -> Vec<Option<usize>> {
        let js = cls.set(row, IndexKind::J);
        if js.is_empty() {
            vec![None]
        } else {
            js.into_iter().map(Some).collect()
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for k in pivots(Row::First) {
        for l in pivots(Row::Second) {
            let (m, forced) = constraint_matrix(sys, [k, l]);
            for v in subeigen_cone_generators(&m, &forced) {
                let column = v.entries().iter().position(|x| *x == TropScalar::one());
                let column = column.unwrap_or_else(|| v.support()[0]);
                if seen.insert(CanonicalVec::from_vector(&v)) {
                    out.push(Generator::from_vector(Origin::StarColumn { k, l, column }, &v));
                }
            }
        }
    }
    out
}

/// The basis by brute force: gathered generators filtered by the multiorder
/// principle.
pub fn oracle_basis<T: Number>(sys: &TwoRowSystem<T>) -> Basis<T> {
    let gathered = oracle_candidates(sys);
    let extremal: Vec<Generator<T>> = gathered
        .iter()
        .filter(|y| is_extremal_multiorder(y, &gathered))
        .cloned()
        .collect();
    Basis::from_generators(sys.n(), extremal)
}

/// Compares `basis` with the oracle basis and checks it against the system.
pub fn check_basis<T: Number>(sys: &TwoRowSystem<T>, basis: &Basis<T>) -> OracleReport<T> {
    let oracle = oracle_basis(sys);
    let (ours, theirs) = (basis.canonical_set(), oracle.canonical_set());
    let missing: Vec<_> = oracle
        .iter()
        .filter(|g| !ours.contains(&g.canonical()))
        .cloned()
        .collect();
    let extra: Vec<_> = basis
        .iter()
        .filter(|g| !theirs.contains(&g.canonical()))
        .cloned()
        .collect();
    let solution_violations = basis
        .iter()
        .map(Generator::vector)
        .filter(|v| !sys.is_solution(v).unwrap_or(false))
        .collect();
    let members = basis.generators();
    let membership_failures = oracle_candidates(sys)
        .iter()
        .filter(|c| decompose(c, members).is_none())
        .map(Generator::vector)
        .collect();
    OracleReport {
        basis_match: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        solution_violations,
        membership_failures,
    }
}

/// [`check_basis`] applied to [`compute_basis`].
pub fn cross_check<T: Number>(sys: &TwoRowSystem<T>) -> OracleReport<T> {
    check_basis(sys, &compute_basis(sys))
}

/// Independent positive-cycle test on a square matrix: some diagonal entry of
/// `M, M², …, Mⁿ` exceeds 𝟏.
pub fn has_positive_cycle<T: Number>(m: &TropMatrix<T>) -> Result<bool, TropError> {
    if !m.is_square() {
        return Err(TropError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(positive_cycle_nodes(m).into_iter().any(|h| h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::build_akl;

    type S = TropScalar<i64>;
    const B: S = TropScalar::Bottom;
    fn f(v: i64) -> S {
        TropScalar::Finite(v)
    }

    fn example1() -> TwoRowSystem {
        TwoRowSystem::from_rows(
            vec![B, B, f(4), f(2)],
            vec![f(3), B, f(0), B],
            vec![f(0), f(2), B, B],
            vec![B, f(0), B, B],
        )
        .unwrap()
    }

    #[test]
    fn constraint_matrix_is_akl() {
        let sys = example1();
        let cls = sys.classify();
        for &k in &cls.j1() {
            for &l in &cls.j2() {
                let (m, forced) = constraint_matrix(&sys, [Some(k), Some(l)]);
                assert!(forced.iter().all(|f| !f));
                assert_eq!(m, build_akl(&sys, &cls, k, l).unwrap());
            }
        }
    }

    #[test]
    fn example1_oracle() {
        let basis = oracle_basis(&example1());
        let got: Vec<String> = basis.iter().map(|g| g.vector().to_string()).collect();
        assert_eq!(
            got,
            vec![
                "-inf 0 -inf -inf",
                "-inf 0 -inf 0",
                "-inf 0 -2 -inf",
                "-3 0 -inf -inf"
            ]
        );
        let report = cross_check(&example1());
        assert!(report.is_clean(), "{report:?}");
        assert!(report.missing.is_empty() && report.extra.is_empty());
    }

    #[test]
    fn trivial_n1() {
        let sys = TwoRowSystem::from_rows(vec![B], vec![B], vec![f(0)], vec![f(0)]).unwrap();
        let basis = oracle_basis(&sys);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis.generators()[0].vector(), TropVector::unit(1, 0));
    }

    #[test]
    fn divergent_pair_keeps_free_units() {
        // 2-cycle of weight 2 between nodes 0 and 1; node 2 is free
        let m =
            TropMatrix::from_rows(vec![vec![f(0), f(1), B], vec![f(1), f(0), B], vec![B, B, f(0)]]).unwrap();
        assert!(has_positive_cycle(&m).unwrap());
        let gens = subeigen_cone_generators(&m, &[false; 3]);
        assert_eq!(gens, vec![TropVector::unit(3, 2)]);
    }

    #[test]
    fn forced_coordinates_propagate() {
        // x0 ≥ x1 - 1 with x0 forced to bottom forces x1 as well
        let m =
            TropMatrix::from_rows(vec![vec![f(0), f(-1), B], vec![B, f(0), B], vec![B, B, f(0)]]).unwrap();
        let gens = subeigen_cone_generators(&m, &[true, false, false]);
        assert_eq!(gens, vec![TropVector::unit(3, 2)]);
    }

    #[test]
    fn dropping_an_element_is_detected() {
        let sys = example1();
        let basis = compute_basis(&sys);
        let corrupted = Basis::from_generators(sys.n(), basis.without(2));
        let report = check_basis(&sys, &corrupted);
        assert!(!report.basis_match);
        assert_eq!(report.missing.len(), 1);
        assert!(!report.membership_failures.is_empty());
    }
}
