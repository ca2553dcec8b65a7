mod common;

use common::*;
use tropbasis::basis::decompose_vector;
use tropbasis::{compute_basis, cross_check, Family};

fn example1_expected() -> Vec<tropbasis::TropVector> {
    vec![
        combo(4, &[(2, 0)]),
        combo(4, &[(2, 0), (4, 0)]),
        combo(4, &[(2, 3), (1, 0)]),
        combo(4, &[(2, 2), (3, 0)]),
    ]
}

fn example2_expected() -> Vec<tropbasis::TropVector> {
    let n = 7;
    vec![
        combo(n, &[(1, 0)]),
        combo(n, &[(1, 0), (4, 0)]),
        combo(n, &[(1, 4), (5, 0)]),
        combo(n, &[(1, 2), (6, 0)]),
        combo(n, &[(1, 2), (2, 0)]),
        combo(n, &[(1, 3), (3, 0)]),
        combo(n, &[(1, 6), (7, 0)]),
        combo(n, &[(6, 2), (3, 0)]),
        combo(n, &[(3, 0), (6, 3)]),
        combo(n, &[(1, 3), (3, 0), (4, 5)]),
        combo(n, &[(1, 3), (3, 0), (5, 1)]),
        combo(n, &[(1, 4), (3, 1), (7, 0)]),
        combo(n, &[(2, 2), (3, 0), (6, 3)]),
        combo(n, &[(6, 2), (3, 0), (4, 5)]),
        combo(n, &[(6, 2), (3, 0), (5, 1)]),
        combo(n, &[(6, 3), (3, 1), (7, 0)]),
    ]
}

#[test]
fn example1_basis() {
    let basis = compute_basis(&example1());
    assert_eq!(
        canonical_strings(basis.iter().map(|g| g.vector())),
        canonical_strings(example1_expected())
    );
    let families: Vec<Family> = basis.iter().filter_map(|g| g.origin.family()).collect();
    for f in [Family::S1, Family::S2A1, Family::S2A2, Family::S2B] {
        assert!(families.contains(&f));
    }
}

#[test]
fn example1_redundant_three_generators() {
    let basis = compute_basis(&example1());
    // 5e2 ⊕ 2e1 ⊕ e4 = e2⊕e4 ⊕ 2(3e2 ⊕ e1)... up to the coefficients found
    for v in [
        combo(4, &[(2, 5), (1, 2), (4, 0)]),
        combo(4, &[(2, 7), (1, 4), (3, 0)]),
    ] {
        assert!(example1().is_solution(&v).unwrap());
        assert!(!basis.contains_proportional(&v));
        let terms = decompose_vector(&v, basis.generators()).expect("generated by the basis");
        let mut sum = tropbasis::TropVector::bottom(4);
        for t in &terms {
            sum = sum.oplus(&basis.generators()[t.member].vector().scale(f(t.coefficient)));
        }
        assert_eq!(sum, v);
    }
}

#[test]
fn example2_basis() {
    let sys = example2();
    let basis = compute_basis(&sys);
    assert_eq!(basis.len(), 16);
    assert_eq!(
        canonical_strings(basis.iter().map(|g| g.vector())),
        canonical_strings(example2_expected())
    );
    let sizes: Vec<usize> = basis.iter().map(|g| g.support().len()).collect();
    assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 1);
    assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 8);
    assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 7);
    assert!(cross_check(&sys).is_clean());
}

#[test]
fn example2_families() {
    let basis = compute_basis(&example2());
    let of = |v: tropbasis::TropVector| {
        let c = v.canonical();
        basis
            .iter()
            .find(|g| g.vector() == c)
            .and_then(|g| g.origin.family())
    };
    assert_eq!(of(combo(7, &[(2, 2), (3, 0), (6, 3)])), Some(Family::S3D1));
    assert_eq!(of(combo(7, &[(6, 3), (3, 1), (7, 0)])), Some(Family::S3E));
    assert_eq!(of(combo(7, &[(1, 4), (3, 1), (7, 0)])), Some(Family::S3C2));
    assert_eq!(of(combo(7, &[(6, 2), (3, 0), (5, 1)])), Some(Family::S3D2));
}

#[test]
fn example2_three_generators_are_tight() {
    let sys = example2();
    for g in compute_basis(&sys).iter().filter(|g| g.support().len() == 3) {
        for (lhs, rhs) in sys.sides(&g.vector()).unwrap() {
            assert_eq!(lhs, rhs, "{}", g.vector());
        }
    }
}
