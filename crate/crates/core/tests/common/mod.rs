#![allow(dead_code)]

use tropbasis::{TropScalar, TropVector, TwoRowSystem};

pub type S = TropScalar<i64>;
pub const B: S = TropScalar::Bottom;

pub fn f(v: i64) -> S {
    TropScalar::Finite(v)
}

pub fn example1() -> TwoRowSystem {
    TwoRowSystem::from_rows(
        vec![B, B, f(4), f(2)],
        vec![f(3), B, f(0), B],
        vec![f(0), f(2), B, B],
        vec![B, f(0), B, B],
    )
    .unwrap()
}

pub fn example2() -> TwoRowSystem {
    TwoRowSystem::from_rows(
        vec![B, B, B, f(0), f(4), f(2), f(6)],
        vec![B, f(5), f(6), B, B, B, f(2)],
        vec![f(0), f(1), f(5), B, B, B, B],
        vec![f(3), B, B, f(0), f(2), f(4), B],
    )
    .unwrap()
}

/// `⊕ cⱼ eⱼ` from `(j, cⱼ)` pairs with 1-based `j`.
pub fn combo(n: usize, terms: &[(usize, i64)]) -> TropVector {
    let mut v = TropVector::bottom(n);
    for &(j, c) in terms {
        v.set(j - 1, f(c));
    }
    v
}

pub fn canonical_strings(vs: impl IntoIterator<Item = TropVector>) -> Vec<String> {
    let mut out: Vec<String> = vs.into_iter().map(|v| v.canonical().to_string()).collect();
    out.sort();
    out
}

pub fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}
