use super::matrix::TropMatrix;
use super::scalar::{Number, TropScalar};
use super::vector::TropVector;
use crate::error::{Result, TropError};

/// Kleene star `A* = I ⊕ A ⊕ A² ⊕ …` by Floyd–Warshall closure.
///
/// Returns [`TropError::Divergent`] as soon as a diagonal entry of the partial
/// closure exceeds 𝟏, i.e. when some cycle has positive weight. Checking after
/// every pivot keeps all intermediate values bounded by simple-path weights.
pub fn kleene_star<T: Number>(a: &TropMatrix<T>) -> Result<TropMatrix<T>> {
    if !a.is_square() {
        return Err(TropError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let one = TropScalar::<T>::one();
    let mut c = a.clone();
    for p in 0..n {
        for i in 0..n {
            let cip = c.get(i, p);
            if cip.is_bottom() {
                continue;
            }
            for j in 0..n {
                let v = cip.otimes(c.get(p, j));
                if v > c.get(i, j) {
                    c.set(i, j, v);
                }
            }
        }
        if (0..n).any(|i| c.get(i, i) > one) {
            return Err(TropError::Divergent);
        }
    }
    for i in 0..n {
        c.set(i, i, c.get(i, i).oplus(one));
    }
    Ok(c)
}

/// True iff `A ⊗ x ≤ x` componentwise.
pub fn is_subeigen<T: Number>(a: &TropMatrix<T>, x: &TropVector<T>) -> Result<bool> {
    if !a.is_square() {
        return Err(TropError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.mul_vec(x)?.leq(x))
}
