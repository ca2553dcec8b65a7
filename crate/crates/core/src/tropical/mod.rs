//! Exact max-plus arithmetic on scalars, vectors and matrices.

mod matrix;
mod scalar;
mod star;
mod vector;

pub use matrix::{mat_mul, mat_vec, TropMatrix};
pub use scalar::{t_add, t_inv, t_mul, Number, Rational, TropScalar};
pub use star::{is_subeigen, kleene_star};
pub use vector::TropVector;
