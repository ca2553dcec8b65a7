//! Bases of solution cones of two-inequality max-plus linear systems
//! `A ⊗ x ≤ B ⊗ x`.
//!
//! [`compute_basis`] runs the closed-form O(n³) procedure; [`oracle`] holds an
//! independent brute-force path used for checking it.

pub mod basis;
pub mod cli;
pub mod engine;
pub mod error;
pub mod generator;
pub mod io;
pub mod oracle;
pub mod random;
pub mod system;
pub mod tropical;

pub use basis::{compute_basis, decompose, is_extremal_multiorder, select_basis, Basis};
pub use engine::{build_akl, enumerate_candidates, star_akl};
pub use error::{Result, TropError};
pub use generator::{CanonicalVec, Family, Generator, Origin};
pub use oracle::{check_basis, cross_check, oracle_basis, OracleReport};
pub use system::{IndexClassification, IndexKind, Row, TwoRowSystem};
pub use tropical::{kleene_star, Number, Rational, TropMatrix, TropScalar, TropVector};
