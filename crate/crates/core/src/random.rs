//! Seeded random systems for fuzzing and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::system::TwoRowSystem;
use crate::tropical::{TropMatrix, TropScalar};

/// Entry distribution of a random system.
#[derive(Clone, Copy, Debug)]
pub struct EntryDist {
    /// Probability of a bottom entry.
    pub bottom: f64,
    /// Finite entries are uniform in `-range..=range`.
    pub range: i64,
}

impl EntryDist {
    /// Sparse small-integer entries: many ties and many bottoms.
    pub const FUZZ: EntryDist = EntryDist {
        bottom: 0.3,
        range: 5,
    };
    /// Every entry finite.
    pub const DENSE: EntryDist = EntryDist {
        bottom: 0.0,
        range: 50,
    };

    pub fn sample(&self, rng: &mut impl Rng) -> TropScalar<i64> {
        if self.bottom > 0.0 && rng.gen_bool(self.bottom) {
            TropScalar::Bottom
        } else {
            TropScalar::Finite(rng.gen_range(-self.range..=self.range))
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_system(rng: &mut impl Rng, n: usize, dist: EntryDist) -> TwoRowSystem<i64> {
    let mut draw = || {
        TropMatrix::from_rows(
            (0..2)
                .map(|_| (0..n).map(|_| dist.sample(rng)).collect())
                .collect(),
        )
    };
    let a = draw().expect("rectangular");
    let b = draw().expect("rectangular");
    TwoRowSystem::new(a, b).expect("2 x n")
}

/// The system used by `bench`: dense, determined by `seed`.
pub fn dense_system(seed: u64, n: usize) -> TwoRowSystem<i64> {
    random_system(&mut rng(seed), n, EntryDist::DENSE)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, dist: EntryDist) -> TropMatrix<i64> {
    TropMatrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| dist.sample(rng)).collect())
            .collect(),
    )
    .expect("square")
}
