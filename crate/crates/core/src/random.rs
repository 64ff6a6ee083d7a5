//! Seeded sampling of configurations, projectivities and permutations.
//!
//! Every random choice in the crate goes through [`rng_for`], so a
//! `(seed, stream)` pair fixes all outputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::plane::{is_general_position, Config6};
use crate::rational::Rational;

pub type Rng64 = ChaCha8Rng;

/// Coordinates of sampled configurations lie in `[-COORD_BOUND, COORD_BOUND]`.
pub const COORD_BOUND: i64 = 20;

/// Independent generator for stream `stream` under `seed`.
pub fn rng_for(seed: u64, stream: u64) -> Rng64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Integer configuration in general position, by rejection sampling.
pub fn random_config(rng: &mut impl Rng) -> Config6 {
    loop {
        let pts: [[i64; 3]; 6] =
            std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-COORD_BOUND..=COORD_BOUND)));
        let Ok(c) = Config6::from_i64(pts) else { continue };
        if is_general_position(&c).is_general() {
            return c;
        }
    }
}

/// Invertible integer 3x3 matrix with entries in `[-bound, bound]`.
pub fn random_projectivity(rng: &mut impl Rng, bound: i64) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..3).map(|_| Rational::from(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = Matrix::from_rows(&rows);
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Nonzero integer in `[-bound, bound]`.
pub fn random_nonzero(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return Rational::from(v);
        }
    }
}

pub fn random_perm(rng: &mut impl Rng) -> Perm {
    let mut img = [1u8, 2, 3, 4, 5, 6];
    img.shuffle(rng);
    Perm::from_images(img).expect("shuffle of the identity")
}
