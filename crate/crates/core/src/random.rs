//! Seeded sampling of octonions and octonion matrices.
//!
//! Every trial draws from its own ChaCha stream so results do not depend on
//! how many trials ran before it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::octonion::Octonion;
use crate::omatrix::OctonionMatrix;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn uniform(rng: &mut impl Rng) -> f64 {
    rng.random_range(-1.0..=1.0)
}

/// Octonion with every coefficient uniform in `[-1, 1]`.
pub fn octonion(rng: &mut impl Rng) -> Octonion {
    Octonion(std::array::from_fn(|_| uniform(rng)))
}

/// Octonion whose last four coefficients are zero.
pub fn quaternion_slice(rng: &mut impl Rng) -> Octonion {
    let mut o = octonion(rng);
    o.0[4..].fill(0.0);
    o
}

pub fn octonion_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> OctonionMatrix {
    OctonionMatrix::from_fn(rows, cols, |_, _| octonion(rng))
}

/// Matrix whose entries are uniform draws rescaled to unit norm.
pub fn unit_entry_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> OctonionMatrix {
    OctonionMatrix::from_fn(rows, cols, |_, _| {
        let x = octonion(rng);
        x.scale(1.0 / x.norm())
    })
}

/// Hermitian `m×m` matrix: real diagonal uniform in `[-1, 1]`, strict upper
/// entries with coefficients uniform in `[-1, 1]`, lower entries conjugated.
pub fn hermitian(rng: &mut impl Rng, m: usize) -> OctonionMatrix {
    let mut a = OctonionMatrix::zeros(m, m);
    for s in 0..m {
        a[(s, s)] = Octonion::real(uniform(rng));
        for t in s + 1..m {
            let v = octonion(rng);
            a[(s, t)] = v;
            a[(t, s)] = v.conj();
        }
    }
    a
}
