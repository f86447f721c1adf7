//! Seed derivation and shared sampling helpers.
//!
//! All randomness in the crate flows through `ChaCha8Rng` instances whose
//! seeds are derived from a master seed plus integer tags (condition index,
//! replication, chain, ...). Derived streams make any grid cell or chain
//! rerun identically in isolation, regardless of execution order.

use nalgebra::{Cholesky, DVector, Dyn};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// SplitMix64 step; the standard 64-bit finalizer-based mixer.
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mix a master seed with a sequence of tags into one derived seed.
pub(crate) fn derive_seed(master: u64, tags: &[u64]) -> u64 {
    let mut state = master;
    let mut out = splitmix64(&mut state);
    for &tag in tags {
        state ^= tag.wrapping_mul(0xd6e8_feb8_6659_fd93);
        out ^= splitmix64(&mut state);
    }
    out
}

pub(crate) fn rng_from(master: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, tags))
}

pub(crate) fn rng_seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draw from a multivariate normal given the mean and Cholesky factor of the
/// covariance.
pub(crate) fn draw_mvn<R: Rng>(mu: &DVector<f64>, chol: &Cholesky<f64, Dyn>, rng: &mut R) -> DVector<f64> {
    let k = mu.len();
    let eps = DVector::from_fn(k, |_, _| rng.sample::<f64, _>(StandardNormal));
    mu + chol.l() * eps
}
