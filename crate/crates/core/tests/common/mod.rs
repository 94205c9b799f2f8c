//! Shared helpers for the integration suite: deterministic random code
//! generators over several metrics plus small conveniences. Generators
//! take the caller's seeded RNG so any failure replays exactly.
#![allow(dead_code)]

use codedist_core::invariants::distance_profile;
use codedist_core::{AmbientSpace, Budget, Field, FieldCtx, LinearCode, Mat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A budget large enough for every small-code computation in the suite.
pub fn big_budget() -> Budget {
    Budget::new(1_000_000_000)
}

pub fn field(p: u64, e: u64) -> Field {
    FieldCtx::new(p, e).expect("valid field parameters")
}

/// A random code of dimension 1..=k_max inside the given ambient space.
/// Rows are sampled uniformly and reduced; the dimension is whatever rank
/// the sample happens to have, never zero.
pub fn random_code_in(rng: &mut ChaCha8Rng, ambient: &AmbientSpace, k_max: usize) -> LinearCode {
    let n = ambient.len();
    let q = ambient.field().q;
    loop {
        let k = rng.gen_range(1..=k_max.min(n));
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
            .collect();
        let mat = Mat::from_rows(ambient.field().clone(), &rows).expect("rectangular rows");
        let (reduced, _) = mat.rref_trimmed();
        if reduced.nrows() >= 1 {
            return LinearCode::from_mat(ambient.clone(), reduced).expect("reduced generator");
        }
    }
}

/// A random Hamming-metric code over F_q with n in n_range and k <= k_max.
pub fn random_hamming(
    rng: &mut ChaCha8Rng,
    q: u64,
    n_range: std::ops::RangeInclusive<usize>,
    k_max: usize,
) -> LinearCode {
    let n = rng.gen_range(n_range);
    let ambient = AmbientSpace::hamming(field(q, 1), n).expect("valid length");
    random_code_in(rng, &ambient, k_max)
}

/// A random rank-metric code of m x n binary matrices with k <= k_max.
pub fn random_rank(rng: &mut ChaCha8Rng, m: usize, n: usize, k_max: usize) -> LinearCode {
    let ambient = AmbientSpace::rank(field(2, 1), m, n).expect("valid block");
    random_code_in(rng, &ambient, k_max)
}

/// A random binary sum-rank-metric code over the given blocks.
pub fn random_sum_rank(
    rng: &mut ChaCha8Rng,
    blocks: &[(usize, usize)],
    k_max: usize,
) -> LinearCode {
    let ambient =
        AmbientSpace::sum_rank(field(2, 1), blocks.to_vec()).expect("valid blocks");
    random_code_in(rng, &ambient, k_max)
}

/// The full code distance profile as a plain vector: alpha_1 ..= alpha_N.
/// Panics if any index was skipped, so only call it with ample budget.
pub fn full_profile(code: &LinearCode, budget: &Budget) -> Vec<usize> {
    let profile = distance_profile(code, 1..=code.len(), budget).expect("profile in budget");
    assert!(
        profile.skipped.is_empty(),
        "unexpected skips: {:?}",
        profile.skipped.keys().collect::<Vec<_>>()
    );
    profile.values().into_iter().map(|(_, v)| v).collect()
}
