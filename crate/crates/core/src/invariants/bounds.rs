//! Singleton-type ceilings per index and the extremality flags they induce.
//!
//! Every i-dimensional code obeys a Singleton-type bound in each metric,
//! so the subcode and supercode distances are capped index by index. The
//! Hamming ceiling is the classic n−i+1. The rank ceiling is reported in
//! two forms: the floor form n−⌊i/m⌋+1 capped at n, and the tighter
//! inverted form n−⌈i/m⌉+1 recovered from the dimension bound; both are
//! returned because they disagree off multiples of m. The sum-rank
//! ceiling is found by inverting the dimension bound directly: the
//! largest distance d whose maximal dimension still reaches i.

use crate::ambient::{AmbientSpace, Metric};
use crate::code::LinearCode;

/// Extremality flags, present only for the ambient's own metric and only
/// when a minimum distance was supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFlags {
    /// Hamming: minimum distance meets n−k+1.
    pub is_mds: Option<bool>,
    /// Rank: meets the dimension bound and m divides k.
    pub is_mrd: Option<bool>,
    /// Rank: meets the dimension bound and m does not divide k.
    pub is_qmrd: Option<bool>,
    /// Sum-rank: dimension meets the bound at the code's distance.
    pub is_msrd: Option<bool>,
}

/// Per-index distance ceilings for one ambient space.
#[derive(Debug, Clone)]
pub struct SingletonProfile {
    /// ceilings[i−1] bounds the i-th code distance, i = 1..=N.
    pub ceilings: Vec<usize>,
    /// Rank metric only: the inverted form n−⌈i/m⌉+1 of the same bound.
    pub rank_inverted: Option<Vec<usize>>,
    /// True when the two rank forms disagree at some index.
    pub rank_forms_differ: bool,
    /// Extremality of the code itself, when its distance is known.
    pub flags: CodeFlags,
}

/// Blocks as (m, n) with m ≥ n, largest m first, ties on larger n first.
/// Transposing a block does not change rank weights, and the dimension
/// bound below expects this ordering.
fn normalized_blocks(ambient: &AmbientSpace) -> Vec<(usize, usize)> {
    let mut blocks: Vec<(usize, usize)> = ambient
        .blocks()
        .iter()
        .map(|&(m, n)| (m.max(n), m.min(n)))
        .collect();
    blocks.sort_by(|a, b| b.cmp(a));
    blocks
}

/// Largest dimension an ambient-space code of minimum sum-rank distance d
/// can have, or None when no word of weight d exists. Writing
/// d−1 = n_1 + … + n_{j−1} + δ with 0 ≤ δ ≤ n_j−1, the bound is the
/// total dimension of blocks j..ℓ minus m_j δ.
fn max_dimension_at_distance(blocks: &[(usize, usize)], d: usize) -> Option<usize> {
    if d == 0 {
        return None;
    }
    let mut rem = d - 1;
    let mut j = 0;
    while j < blocks.len() && rem >= blocks[j].1 {
        rem -= blocks[j].1;
        j += 1;
    }
    if j == blocks.len() {
        return None;
    }
    let tail: usize = blocks[j..].iter().map(|&(m, n)| m * n).sum();
    Some(tail - blocks[j].0 * rem)
}

/// Distance ceilings per index for the code's ambient space, plus
/// extremality flags when the code's minimum distance is supplied.
pub fn singleton_profile(code: &LinearCode, d_min: Option<usize>) -> SingletonProfile {
    let ambient = code.ambient();
    let big_n = ambient.len();
    let k = code.k();

    let mut flags = CodeFlags {
        is_mds: None,
        is_mrd: None,
        is_qmrd: None,
        is_msrd: None,
    };

    match ambient.metric() {
        Metric::Hamming => {
            let n = big_n;
            let ceilings: Vec<usize> = (1..=n).map(|i| n - i + 1).collect();
            if let Some(d) = d_min {
                flags.is_mds = Some(d == n - k + 1);
            }
            SingletonProfile {
                ceilings,
                rank_inverted: None,
                rank_forms_differ: false,
                flags,
            }
        }
        Metric::Rank => {
            let (m, n) = normalized_blocks(ambient)[0];
            let ceilings: Vec<usize> =
                (1..=big_n).map(|i| (n + 1 - i / m).min(n)).collect();
            let inverted: Vec<usize> =
                (1..=big_n).map(|i| n + 1 - i.div_ceil(m)).collect();
            let differ = ceilings != inverted;
            if let Some(d) = d_min {
                let meets = d == n + 1 - k.div_ceil(m);
                flags.is_mrd = Some(meets && k % m == 0);
                flags.is_qmrd = Some(meets && k % m != 0);
            }
            SingletonProfile {
                ceilings,
                rank_inverted: Some(inverted),
                rank_forms_differ: differ,
                flags,
            }
        }
        Metric::SumRank => {
            let blocks = normalized_blocks(ambient);
            let d_max: usize = blocks.iter().map(|&(_, n)| n).sum();
            let ceilings: Vec<usize> = (1..=big_n)
                .map(|i| {
                    (1..=d_max)
                        .rev()
                        .find(|&d| {
                            max_dimension_at_distance(&blocks, d)
                                .is_some_and(|b| b >= i)
                        })
                        .expect("dimension 1 is reachable at distance 1")
                })
                .collect();
            if let Some(d) = d_min {
                flags.is_msrd = Some(
                    max_dimension_at_distance(&blocks, d).is_some_and(|b| b == k),
                );
            }
            SingletonProfile {
                ceilings,
                rank_inverted: None,
                rank_forms_differ: false,
                flags,
            }
        }
    }
}
