//! Exact code invariants: subcode and supercode distances, greedy
//! distances, covering and generalized radii, maximality degree, partial
//! distances and kernel exponents, scalar-extension sweeps, and
//! Singleton-type ceilings.
//!
//! Every routine here is exhaustive and exact. Costs are measured in weight
//! evaluations and are debited against a caller-supplied [`Budget`] before a
//! search starts, so an over-budget request fails fast with
//! [`Error::BudgetExceeded`] instead of running unbounded.

mod alpha;
mod bounds;
mod compare;
mod extension;
mod greedy;
mod partial;
mod radii;

pub use alpha::{subcode_distance, supercode_distance, supercode_via_radii};
pub use bounds::{singleton_profile, CodeFlags, SingletonProfile};
pub use compare::{compare_codes, CompareRow, CompareSelection, ComparisonReport, Verdict};
pub use extension::{
    asymptotic_distance, extended_distance, generalized_covering_radius, AsymptoticSweep,
};
pub use greedy::{
    greedy_generator, greedy_levels, greedy_lower_bound, greedy_profile, GreedyProfile,
};
pub use partial::{exponent, partial_distances, ExponentReport, PartialDistanceProfile};
pub use radii::{covering_radius, generalized_radius, CoveringRadius, GeneralizedRadius};

use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// How many enumerated subspaces one parallel work item covers.
pub(crate) const CHUNK: u64 = 1 << 12;

/// The search route that produced a code distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Enumeration of i-dimensional subcodes.
    Subcode,
    /// Enumeration of i-dimensional supercodes.
    Supercode,
    /// Coset-leader scan (covering radius) combined with the minimum
    /// distance.
    CosetScan,
    /// Both supercode enumeration and the coset-leader scan ran and agreed.
    SupercodeAndCosetScan,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::Subcode => "subcode enumeration",
            Route::Supercode => "supercode enumeration",
            Route::CosetScan => "coset scan",
            Route::SupercodeAndCosetScan => "supercode enumeration + coset scan",
        };
        f.write_str(s)
    }
}

/// One computed code distance with its optimal witness.
#[derive(Debug, Clone)]
pub struct AlphaEntry {
    /// The distance value α_i.
    pub value: usize,
    /// Generator matrix (reduced row echelon form) of one optimal
    /// i-dimensional subcode or supercode; its minimum distance equals
    /// `value`, which makes every reported entry independently checkable.
    pub witness: Mat,
    /// Which search produced the value.
    pub route: Route,
}

/// Code distances over an index range, with per-index skip reasons.
///
/// Skipped indices are recorded explicitly (budget or level-set failures);
/// any other error aborts the whole profile.
#[derive(Debug, Clone, Default)]
pub struct AlphaProfile {
    /// Computed entries, keyed by the index i of α_i.
    pub entries: BTreeMap<usize, AlphaEntry>,
    /// Indices that could not be computed, with the reason.
    pub skipped: BTreeMap<usize, Error>,
}

impl AlphaProfile {
    /// The computed values as (index, α_index) pairs in index order.
    pub fn values(&self) -> Vec<(usize, usize)> {
        self.entries.iter().map(|(&i, e)| (i, e.value)).collect()
    }

    /// The value at one index, if it was computed.
    pub fn value(&self, i: usize) -> Option<usize> {
        self.entries.get(&i).map(|e| e.value)
    }
}

/// Maximality degree μ and the quantities it is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalityReport {
    /// μ = d_min − α_{k+1}.
    pub mu: usize,
    /// Whether the code is maximal (no supercode preserves the minimum
    /// distance), equivalent to μ > 0.
    pub is_maximal: bool,
    /// The code's minimum distance.
    pub min_distance: usize,
    /// The (k+1)-th code distance.
    pub alpha_k_plus_1: usize,
}

/// The i-th code distance α_i: the largest minimum distance among
/// i-dimensional subcodes (i ≤ k) or supercodes (i ≥ k) of the code.
///
/// Valid for 1 ≤ i ≤ N where N is the ambient dimension.
pub fn code_distance(code: &LinearCode, i: usize, budget: &Budget) -> Result<AlphaEntry> {
    let n = code.len();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            valid: format!("1..={n}"),
        });
    }
    if i <= code.k() {
        subcode_distance(code, i, budget)
    } else {
        supercode_distance(code, i, budget)
    }
}

/// Code distances over an inclusive index range.
///
/// Budget and level-set failures are recorded per index in
/// [`AlphaProfile::skipped`] and the remaining indices are still computed;
/// any other error aborts.
pub fn distance_profile(
    code: &LinearCode,
    range: RangeInclusive<usize>,
    budget: &Budget,
) -> Result<AlphaProfile> {
    let n = code.len();
    let (lo, hi) = (*range.start(), *range.end());
    if lo == 0 || hi > n || lo > hi {
        return Err(Error::IndexOutOfRange {
            index: if lo == 0 || lo > hi { lo } else { hi },
            valid: format!("1..={n} with start <= end"),
        });
    }
    let mut profile = AlphaProfile::default();
    for i in lo..=hi {
        match code_distance(code, i, budget) {
            Ok(entry) => {
                profile.entries.insert(i, entry);
            }
            Err(e @ (Error::BudgetExceeded { .. } | Error::LevelSetOverflow { .. })) => {
                profile.skipped.insert(i, e);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(profile)
}

/// Maximality degree μ = d_min − α_{k+1} and the maximality flag.
///
/// Defined only for proper subcodes of the ambient space; the full space
/// has no supercode, so the degree is not applicable there.
pub fn maximality_degree(code: &LinearCode, budget: &Budget) -> Result<MaximalityReport> {
    if code.is_full_space() {
        return Err(Error::NotApplicable(
            "maximality degree needs a proper subcode of the ambient space".into(),
        ));
    }
    let (d_min, _) = code.min_distance(budget)?;
    let alpha = supercode_distance(code, code.k() + 1, budget)?.value;
    assert!(
        alpha <= d_min,
        "supercode distance {alpha} exceeds the minimum distance {d_min}"
    );
    Ok(MaximalityReport {
        mu: d_min - alpha,
        is_maximal: alpha < d_min,
        min_distance: d_min,
        alpha_k_plus_1: alpha,
    })
}
