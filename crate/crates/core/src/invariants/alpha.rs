//! Subcode and supercode distances by exhaustive subspace enumeration.

use super::{AlphaEntry, Route, CHUNK};
use crate::ambient::AmbientSpace;
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scan::{min_weight_scan, rep_count};
use crate::subspace::{SubspaceEnum, SupercodeEnum};
use rayon::prelude::*;

use super::radii::{covering_radius, generalized_radius};

/// Best candidate seen so far: (minimum distance, global enumeration
/// index, generator rows). Higher distance wins; ties keep the smaller
/// index, so parallel and serial runs agree.
type Best = Option<(usize, u128, Mat)>;

fn merge(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// The i-th subcode distance: the largest minimum distance among the
/// i-dimensional subcodes of `code`, together with an optimal witness.
pub fn subcode_distance(code: &LinearCode, i: usize, budget: &Budget) -> Result<AlphaEntry> {
    let k = code.k();
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            valid: format!("1..={k}"),
        });
    }
    let q = code.field().q as u64;
    let en = SubspaceEnum::new(code.field().clone(), k, i)?;
    let per = rep_count(i, q);
    let total = en
        .count()
        .checked_mul(per)
        .ok_or(Error::Overflow("subcode enumeration cost"))?;
    budget.debit_u128(total)?;

    let ambient = code.ambient();
    let gen = code.generator();
    let best = en
        .chunks(CHUNK)
        .into_par_iter()
        .map(|chunk| {
            let mut best: Best = None;
            en.visit_chunk(&chunk, |idx, coeff| {
                // Rows of coeff are independent combinations of the
                // generator rows, so the product has independent rows.
                let rows = coeff.mul(gen).expect("coefficient shape");
                let (d, _, _) = min_weight_scan(ambient, &rows);
                best = merge(best.take(), Some((d, idx, rows)));
                Ok(())
            })
            .expect("infallible visitor");
            best
        })
        .reduce(|| None, merge)
        .expect("at least one subspace");

    let (value, _, rows) = best;
    let (witness, _) = rows.rref_trimmed();
    Ok(AlphaEntry {
        value,
        witness,
        route: Route::Subcode,
    })
}

/// The i-th supercode distance: the largest minimum distance among the
/// i-dimensional supercodes of `code`, together with an optimal witness.
///
/// For i = k+1 the value also equals min(d_min, covering radius), which
/// gives a second route via a coset-leader scan; the cheaper route is
/// chosen, and when both fit in half the remaining budget both run and
/// must agree.
pub fn supercode_distance(code: &LinearCode, i: usize, budget: &Budget) -> Result<AlphaEntry> {
    let k = code.k();
    let n = code.len();
    if i < k || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            valid: format!("{k}..={n}"),
        });
    }
    let ambient = code.ambient();
    if i == k {
        // The only k-dimensional supercode is the code itself.
        let (value, _) = code.min_distance(budget)?;
        return Ok(AlphaEntry {
            value,
            witness: code.generator().clone(),
            route: Route::Subcode,
        });
    }
    if i == n {
        // The only N-dimensional supercode is the ambient space, whose
        // minimum distance is 1 in all three metrics (witnessed by a
        // single-entry vector; no nonzero vector weighs less than 1).
        budget.debit(1)?;
        let mut e0 = vec![0u32; n];
        e0[0] = 1;
        let value = ambient.weight(&e0);
        debug_assert_eq!(value, 1);
        return Ok(AlphaEntry {
            value,
            witness: Mat::identity(code.field().clone(), n),
            route: Route::Supercode,
        });
    }

    let q = code.field().q as u64;
    let en = SupercodeEnum::new(code.generator(), code.pivots(), i)?;
    let direct_cost = en
        .count()
        .checked_mul(rep_count(i, q))
        .ok_or(Error::Overflow("supercode enumeration cost"))?;

    if i == k + 1 {
        // Coset route: α_{k+1} = min(d_min, covering radius). Its cost is
        // one scan of the whole ambient space plus one of the code.
        let coset_cost = (q as u128)
            .checked_pow(n as u32)
            .and_then(|c| c.checked_add(code.scan_cost()));
        let half = (budget.remaining() as u128) / 2;
        let both_fit =
            direct_cost <= half && coset_cost.is_some_and(|c| c <= half);
        if both_fit {
            let direct = direct_supercode(code, &en, i, direct_cost, budget)?;
            let coset = coset_alpha(code, budget)?;
            assert_eq!(
                direct.value, coset.value,
                "supercode enumeration and coset scan disagree at index {i}"
            );
            return Ok(AlphaEntry {
                route: Route::SupercodeAndCosetScan,
                ..direct
            });
        }
        if let Some(c) = coset_cost {
            if c < direct_cost {
                return coset_alpha(code, budget);
            }
        }
    }
    direct_supercode(code, &en, i, direct_cost, budget)
}

/// The theorem route for supercode indices: α_i = min(d_min, ρ_{i−k}),
/// computed from the generalized radius. Must agree with
/// [`supercode_distance`] whenever both run; the two sides search
/// different spaces (maximum of minimum distances versus maximum of
/// distances from the code), which makes the agreement a meaningful
/// cross-check rather than the same computation twice.
pub fn supercode_via_radii(code: &LinearCode, i: usize, budget: &Budget) -> Result<usize> {
    let k = code.k();
    let n = code.len();
    if i <= k || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            valid: format!("{}..={n}", k + 1),
        });
    }
    let (d_min, _) = code.min_distance(budget)?;
    let rho = generalized_radius(code, i - k, budget)?.value;
    Ok(d_min.min(rho))
}

fn direct_supercode(
    code: &LinearCode,
    en: &SupercodeEnum,
    i: usize,
    cost: u128,
    budget: &Budget,
) -> Result<AlphaEntry> {
    budget.debit_u128(cost)?;
    let ambient = code.ambient();
    let best = en
        .chunks(CHUNK)
        .into_par_iter()
        .map(|chunk| {
            let mut best: Best = None;
            en.visit_chunk(&chunk, |idx, rows| {
                let (d, _, _) = min_weight_scan(ambient, &rows);
                best = merge(best.take(), Some((d, idx, rows)));
                Ok(())
            })
            .expect("infallible visitor");
            best
        })
        .reduce(|| None, merge)
        .expect("at least one supercode");
    let (value, _, rows) = best;
    let (witness, _) = rows.rref_trimmed();
    debug_assert_eq!(witness.nrows(), i);
    Ok(AlphaEntry {
        value,
        witness,
        route: Route::Supercode,
    })
}

/// α_{k+1} by the coset route: min(d_min, covering radius), witnessed by
/// the code extended with a deepest coset leader.
fn coset_alpha(code: &LinearCode, budget: &Budget) -> Result<AlphaEntry> {
    let (d_min, _) = code.min_distance(budget)?;
    let radius = covering_radius(code, budget)?;
    let value = d_min.min(radius.value);
    let witness_rows = code.generator().vstack(&row_mat(
        code.ambient(),
        &radius.leader,
    ))?;
    let (witness, _) = witness_rows.rref_trimmed();
    debug_assert_eq!(
        witness.nrows(),
        code.k() + 1,
        "a deepest coset leader lies outside the code"
    );
    Ok(AlphaEntry {
        value,
        witness,
        route: Route::CosetScan,
    })
}

fn row_mat(ambient: &AmbientSpace, row: &[u32]) -> Mat {
    Mat::from_rows(ambient.field().clone(), &[row.to_vec()]).expect("row shape")
}
