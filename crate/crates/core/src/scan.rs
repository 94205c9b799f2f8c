//! Exhaustive scans over the words of a linear span.
//!
//! Weights in every supported metric are invariant under nonzero scalar
//! multiplication, so scans visit one representative of each projective
//! point: the coefficient vectors whose first nonzero entry is 1. For a
//! span of dimension k over F_q that is (q^k - 1)/(q - 1) weight
//! evaluations. Representatives are visited in a canonical order (leading
//! position ascending, then remaining coefficients as an ascending base-q
//! odometer), and every representative carries its position in that order,
//! so parallel scans can merge with deterministic tie-breaks.

use rayon::prelude::*;

use crate::ambient::AmbientSpace;
use crate::matrix::Mat;

/// Scans with more representatives than this run on the rayon pool.
const PARALLEL_THRESHOLD: u128 = 1 << 18;

/// One contiguous piece of the projective scan order.
struct ScanBlock {
    lead: usize,
    /// Fixed value of the first free coefficient, when the block is a
    /// sub-odometer split; None means the whole lead block.
    d0: Option<u32>,
    base_index: u128,
}

fn q_pow(q: u64, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc *= q as u128;
    }
    acc
}

/// Number of projective representatives of a k-dimensional span.
pub(crate) fn rep_count(k: usize, q: u64) -> u128 {
    (q_pow(q, k) - 1) / (q as u128 - 1)
}

fn blocks(k: usize, q: u64, split: bool) -> Vec<ScanBlock> {
    let mut out = Vec::new();
    let mut base: u128 = 0;
    for lead in 0..k {
        let free = k - lead - 1;
        if !split || free == 0 || q > 256 {
            out.push(ScanBlock {
                lead,
                d0: None,
                base_index: base,
            });
            base += q_pow(q, free);
        } else {
            let len = q_pow(q, free - 1);
            for d0 in 0..q as u32 {
                out.push(ScanBlock {
                    lead,
                    d0: Some(d0),
                    base_index: base,
                });
                base += len;
            }
        }
    }
    out
}

/// Visit every representative in one block, in order.
fn visit_block(rows: &Mat, block: &ScanBlock, mut f: impl FnMut(u128, &[u32])) {
    let field = rows.field().clone();
    let q = field.q;
    let k = rows.nrows();
    let n = rows.ncols();
    let lead = block.lead;
    let mut word: Vec<u32> = rows.row(lead).to_vec();
    let free = k - lead - 1;
    let mut digits = vec![0u32; free];
    let fixed = usize::from(block.d0.is_some());
    if let Some(d0) = block.d0 {
        digits[0] = d0;
        if d0 != 0 {
            let row = rows.row(lead + 1);
            for c in 0..n {
                word[c] = field.add(word[c], field.mul(d0, row[c]));
            }
        }
    }
    let mut idx = block.base_index;
    loop {
        f(idx, &word);
        idx += 1;
        // Advance the odometer over digits[fixed..], rightmost fastest.
        let mut j = free;
        loop {
            if j == fixed {
                return;
            }
            j -= 1;
            let old = digits[j];
            let new = if old + 1 < q { old + 1 } else { 0 };
            digits[j] = new;
            let delta = field.sub(new, old);
            let row = rows.row(lead + 1 + j);
            for c in 0..n {
                word[c] = field.add(word[c], field.mul(delta, row[c]));
            }
            if new != 0 {
                break;
            }
            // carry into the next digit to the left
        }
    }
}

/// Visit every projective representative of the row space, serially.
pub(crate) fn visit_all(rows: &Mat, mut f: impl FnMut(u128, &[u32])) {
    for b in blocks(rows.nrows(), rows.field().q as u64, false) {
        visit_block(rows, &b, &mut f);
    }
}

/// Minimum weight over the nonzero words of the row space.
/// Returns (weight, representative index, word); ties keep the smallest
/// index. Rows must be linearly independent.
pub(crate) fn min_weight_scan(
    ambient: &AmbientSpace,
    rows: &Mat,
) -> (usize, u128, Vec<u32>) {
    extremal_scan(ambient, rows, false)
}

/// Maximum weight over the nonzero words of the row space, with the same
/// conventions as [`min_weight_scan`].
pub(crate) fn max_weight_scan(
    ambient: &AmbientSpace,
    rows: &Mat,
) -> (usize, u128, Vec<u32>) {
    extremal_scan(ambient, rows, true)
}

fn better(maximize: bool, wt: usize, idx: u128, best: &(usize, u128, Vec<u32>)) -> bool {
    if maximize {
        wt > best.0 || (wt == best.0 && idx < best.1)
    } else {
        wt < best.0 || (wt == best.0 && idx < best.1)
    }
}

fn extremal_scan(
    ambient: &AmbientSpace,
    rows: &Mat,
    maximize: bool,
) -> (usize, u128, Vec<u32>) {
    let k = rows.nrows();
    let q = rows.field().q as u64;
    assert!(k >= 1, "scans need a nonzero span");
    let count = rep_count(k, q);
    let worst = if maximize { (0usize, u128::MAX, Vec::new()) } else { (usize::MAX, u128::MAX, Vec::new()) };
    if count <= PARALLEL_THRESHOLD {
        let mut best = worst;
        visit_all(rows, |idx, w| {
            let wt = ambient.weight(w);
            if better(maximize, wt, idx, &best) {
                best = (wt, idx, w.to_vec());
            }
        });
        best
    } else {
        blocks(k, q, true)
            .par_iter()
            .map(|b| {
                let mut best = worst.clone();
                visit_block(rows, b, |idx, w| {
                    let wt = ambient.weight(w);
                    if better(maximize, wt, idx, &best) {
                        best = (wt, idx, w.to_vec());
                    }
                });
                best
            })
            .reduce(
                || worst.clone(),
                |a, b| {
                    if better(maximize, b.0, b.1, &a) {
                        b
                    } else {
                        a
                    }
                },
            )
    }
}

/// All weights attained by nonzero words of the row space.
pub(crate) fn weight_set_scan(
    ambient: &AmbientSpace,
    rows: &Mat,
) -> std::collections::BTreeSet<usize> {
    let mut set = std::collections::BTreeSet::new();
    visit_all(rows, |_, w| {
        set.insert(ambient.weight(w));
    });
    set
}

/// Minimum weight over the affine coset `shift + <rows>`, visiting all
/// q^nrows words via an incremental odometer. Returns the minimum weight
/// and the first word (in odometer order) attaining it. With zero rows the
/// coset is the single word `shift`.
pub(crate) fn coset_min_weight(
    ambient: &AmbientSpace,
    rows: &Mat,
    shift: &[u32],
) -> (usize, Vec<u32>) {
    let k = rows.nrows();
    let n = rows.ncols();
    debug_assert_eq!(shift.len(), n);
    let field = rows.field().clone();
    let q = field.q;
    let mut word = shift.to_vec();
    let mut best = (ambient.weight(&word), word.clone());
    if k == 0 {
        return best;
    }
    let mut digits = vec![0u32; k];
    'outer: loop {
        // Advance the odometer, rightmost digit fastest. Consecutive
        // labels need not differ by 1 in the field (extension fields use
        // polynomial labels), so each step applies the exact field delta.
        for t in (0..k).rev() {
            let row = rows.row(t);
            let old = digits[t];
            let new = if old + 1 < q { old + 1 } else { 0 };
            digits[t] = new;
            let delta = field.sub(new, old);
            for (w, &r) in word.iter_mut().zip(row) {
                *w = field.add(*w, field.mul(delta, r));
            }
            if new != 0 {
                let wt = ambient.weight(&word);
                if wt < best.0 {
                    best = (wt, word.clone());
                }
                continue 'outer;
            }
            // carry into the next digit to the left
        }
        // Every digit wrapped: the odometer is back at zero.
        break;
    }
    best
}

/// Minimum weight over (row space of `rows`) minus (row space of `excl`),
/// where `excl` is in reduced echelon form with the given pivots. Returns
/// None when the difference is empty (i.e. the spans agree).
pub(crate) fn min_weight_outside(
    ambient: &AmbientSpace,
    rows: &Mat,
    excl: &Mat,
    excl_pivots: &[usize],
) -> Option<(usize, u128, Vec<u32>)> {
    let mut best: Option<(usize, u128, Vec<u32>)> = None;
    visit_all(rows, |idx, w| {
        if excl.contains_vector(excl_pivots, w) {
            return;
        }
        let wt = ambient.weight(w);
        let take = match &best {
            None => true,
            Some(b) => better(false, wt, idx, b),
        };
        if take {
            best = Some((wt, idx, w.to_vec()));
        }
    });
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn scan_visits_each_projective_point_once() {
        let f = FieldCtx::new(3, 1).unwrap();
        let rows = Mat::identity(f.clone(), 3);
        let mut seen = std::collections::BTreeSet::new();
        let mut last_idx = None;
        visit_all(&rows, |idx, w| {
            assert_eq!(last_idx.map_or(0, |i: u128| i + 1), idx, "order is contiguous");
            last_idx = Some(idx);
            // First nonzero coordinate is 1 (projective representative).
            let first = w.iter().find(|&&x| x != 0).copied();
            assert_eq!(first, Some(1));
            assert!(seen.insert(w.to_vec()));
        });
        assert_eq!(seen.len() as u128, rep_count(3, 3));
    }

    #[test]
    fn min_and_max_weight_on_a_known_code() {
        let f = FieldCtx::new(2, 1).unwrap();
        let amb = AmbientSpace::hamming(f.clone(), 5).unwrap();
        let rows = Mat::from_rows(f, &[vec![1, 1, 1, 1, 0], vec![0, 0, 0, 1, 1]]).unwrap();
        let (d, _, w) = min_weight_scan(&amb, &rows);
        assert_eq!(d, 2);
        assert_eq!(amb.weight(&w), 2);
        let (mx, _, wx) = max_weight_scan(&amb, &rows);
        assert_eq!(mx, 4);
        assert_eq!(amb.weight(&wx), 4);
    }

    #[test]
    fn coset_scan_matches_brute_force_over_an_extension_field() {
        // Labels in GF(4) are polynomial encodings, so consecutive labels
        // are not field increments; the scan must still visit the whole
        // coset. Brute force: enumerate all q^k combinations directly.
        let f = FieldCtx::new(2, 2).unwrap();
        let amb = AmbientSpace::hamming(f.clone(), 6).unwrap();
        let rows = Mat::from_rows(
            f.clone(),
            &[vec![1, 1, 2, 3, 2, 1], vec![0, 1, 0, 1, 2, 2]],
        )
        .unwrap();
        let shift = vec![3u32, 0, 1, 0, 2, 0];
        let (got, witness) = coset_min_weight(&amb, &rows, &shift);
        assert_eq!(amb.weight(&witness), got);

        let q = f.q;
        let mut expected = usize::MAX;
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..q {
            for b in 0..q {
                let word: Vec<u32> = (0..6)
                    .map(|c| {
                        f.add(
                            shift[c],
                            f.add(f.mul(a, rows.get(0, c)), f.mul(b, rows.get(1, c))),
                        )
                    })
                    .collect();
                expected = expected.min(amb.weight(&word));
                seen.insert(word);
            }
        }
        assert_eq!(seen.len(), (q * q) as usize, "coset words are distinct");
        assert_eq!(got, expected);
    }

    #[test]
    fn min_weight_outside_skips_the_subspace() {
        let f = FieldCtx::new(2, 1).unwrap();
        let amb = AmbientSpace::hamming(f.clone(), 3).unwrap();
        let rows = Mat::identity(f.clone(), 3);
        let sub = Mat::from_rows(f, &[vec![1, 0, 0]]).unwrap();
        let (excl, pivots) = sub.rref_trimmed();
        let (wt, _, w) = min_weight_outside(&amb, &rows, &excl, &pivots).unwrap();
        assert_eq!(wt, 1);
        assert_ne!(w, vec![1, 0, 0]);
    }
}
