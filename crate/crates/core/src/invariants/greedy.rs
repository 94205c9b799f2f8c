//! Greedy code distances, greedy chains, and greedy generator matrices.
//!
//! The greedy distances are defined level by level: level 1 holds all
//! one-dimensional subcodes spanned by maximum-weight words, and level i
//! holds all i-dimensional codes of largest minimum distance among those
//! containing a member of level i−1 (subcodes of C up to dimension k, then
//! supercodes of C up to the ambient dimension). The definition quantifies
//! over every member of the previous level, so the full level set is kept,
//! deduplicated by reduced echelon form and capped by `level_cap`.

use super::CHUNK;
use crate::ambient::AmbientSpace;
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scan::{min_weight_scan, rep_count, visit_all};
use crate::subspace::{SubspaceEnum, SupercodeEnum};
use std::collections::BTreeMap;

/// Greedy code distances with one witnessing chain.
#[derive(Debug, Clone)]
pub struct GreedyProfile {
    /// values[i−1] = the i-th greedy code distance, for i = 1..=N.
    pub values: Vec<usize>,
    /// level_sizes[i−1] = how many greedy codes exist at level i.
    pub level_sizes: Vec<usize>,
    /// One nested chain D_1 ⊆ … ⊆ D_N of greedy codes with
    /// d_min(D_i) = values[i−1]; chain[i−1] is the reduced-echelon
    /// generator of D_i, and D_k is the code itself.
    pub chain: Vec<Mat>,
}

struct Member {
    mat: Mat,
    pivots: Vec<usize>,
    parent: usize,
}

fn rref_pivots(m: &Mat) -> Vec<usize> {
    m.rows_iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
        .collect()
}

/// Greedy code distances over all levels 1..=N, with level sizes and one
/// witnessing chain.
pub fn greedy_profile(
    code: &LinearCode,
    budget: &Budget,
    level_cap: usize,
) -> Result<GreedyProfile> {
    engine(code, budget, level_cap, false).map(|(p, _)| p)
}

/// The full greedy level sets, one list of generator matrices (reduced
/// echelon, ambient coordinates) per level 1..=N. Exposed for
/// cross-checking; the sets can be large, so this is meant for small codes.
pub fn greedy_levels(
    code: &LinearCode,
    budget: &Budget,
    level_cap: usize,
) -> Result<Vec<Vec<Mat>>> {
    engine(code, budget, level_cap, true).map(|(_, l)| l)
}

fn engine(
    code: &LinearCode,
    budget: &Budget,
    level_cap: usize,
    keep_levels: bool,
) -> Result<(GreedyProfile, Vec<Vec<Mat>>)> {
    let k = code.k();
    let n = code.len();
    let q = code.field().q as u64;
    let field = code.field().clone();
    let ambient = code.ambient();
    let gen = code.generator();

    let mut values: Vec<usize> = Vec::with_capacity(n);
    let mut level_sizes: Vec<usize> = Vec::with_capacity(n);

    // Subcode levels live in the coefficient space F_q^k: a subcode of C
    // corresponds to a row space of coefficients, and multiplying by the
    // generator is a weight-preserving bijection onto the subcode.
    let mut sub_levels: Vec<Vec<Member>> = Vec::with_capacity(k);
    {
        // Level 1: spans of maximum-weight words.
        let en = SubspaceEnum::new(field.clone(), k, 1)?;
        budget.debit_u128(en.count())?;
        let mut best = 0usize;
        let mut members: Vec<Member> = Vec::new();
        for chunk in en.chunks(CHUNK) {
            en.visit_chunk(&chunk, |_, coeff| {
                let word = gen.left_mul_vec(coeff.row(0));
                let wt = ambient.weight(&word);
                if wt > best {
                    best = wt;
                    members.clear();
                }
                if wt == best {
                    if members.len() >= level_cap {
                        return Err(Error::LevelSetOverflow {
                            size: members.len() + 1,
                            cap: level_cap,
                        });
                    }
                    let pivots = rref_pivots(&coeff);
                    members.push(Member {
                        mat: coeff,
                        pivots,
                        parent: usize::MAX,
                    });
                }
                Ok(())
            })?;
        }
        values.push(best);
        level_sizes.push(members.len());
        sub_levels.push(members);
    }
    for i in 2..=k {
        let prev = sub_levels.last().expect("previous level");
        let mut cand: BTreeMap<Vec<u32>, (usize, usize)> = BTreeMap::new();
        for (pidx, p) in prev.iter().enumerate() {
            let en = SupercodeEnum::new(&p.mat, &p.pivots, i)?;
            for chunk in en.chunks(CHUNK) {
                en.visit_chunk(&chunk, |_, lifted| {
                    let (canon, _) = lifted.rref_trimmed();
                    debug_assert_eq!(canon.nrows(), i);
                    let key = canon.data().to_vec();
                    if !cand.contains_key(&key) {
                        if cand.len() >= level_cap {
                            return Err(Error::LevelSetOverflow {
                                size: cand.len() + 1,
                                cap: level_cap,
                            });
                        }
                        budget.debit_u128(rep_count(i, q))?;
                        let rows = canon.mul(gen).expect("coefficient shape");
                        let (d, _, _) = min_weight_scan(ambient, &rows);
                        cand.insert(key, (d, pidx));
                    }
                    Ok(())
                })?;
            }
        }
        let vmax = cand.values().map(|&(d, _)| d).max().expect("nonempty level");
        let members: Vec<Member> = cand
            .into_iter()
            .filter(|&(_, (d, _))| d == vmax)
            .map(|(key, (_, pidx))| {
                let mat = Mat::new(field.clone(), i, k, key).expect("canonical rows");
                let pivots = rref_pivots(&mat);
                Member {
                    mat,
                    pivots,
                    parent: pidx,
                }
            })
            .collect();
        values.push(vmax);
        level_sizes.push(members.len());
        sub_levels.push(members);
    }
    debug_assert_eq!(
        sub_levels[k - 1].len(),
        1,
        "the only k-dimensional subcode is the code itself"
    );

    // Supercode levels live in the ambient space directly.
    let mut super_levels: Vec<Vec<Member>> = Vec::with_capacity(n - k);
    let seed = [Member {
        mat: gen.clone(),
        pivots: code.pivots().to_vec(),
        parent: 0,
    }];
    for i in (k + 1)..=n {
        let prev: &[Member] = super_levels.last().map_or(&seed, |l| l.as_slice());
        let mut cand: BTreeMap<Vec<u32>, (usize, usize)> = BTreeMap::new();
        for (pidx, p) in prev.iter().enumerate() {
            let en = SupercodeEnum::new(&p.mat, &p.pivots, i)?;
            for chunk in en.chunks(CHUNK) {
                en.visit_chunk(&chunk, |_, lifted| {
                    let (canon, _) = lifted.rref_trimmed();
                    debug_assert_eq!(canon.nrows(), i);
                    let key = canon.data().to_vec();
                    if !cand.contains_key(&key) {
                        if cand.len() >= level_cap {
                            return Err(Error::LevelSetOverflow {
                                size: cand.len() + 1,
                                cap: level_cap,
                            });
                        }
                        budget.debit_u128(rep_count(i, q))?;
                        let (d, _, _) = min_weight_scan(ambient, &canon);
                        cand.insert(key, (d, pidx));
                    }
                    Ok(())
                })?;
            }
        }
        let vmax = cand.values().map(|&(d, _)| d).max().expect("nonempty level");
        let members: Vec<Member> = cand
            .into_iter()
            .filter(|&(_, (d, _))| d == vmax)
            .map(|(key, (_, pidx))| {
                let mat = Mat::new(field.clone(), i, n, key).expect("canonical rows");
                let pivots = rref_pivots(&mat);
                Member {
                    mat,
                    pivots,
                    parent: pidx,
                }
            })
            .collect();
        values.push(vmax);
        level_sizes.push(members.len());
        super_levels.push(members);
    }

    // Assemble one nested chain by walking parent links downward from the
    // deterministic first member of the top level.
    let to_ambient = |coeff: &Mat| -> Mat {
        let rows = coeff.mul(gen).expect("coefficient shape");
        rows.rref_trimmed().0
    };
    let mut chain: Vec<Mat> = Vec::with_capacity(n);
    chain.resize_with(n, || Mat::zeros(field.clone(), 0, 0));
    let mut idx = 0usize;
    for lvl in ((k + 1)..=n).rev() {
        let m = &super_levels[lvl - k - 1][idx];
        chain[lvl - 1] = m.mat.clone();
        idx = m.parent;
    }
    debug_assert_eq!(idx, 0, "supercode chains root at the code");
    idx = 0;
    for lvl in (1..=k).rev() {
        let m = &sub_levels[lvl - 1][idx];
        chain[lvl - 1] = to_ambient(&m.mat);
        idx = m.parent;
    }

    let levels: Vec<Vec<Mat>> = if keep_levels {
        let mut out: Vec<Vec<Mat>> = Vec::with_capacity(n);
        for lvl in sub_levels.iter() {
            out.push(lvl.iter().map(|m| to_ambient(&m.mat)).collect());
        }
        for lvl in super_levels.iter() {
            out.push(lvl.iter().map(|m| m.mat.clone()).collect());
        }
        out
    } else {
        Vec::new()
    };

    Ok((
        GreedyProfile {
            values,
            level_sizes,
            chain,
        },
        levels,
    ))
}

/// The lexicographically smallest minimum-weight word of a row space,
/// comparing entire words over all scalar multiples.
fn lex_min_weight_word(ambient: &AmbientSpace, rows: &Mat) -> (usize, Vec<u32>) {
    let field = rows.field().clone();
    let q = field.q;
    let lex_min_multiple = |w: &[u32]| -> Vec<u32> {
        let mut best = w.to_vec();
        for lambda in 2..q {
            let scaled: Vec<u32> = w.iter().map(|&x| field.mul(lambda, x)).collect();
            if scaled < best {
                best = scaled;
            }
        }
        best
    };
    let mut best: Option<(usize, Vec<u32>)> = None;
    visit_all(rows, |_, w| {
        let wt = ambient.weight(w);
        match &mut best {
            None => best = Some((wt, lex_min_multiple(w))),
            Some(b) => {
                if wt < b.0 {
                    *b = (wt, lex_min_multiple(w));
                } else if wt == b.0 {
                    let cand = lex_min_multiple(w);
                    if cand < b.1 {
                        b.1 = cand;
                    }
                }
            }
        }
    });
    best.expect("nonzero span")
}

/// A generator matrix whose i-th row weight equals the i-th greedy subcode
/// distance, and whose partial distances equal the greedy subcode
/// distances.
///
/// Built from a greedy chain by the exchange procedure: walking up the
/// chain, a row whose weight exceeds its level value is replaced by a
/// minimum-weight word of its level's span when the value drops strictly
/// below the previous level, and otherwise swapped down the chain to the
/// first level where a strict drop occurs (rows displaced by the swap
/// already carry the shared level value). Constant-value prefixes need no
/// work: there the whole level span is constant-weight. Ties are broken by
/// the lexicographically smallest minimum-weight word.
pub fn greedy_generator(
    code: &LinearCode,
    budget: &Budget,
    level_cap: usize,
) -> Result<Mat> {
    let k = code.k();
    let q = code.field().q as u64;
    let field = code.field().clone();
    let ambient = code.ambient();
    let profile = greedy_profile(code, budget, level_cap)?;
    let v = &profile.values[..k];

    // Basis adapted to the chain: g[t] spans chain level t+1 over level t.
    let mut g: Vec<Vec<u32>> = Vec::with_capacity(k);
    g.push(profile.chain[0].row(0).to_vec());
    for t in 1..k {
        let below = &profile.chain[t - 1];
        let below_pivots = rref_pivots(below);
        let here = &profile.chain[t];
        let fresh = here
            .rows_iter()
            .find(|r| !below.contains_vector(&below_pivots, r))
            .expect("dimension increases along the chain");
        g.push(fresh.to_vec());
    }

    for t in 1..k {
        let w = v[t];
        // First level (0-based) sharing this value; v is non-increasing.
        let j0 = (0..=t).find(|&j| v[j] == w).expect("v[t] == w");
        if j0 == 0 {
            // All levels down to 1 share the value, so the whole span is
            // constant-weight and the current row already weighs w.
            debug_assert_eq!(ambient.weight(&g[t]), w);
            continue;
        }
        // Push the new row down to level j0+1 (position j0); displaced
        // rows keep their weights because every level in between shares w.
        g[j0..=t].rotate_right(1);
        budget.debit_u128(rep_count(j0 + 1, q))?;
        let span = Mat::from_rows(field.clone(), &g[0..=j0]).expect("row shape");
        let (wt, word) = lex_min_weight_word(ambient, &span);
        debug_assert_eq!(wt, w, "the squeezed span has minimum distance w");
        g[j0] = word;
    }

    debug_assert!(g
        .iter()
        .zip(v)
        .all(|(row, &val)| ambient.weight(row) == val));
    Mat::from_rows(field, &g)
}

/// Lower bounds on the greedy subcode distances from one basis: sort the
/// basis by weight, largest first, and take the minimum distance of each
/// prefix span. The i-th entry never exceeds the i-th greedy subcode
/// distance.
pub fn greedy_lower_bound(
    code: &LinearCode,
    basis: &Mat,
    budget: &Budget,
) -> Result<Vec<usize>> {
    let k = code.k();
    let n = code.len();
    if basis.ncols() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: basis.ncols(),
        });
    }
    if basis.field().p != code.field().p || basis.field().e != code.field().e {
        return Err(Error::AmbientMismatch(format!(
            "basis over {} but code over {}",
            basis.field(),
            code.field()
        )));
    }
    if basis.nrows() != k {
        return Err(Error::NotABasis(format!(
            "{} rows for a {k}-dimensional code",
            basis.nrows()
        )));
    }
    if basis.rank() != k {
        return Err(Error::NotABasis("rows are linearly dependent".into()));
    }
    if let Some(row) = basis.rows_iter().find(|r| !code.contains(r)) {
        return Err(Error::NotABasis(format!(
            "row {row:?} is not a code word"
        )));
    }

    let ambient = code.ambient();
    let q = code.field().q as u64;
    let mut rows: Vec<Vec<u32>> = basis.rows_iter().map(|r| r.to_vec()).collect();
    rows.sort_by_key(|r| std::cmp::Reverse(ambient.weight(r)));

    let mut bounds = Vec::with_capacity(k);
    for i in 1..=k {
        budget.debit_u128(rep_count(i, q))?;
        let span = Mat::from_rows(code.field().clone(), &rows[0..i])?;
        let (d, _, _) = min_weight_scan(ambient, &span);
        bounds.push(d);
    }
    Ok(bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{Budget, DEFAULT_BUDGET};
    use crate::field::FieldCtx;
    use crate::invariants::partial_distances;

    fn code(q: u64, n: usize, rows: &[Vec<u32>]) -> LinearCode {
        let f = FieldCtx::new(q, 1).unwrap();
        let amb = AmbientSpace::hamming(f, n).unwrap();
        LinearCode::from_rows(amb, rows).unwrap()
    }

    const CAP: usize = 1 << 20;

    #[test]
    fn greedy_distances_of_the_full_binary_space_of_length_3() {
        // The greedy level 1 is the span of 111; every 2-dimensional
        // space containing 111 also contains two complementary words whose
        // supports cover disjoint parts, one of weight 1 or 2 and then
        // the other weight 1: e.g. <111, 100> contains 011. d_min drops
        // to 1 at level 2 already, unlike the unrestricted alpha_2 = 2.
        let c = code(
            2,
            3,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        );
        let budget = Budget::new(DEFAULT_BUDGET);
        let p = greedy_profile(&c, &budget, CAP).unwrap();
        assert_eq!(p.values, vec![3, 1, 1]);
        // Chain is nested with the right dimensions and values.
        for (i, d) in p.chain.iter().enumerate() {
            assert_eq!(d.nrows(), i + 1);
            let (dm, _, _) = min_weight_scan(c.ambient(), d);
            assert_eq!(dm, p.values[i]);
        }
    }

    #[test]
    fn greedy_agrees_with_plain_distances_at_forced_indices() {
        let c = code(2, 5, &[vec![1, 1, 1, 1, 0], vec![0, 0, 0, 1, 1]]);
        let budget = Budget::new(DEFAULT_BUDGET);
        let p = greedy_profile(&c, &budget, CAP).unwrap();
        let k = c.k();
        let n = c.len();
        // alpha^g = alpha at i in {1, k, k+1, N}.
        use crate::invariants::code_distance;
        for i in [1, k, k + 1, n] {
            let a = code_distance(&c, i, &budget).unwrap().value;
            assert_eq!(p.values[i - 1], a, "index {i}");
        }
        // And alpha^g <= alpha everywhere.
        for i in 1..=n {
            let a = code_distance(&c, i, &budget).unwrap().value;
            assert!(p.values[i - 1] <= a, "index {i}");
        }
    }

    #[test]
    fn greedy_generator_rows_and_partial_distances_match() {
        let cases = vec![
            code(2, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            code(2, 5, &[vec![1, 1, 1, 1, 0], vec![0, 0, 0, 1, 1]]),
            code(2, 6, &[vec![1, 1, 1, 1, 1, 1], vec![1, 1, 1, 0, 0, 0], vec![1, 0, 0, 1, 0, 0]]),
            code(3, 4, &[vec![1, 1, 1, 0], vec![0, 1, 2, 0], vec![0, 0, 1, 1]]),
        ];
        let budget = Budget::new(DEFAULT_BUDGET);
        for c in &cases {
            let p = greedy_profile(c, &budget, CAP).unwrap();
            let g = greedy_generator(c, &budget, CAP).unwrap();
            let k = c.k();
            // Row weights equal the greedy values.
            for t in 0..k {
                assert_eq!(
                    c.ambient().weight(g.row(t)),
                    p.values[t],
                    "row {t} weight"
                );
            }
            // The rows generate the code.
            let (rg, _) = g.rref_trimmed();
            assert_eq!(&rg, c.generator());
            // Partial distances of the produced matrix equal the greedy
            // values (computed by an independent coset scan).
            let deltas = partial_distances(&g, c.ambient(), &budget)
                .unwrap()
                .deltas;
            assert_eq!(deltas, p.values[..k].to_vec());
        }
    }

    #[test]
    fn constant_weight_code_generator_is_immediate() {
        // Simplex-like constant-weight code: every generator works, and
        // the exchange procedure must not disturb it.
        let c = code(
            2,
            7,
            &[
                vec![1, 0, 0, 1, 0, 1, 1],
                vec![0, 1, 0, 1, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 1, 1],
            ],
        );
        let budget = Budget::new(DEFAULT_BUDGET);
        let p = greedy_profile(&c, &budget, CAP).unwrap();
        assert_eq!(p.values[..3], [4, 4, 4]);
        let g = greedy_generator(&c, &budget, CAP).unwrap();
        for t in 0..3 {
            assert_eq!(c.ambient().weight(g.row(t)), 4);
        }
    }

    #[test]
    fn lower_bound_stays_below_greedy_values() {
        let c = code(2, 5, &[vec![1, 1, 1, 1, 0], vec![0, 0, 0, 1, 1]]);
        let budget = Budget::new(DEFAULT_BUDGET);
        let p = greedy_profile(&c, &budget, CAP).unwrap();
        let bounds = greedy_lower_bound(&c, c.generator(), &budget).unwrap();
        for (i, b) in bounds.iter().enumerate() {
            assert!(*b <= p.values[i], "prefix bound at index {}", i + 1);
        }
    }

    #[test]
    fn lower_bound_rejects_non_bases() {
        let f = FieldCtx::new(2, 1).unwrap();
        let amb = AmbientSpace::hamming(f.clone(), 4).unwrap();
        let c = LinearCode::from_rows(amb, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let budget = Budget::new(DEFAULT_BUDGET);
        // Dependent rows.
        let dep = Mat::from_rows(f.clone(), &[vec![1, 1, 0, 0], vec![1, 1, 0, 0]]).unwrap();
        assert!(matches!(
            greedy_lower_bound(&c, &dep, &budget),
            Err(Error::NotABasis(_))
        ));
        // A vector outside the code.
        let outside = Mat::from_rows(f.clone(), &[vec![1, 1, 0, 0], vec![1, 0, 0, 0]]).unwrap();
        assert!(matches!(
            greedy_lower_bound(&c, &outside, &budget),
            Err(Error::NotABasis(_))
        ));
        // Wrong row count.
        let short = Mat::from_rows(f, &[vec![1, 1, 0, 0]]).unwrap();
        assert!(matches!(
            greedy_lower_bound(&c, &short, &budget),
            Err(Error::NotABasis(_))
        ));
    }

    #[test]
    fn level_cap_aborts_with_overflow() {
        let c = code(
            2,
            4,
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ],
        );
        let budget = Budget::new(DEFAULT_BUDGET);
        assert!(matches!(
            greedy_profile(&c, &budget, 2),
            Err(Error::LevelSetOverflow { .. })
        ));
    }

    #[test]
    fn levels_contain_the_chain() {
        let c = code(2, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let budget = Budget::new(DEFAULT_BUDGET);
        let p = greedy_profile(&c, &budget, CAP).unwrap();
        let levels = greedy_levels(&c, &budget, CAP).unwrap();
        assert_eq!(levels.len(), 4);
        for (i, lvl) in levels.iter().enumerate() {
            assert_eq!(p.level_sizes[i], lvl.len());
            assert!(
                lvl.iter().any(|m| *m == p.chain[i]),
                "chain member at level {} is in the level set",
                i + 1
            );
        }
    }
}
