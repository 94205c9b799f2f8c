//! Partial distances of a matrix and the exponent of an invertible one.
//!
//! The i-th partial distance of a full-rank matrix is the minimum weight
//! over the coset of its i-th row modulo the span of the rows above it.
//! For an invertible square matrix the normalized logarithms of the
//! partial distances average to the exponent, the figure of merit that
//! governs how fast the matrix polarizes a memoryless channel.

use crate::ambient::AmbientSpace;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scan::coset_min_weight;

/// Partial distances of a full-rank matrix, with one minimizing word per
/// row.
#[derive(Debug, Clone)]
pub struct PartialDistanceProfile {
    /// deltas[i−1] is the minimum weight of row i plus the span of rows
    /// 1..i−1.
    pub deltas: Vec<usize>,
    /// minimizers[i−1] attains deltas[i−1] inside that coset.
    pub minimizers: Vec<Vec<u32>>,
}

/// Exponent of an invertible matrix, together with the sharp ceiling any
/// matrix of the same side can reach.
#[derive(Debug, Clone)]
pub struct ExponentReport {
    /// Average of log base n of the partial distances.
    pub exponent: f64,
    /// Average of log base n of n−i+1, the largest value the i-th
    /// partial distance can take.
    pub ceiling: f64,
    /// The partial distances the exponent was computed from.
    pub deltas: Vec<usize>,
}

/// Partial distances of `mat` under the weight of `ambient`.
///
/// Row i contributes the minimum weight of its coset modulo the rows above
/// it; the first row contributes its own weight. Costs sum_{i} q^{i−1}
/// weight evaluations against the budget.
pub fn partial_distances(
    mat: &Mat,
    ambient: &AmbientSpace,
    budget: &Budget,
) -> Result<PartialDistanceProfile> {
    if mat.ncols() != ambient.len() {
        return Err(Error::LengthMismatch {
            expected: ambient.len(),
            got: mat.ncols(),
        });
    }
    if mat.field().p != ambient.field().p || mat.field().e != ambient.field().e {
        return Err(Error::AmbientMismatch(format!(
            "matrix over {} but ambient space over {}",
            mat.field(),
            ambient.field()
        )));
    }
    if mat.rank() != mat.nrows() {
        return Err(Error::RankDeficient);
    }

    let q = mat.field().q as u128;
    let r = mat.nrows();
    let mut deltas = Vec::with_capacity(r);
    let mut minimizers = Vec::with_capacity(r);
    for i in 0..r {
        let cost = q
            .checked_pow(i as u32)
            .ok_or(Error::Overflow("coset size"))?;
        budget.debit_u128(cost)?;
        let prefix_rows: Vec<Vec<u32>> =
            (0..i).map(|t| mat.row(t).to_vec()).collect();
        let prefix = if i == 0 {
            Mat::zeros(mat.field().clone(), 0, mat.ncols())
        } else {
            Mat::from_rows(mat.field().clone(), &prefix_rows)?
        };
        let (d, word) = coset_min_weight(ambient, &prefix, mat.row(i));
        deltas.push(d);
        minimizers.push(word);
    }
    Ok(PartialDistanceProfile { deltas, minimizers })
}

/// Exponent of an invertible square matrix: the average of log base n of
/// its partial distances, reported next to the ceiling that the best
/// matrix of side n could reach.
pub fn exponent(
    mat: &Mat,
    ambient: &AmbientSpace,
    budget: &Budget,
) -> Result<ExponentReport> {
    let n = mat.ncols();
    if mat.nrows() != n || mat.rank() != n {
        return Err(Error::NotInvertible);
    }
    if n < 2 {
        return Err(Error::NotApplicable(
            "the exponent uses logarithms base n, so the side must be at least 2".into(),
        ));
    }
    let deltas = partial_distances(mat, ambient, budget)?.deltas;
    let ln_n = (n as f64).ln();
    let exponent = deltas
        .iter()
        .map(|&d| (d as f64).ln() / ln_n)
        .sum::<f64>()
        / n as f64;
    let ceiling = (1..=n)
        .map(|i| ((n - i + 1) as f64).ln() / ln_n)
        .sum::<f64>()
        / n as f64;
    Ok(ExponentReport {
        exponent,
        ceiling,
        deltas,
    })
}
