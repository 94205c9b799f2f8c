//! Ambient spaces and weight functions.
//!
//! A linear code lives in an ambient space V = F_q^N equipped with one of
//! three weight functions:
//!
//! * Hamming: V = F_q^n, weight = number of nonzero coordinates;
//! * rank: V = F_q^(m x n), vectors are m x n matrices flattened row-major,
//!   weight = rank of the matrix;
//! * sum-rank: V is a product of rank blocks (m_1 x n_1), ..., (m_t x n_t),
//!   flattened block by block, weight = sum of the block ranks.
//!
//! All three weights are invariant under nonzero scalar multiplication,
//! which the distance scans exploit by visiting one representative per
//! projective point.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::field::Field;

/// The metric family of an ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Coordinate-wise Hamming weight.
    Hamming,
    /// Matrix rank weight.
    Rank,
    /// Sum of block ranks.
    SumRank,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Hamming => write!(f, "hamming"),
            Metric::Rank => write!(f, "rank"),
            Metric::SumRank => write!(f, "sumrank"),
        }
    }
}

/// Rank weights of binary blocks with at most 16 entries are looked up in a
/// table indexed by the packed bit pattern. One table per block shape,
/// built on first use and shared process-wide.
static F2_RANK_TABLES: Lazy<Mutex<HashMap<(usize, usize), Arc<Vec<u8>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn f2_rank_table(m: usize, n: usize) -> Arc<Vec<u8>> {
    let mut cache = F2_RANK_TABLES.lock().unwrap();
    cache
        .entry((m, n))
        .or_insert_with(|| {
            let size = 1usize << (m * n);
            let mut tab = vec![0u8; size];
            for (pattern, slot) in tab.iter_mut().enumerate() {
                let mut rows = [0u32; 16];
                for r in 0..m {
                    rows[r] = ((pattern >> (r * n)) & ((1 << n) - 1)) as u32;
                }
                *slot = rank_bits(&mut rows[..m]);
            }
            Arc::new(tab)
        })
        .clone()
}

/// Rank of a binary matrix given as bit-packed rows.
fn rank_bits(rows: &mut [u32]) -> u8 {
    let mut rank = 0u8;
    for i in 0..rows.len() {
        let Some(sel) = (i..rows.len()).find(|&r| rows[r] != 0) else {
            break;
        };
        rows.swap(i, sel);
        let lead = rows[i] & rows[i].wrapping_neg(); // lowest set bit
        for r in i + 1..rows.len() {
            if rows[r] & lead != 0 {
                rows[r] ^= rows[i];
            }
        }
        rank += 1;
    }
    rank
}

/// An ambient space: a field, a metric, and the block shape.
#[derive(Clone)]
pub struct AmbientSpace {
    field: Field,
    metric: Metric,
    /// Rank blocks (m, n); for the Hamming metric this is empty and only
    /// `len` matters.
    blocks: Vec<(usize, usize)>,
    len: usize,
    /// Per-block fast rank tables (binary rank blocks with <= 16 entries).
    tables: Vec<Option<Arc<Vec<u8>>>>,
}

impl fmt::Debug for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.shape_string(), self.field)
    }
}

impl PartialEq for AmbientSpace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.metric == other.metric
            && self.blocks == other.blocks
            && self.len == other.len
    }
}
impl Eq for AmbientSpace {}

impl AmbientSpace {
    /// Hamming space F_q^n.
    pub fn hamming(field: Field, n: usize) -> Result<AmbientSpace> {
        if n == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                valid: "length at least 1".into(),
            });
        }
        Ok(AmbientSpace {
            field,
            metric: Metric::Hamming,
            blocks: Vec::new(),
            len: n,
            tables: Vec::new(),
        })
    }

    /// Rank-metric space F_q^(m x n).
    pub fn rank(field: Field, m: usize, n: usize) -> Result<AmbientSpace> {
        Self::sum_rank_with_metric(field, vec![(m, n)], Metric::Rank)
    }

    /// Sum-rank space with the given blocks.
    pub fn sum_rank(field: Field, blocks: Vec<(usize, usize)>) -> Result<AmbientSpace> {
        Self::sum_rank_with_metric(field, blocks, Metric::SumRank)
    }

    fn sum_rank_with_metric(
        field: Field,
        blocks: Vec<(usize, usize)>,
        metric: Metric,
    ) -> Result<AmbientSpace> {
        if blocks.is_empty() || blocks.iter().any(|&(m, n)| m == 0 || n == 0) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                valid: "every block must have positive dimensions".into(),
            });
        }
        let len = blocks.iter().map(|&(m, n)| m * n).sum();
        let tables = blocks
            .iter()
            .map(|&(m, n)| {
                if field.q == 2 && m * n <= 16 {
                    Some(f2_rank_table(m, n))
                } else {
                    None
                }
            })
            .collect();
        Ok(AmbientSpace {
            field,
            metric,
            blocks,
            len,
            tables,
        })
    }

    /// The underlying field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The metric family.
    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// Total number of F_q coordinates, i.e. the dimension of V.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Never empty; ambient spaces have positive length.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The rank blocks; empty for the Hamming metric.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Same shape over a different field (used by scalar extension).
    pub fn with_field(&self, field: Field) -> Result<AmbientSpace> {
        match self.metric {
            Metric::Hamming => AmbientSpace::hamming(field, self.len),
            Metric::Rank => {
                let (m, n) = self.blocks[0];
                AmbientSpace::rank(field, m, n)
            }
            Metric::SumRank => AmbientSpace::sum_rank(field, self.blocks.clone()),
        }
    }

    /// Shape description as used in code files, e.g. `hamming 7`,
    /// `rank 4 4`, `sumrank 2 2 3 1`.
    pub fn shape_string(&self) -> String {
        match self.metric {
            Metric::Hamming => format!("hamming {}", self.len),
            Metric::Rank => format!("rank {} {}", self.blocks[0].0, self.blocks[0].1),
            Metric::SumRank => {
                let mut s = String::from("sumrank");
                for &(m, n) in &self.blocks {
                    s.push_str(&format!(" {m} {n}"));
                }
                s
            }
        }
    }

    /// Weight of a vector of length [`AmbientSpace::len`].
    pub fn weight(&self, v: &[u32]) -> usize {
        debug_assert_eq!(v.len(), self.len);
        match self.metric {
            Metric::Hamming => v.iter().filter(|&&x| x != 0).count(),
            Metric::Rank | Metric::SumRank => {
                let mut total = 0usize;
                let mut off = 0usize;
                for (bi, &(m, n)) in self.blocks.iter().enumerate() {
                    let block = &v[off..off + m * n];
                    total += match &self.tables[bi] {
                        Some(tab) => {
                            let mut idx = 0usize;
                            for (j, &x) in block.iter().enumerate() {
                                idx |= (x as usize & 1) << j;
                            }
                            tab[idx] as usize
                        }
                        None => self.block_rank(block, m, n),
                    };
                    off += m * n;
                }
                total
            }
        }
    }

    /// Rank of one m x n block over the field, by Gaussian elimination.
    fn block_rank(&self, block: &[u32], m: usize, n: usize) -> usize {
        let f = &self.field;
        let mut rows: Vec<Vec<u32>> = (0..m).map(|r| block[r * n..(r + 1) * n].to_vec()).collect();
        let mut rank = 0usize;
        let mut col = 0usize;
        while rank < m && col < n {
            let Some(sel) = (rank..m).find(|&r| rows[r][col] != 0) else {
                col += 1;
                continue;
            };
            rows.swap(rank, sel);
            let inv = f.inv(rows[rank][col]).expect("pivot is nonzero");
            for c in col..n {
                rows[rank][c] = f.mul(rows[rank][c], inv);
            }
            for r in rank + 1..m {
                let factor = rows[r][col];
                if factor != 0 {
                    for c in col..n {
                        let v = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
                        rows[r][c] = v;
                    }
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }
}
