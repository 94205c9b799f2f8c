//! Canonical enumeration of subspaces and supercodes.
//!
//! Every i-dimensional subspace of F_q^d has a unique basis in reduced row
//! echelon form, determined by a pivot column set P = {p_0 < ... < p_{i-1}}
//! and arbitrary field values at the free entries (row r, column c) with
//! c > p_r and c not a pivot. Enumerating pivot sets in lexicographic order
//! and free entries as a base-q odometer (row-major, last entry fastest)
//! therefore visits each subspace exactly once, in a canonical order that
//! is stable across runs and across serial/parallel execution.
//!
//! Supercodes of a fixed code C inside its ambient space correspond
//! bijectively to subspaces of the quotient V/C. The quotient is realized
//! concretely on the non-pivot coordinates of the reduced echelon basis of
//! C, so supercode enumeration reuses the subspace machinery and lifts each
//! quotient basis row back into V on those coordinates.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;

/// The Gaussian binomial coefficient: the number of k-dimensional subspaces
/// of F_q^n, computed exactly in 128-bit arithmetic.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let qq = q as u128;
    let pow = |e: usize| -> Result<u128> {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.checked_mul(qq).ok_or(Error::Overflow("gaussian_binomial"))?;
        }
        Ok(acc)
    };
    let mut r: u128 = 1;
    for j in 0..k {
        let num = pow(n - j)? - 1;
        let den = pow(j + 1)? - 1;
        r = r.checked_mul(num).ok_or(Error::Overflow("gaussian_binomial"))?;
        debug_assert_eq!(r % den, 0);
        r /= den;
    }
    Ok(r)
}

/// Number of projective points of an i-dimensional space: (q^i - 1)/(q - 1).
/// This is the number of weight evaluations a minimum-distance scan of an
/// i-dimensional code performs.
pub fn projective_count(i: usize, q: u64) -> Result<u128> {
    let qq = q as u128;
    let mut acc: u128 = 1;
    for _ in 0..i {
        acc = acc.checked_mul(qq).ok_or(Error::Overflow("projective_count"))?;
    }
    Ok((acc - 1) / (qq - 1))
}

/// One pivot-set schema of the enumeration.
struct Schema {
    pivots: Vec<usize>,
    /// Free positions (row, col), row-major order.
    free: Vec<(usize, usize)>,
    /// q^free.len()
    count: u128,
    /// Sum of the counts of all earlier schemas.
    base_index: u128,
}

/// Canonical enumerator of the i-dimensional subspaces of F_q^d.
pub struct SubspaceEnum {
    field: Field,
    dim: usize,
    i: usize,
    schemas: Vec<Schema>,
    total: u128,
}

/// A contiguous slice of one schema's odometer, for parallel dispatch.
#[derive(Debug, Clone, Copy)]
pub struct EnumChunk {
    schema: usize,
    offset: u128,
    /// Number of subspaces in the chunk.
    pub len: u64,
    /// Global index of the first subspace in the chunk.
    pub base_index: u128,
}

impl SubspaceEnum {
    /// Enumerator of i-dimensional subspaces of F_q^dim.
    pub fn new(field: Field, dim: usize, i: usize) -> Result<SubspaceEnum> {
        if i > dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                valid: format!("0..={dim}"),
            });
        }
        let q = field.q as u128;
        let mut schemas = Vec::new();
        let mut total: u128 = 0;
        for pivots in (0..dim).combinations(i) {
            let mut free = Vec::new();
            for (r, &pr) in pivots.iter().enumerate() {
                for c in pr + 1..dim {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let mut count: u128 = 1;
            for _ in 0..free.len() {
                count = count
                    .checked_mul(q)
                    .ok_or(Error::Overflow("subspace enumeration"))?;
            }
            let base_index = total;
            total = total
                .checked_add(count)
                .ok_or(Error::Overflow("subspace enumeration"))?;
            schemas.push(Schema {
                pivots,
                free,
                count,
                base_index,
            });
        }
        if i == 0 {
            // The single trivial subspace: one schema with no pivots.
            total = 1;
            schemas = vec![Schema {
                pivots: Vec::new(),
                free: Vec::new(),
                count: 1,
                base_index: 0,
            }];
        }
        Ok(SubspaceEnum {
            field,
            dim,
            i,
            schemas,
            total,
        })
    }

    /// Total number of subspaces. Matches [`gaussian_binomial`].
    pub fn count(&self) -> u128 {
        self.total
    }

    /// Split the enumeration into chunks of at most `max_len` subspaces.
    pub fn chunks(&self, max_len: u64) -> Vec<EnumChunk> {
        let mut out = Vec::new();
        for (si, s) in self.schemas.iter().enumerate() {
            let mut offset: u128 = 0;
            while offset < s.count {
                let len = (s.count - offset).min(max_len as u128) as u64;
                out.push(EnumChunk {
                    schema: si,
                    offset,
                    len,
                    base_index: s.base_index + offset,
                });
                offset += len as u128;
            }
        }
        out
    }

    /// Decode one subspace basis (i x dim, reduced row echelon form).
    fn decode(&self, schema: usize, offset: u128) -> Mat {
        let s = &self.schemas[schema];
        let q = self.field.q as u128;
        let mut m = Mat::zeros(self.field.clone(), self.i, self.dim);
        for (r, &pc) in s.pivots.iter().enumerate() {
            m.set(r, pc, 1);
        }
        let mut rest = offset;
        for &(r, c) in s.free.iter().rev() {
            m.set(r, c, (rest % q) as u32);
            rest /= q;
        }
        debug_assert_eq!(rest, 0);
        m
    }

    /// Visit every subspace in a chunk, in enumeration order, passing the
    /// global index and the basis matrix. Stops early on the first error.
    pub fn visit_chunk(
        &self,
        chunk: &EnumChunk,
        mut f: impl FnMut(u128, Mat) -> Result<()>,
    ) -> Result<()> {
        for j in 0..chunk.len {
            let offset = chunk.offset + j as u128;
            let m = self.decode(chunk.schema, offset);
            f(chunk.base_index + j as u128, m)?;
        }
        Ok(())
    }
}

/// Canonical enumerator of the supercodes (overcodes) of a fixed code,
/// i.e. the subspaces D with C <= D <= V of a given dimension.
pub struct SupercodeEnum {
    inner: SubspaceEnum,
    base: Mat,
    lift_cols: Vec<usize>,
    ambient_len: usize,
    extra: usize,
}

impl SupercodeEnum {
    /// Enumerator of the `target_dim`-dimensional supercodes of the code
    /// with reduced echelon generator `base` (pivot columns `pivots`)
    /// inside F_q^N, N = base.ncols().
    pub fn new(base: &Mat, pivots: &[usize], target_dim: usize) -> Result<SupercodeEnum> {
        let k = base.nrows();
        let n = base.ncols();
        if target_dim < k || target_dim > n {
            return Err(Error::IndexOutOfRange {
                index: target_dim,
                valid: format!("{k}..={n}"),
            });
        }
        let lift_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let extra = target_dim - k;
        let inner = SubspaceEnum::new(base.field().clone(), n - k, extra)?;
        Ok(SupercodeEnum {
            inner,
            base: base.clone(),
            lift_cols,
            ambient_len: n,
            extra,
        })
    }

    /// Number of supercodes.
    pub fn count(&self) -> u128 {
        self.inner.count()
    }

    /// Dimension gained over the base code.
    pub fn extra(&self) -> usize {
        self.extra
    }

    /// Split into chunks for parallel dispatch.
    pub fn chunks(&self, max_len: u64) -> Vec<EnumChunk> {
        self.inner.chunks(max_len)
    }

    /// Visit every supercode in a chunk. The matrix passed to `f` has the
    /// base rows first and the lifted quotient rows below; its row space is
    /// the supercode. The lifted rows alone span a complement D of C inside
    /// the supercode (they live on non-pivot coordinates of C, so no
    /// nonzero combination of them falls into C).
    pub fn visit_chunk(
        &self,
        chunk: &EnumChunk,
        mut f: impl FnMut(u128, Mat) -> Result<()>,
    ) -> Result<()> {
        self.inner.visit_chunk(chunk, |idx, qmat| {
            f(idx, self.lift(&qmat))
        })
    }

    fn lift(&self, qmat: &Mat) -> Mat {
        let field = self.base.field().clone();
        let mut out = Mat::zeros(
            field,
            self.base.nrows() + qmat.nrows(),
            self.ambient_len,
        );
        for r in 0..self.base.nrows() {
            for c in 0..self.ambient_len {
                out.set(r, c, self.base.get(r, c));
            }
        }
        for r in 0..qmat.nrows() {
            for (j, &col) in self.lift_cols.iter().enumerate() {
                out.set(self.base.nrows() + r, col, qmat.get(r, j));
            }
        }
        out
    }
}
