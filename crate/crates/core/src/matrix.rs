//! Dense matrices and Gaussian elimination over the fields of [`crate::field`].
//!
//! Entries are canonical integers (see the field module). Matrices are
//! row-major. The reduced row echelon form produced here is the canonical
//! representative of a row space: pivots are 1, pivot columns are cleared
//! above and below, and zero rows are kept at the bottom (most operations
//! that care about row spaces use [`Mat::rref_trimmed`], which drops them).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense matrix over a finite field.
#[derive(Clone)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Mat {}

impl Mat {
    /// Build a matrix from row-major data. Checks entry ranges.
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.q) {
            return Err(Error::Parse {
                line: 0,
                reason: format!("entry {bad} is not an element of {field}"),
            });
        }
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Build from a list of equal-length rows.
    pub fn from_rows(field: Field, rows: &[Vec<u32>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let data = rows.iter().flatten().copied().collect();
        Mat::new(field, rows.len(), cols, data)
    }

    /// The all-zero matrix.
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The field the entries live in.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry (r, c).
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    /// Set entry (r, c).
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.q);
        self.data[r * self.cols + c] = v;
    }

    /// Row r as a slice.
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Iterator over rows.
    pub fn rows_iter(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.cols)
    }

    /// Flat row-major data.
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        if self.field != other.field {
            return Err(Error::AmbientMismatch(format!(
                "cannot stack a matrix over {} onto one over {}",
                other.field, self.field
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat::new(self.field.clone(), self.rows + other.rows, self.cols, data)
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the pivot column indices in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| self.get(r, pc) != 0) else {
                continue;
            };
            self.data.swap_chunks(pr, sel, self.cols);
            let lead = self.get(pr, pc);
            if lead != 1 {
                let inv = f.inv(lead).expect("pivot is nonzero");
                for c in pc..self.cols {
                    let v = self.get(pr, c);
                    self.set(pr, c, f.mul(v, inv));
                }
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, pc);
                if factor == 0 {
                    continue;
                }
                for c in pc..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(pr, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    /// Reduced row echelon form plus pivot columns (zero rows kept).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    /// This is the canonical representative of the row space.
    pub fn rref_trimmed(&self) -> (Mat, Vec<usize>) {
        let (mut m, pivots) = self.rref();
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        (m, pivots)
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel {x : M x = 0}, one row per basis
    /// vector, in reduced row echelon form. The matrix has ncols() columns
    /// and (ncols - rank) rows.
    pub fn kernel(&self) -> Mat {
        let f = self.field.clone();
        let (r, pivots) = self.rref_trimmed();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u32; n];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(ri, fc));
            }
            rows.push(v);
        }
        let mut out = Mat::from_rows(f, &rows).expect("kernel rows are well-formed");
        out.rref_in_place();
        out
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Mat::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: x * M, where x has nrows() entries.
    pub fn left_mul_vec(&self, x: &[u32]) -> Vec<u32> {
        debug_assert_eq!(x.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            let row = self.row(r);
            for (c, &m) in row.iter().enumerate() {
                if m != 0 {
                    out[c] = f.add(out[c], f.mul(xr, m));
                }
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Keep only the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field.clone(), self.rows, cols.len());
        for r in 0..self.rows {
            for (i, &c) in cols.iter().enumerate() {
                out.set(r, i, self.get(r, c));
            }
        }
        out
    }

    /// Delete one column.
    pub fn delete_column(&self, col: usize) -> Result<Mat> {
        if col >= self.cols {
            return Err(Error::PositionOutOfRange {
                position: col,
                len: self.cols,
            });
        }
        let keep: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        Ok(self.select_columns(&keep))
    }

    /// Inverse of a square matrix. Fails when singular.
    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field.clone(), n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NotInvertible);
        }
        let mut out = Mat::zeros(self.field.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c));
            }
        }
        Ok(out)
    }

    /// Reduce a vector against this matrix, assumed to be in reduced row
    /// echelon form with the given pivot columns. Returns the residue.
    pub fn reduce_vector(&self, pivots: &[usize], v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let mut out = v.to_vec();
        for (r, &pc) in pivots.iter().enumerate() {
            let factor = out[pc];
            if factor == 0 {
                continue;
            }
            let row = self.row(r);
            for (c, &m) in row.iter().enumerate() {
                if m != 0 {
                    out[c] = f.sub(out[c], f.mul(factor, m));
                }
            }
        }
        out
    }

    /// True when the vector lies in the row space. `pivots` must be the
    /// pivot columns of this matrix, which must be in reduced row echelon
    /// form.
    pub fn contains_vector(&self, pivots: &[usize], v: &[u32]) -> bool {
        self.reduce_vector(pivots, v).iter().all(|&x| x == 0)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u32> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.split_at_mut(hi * width);
        head[lo * width..(lo + 1) * width].swap_with_slice(&mut tail[..width]);
    }
}
