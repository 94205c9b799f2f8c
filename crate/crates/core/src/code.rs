//! Linear codes: a generator matrix in canonical form sitting inside an
//! ambient metric space, with optional extension-field structure.
//!
//! A code is always stored through its reduced-echelon generator, so two
//! constructions of the same subspace compare equal. Codes in a matrix
//! ambient space may additionally carry an *extension view*: a generator
//! over F_{q^m} whose rows expand to m x n matrices over F_q by writing
//! each entry in the basis {1, g, .., g^{m-1}} (g the canonical generator
//! of the extension). The view either spans the code F_{q^m}-linearly
//! (every extension-scalar multiple of a codeword is a codeword) or merely
//! spans it over F_q; the flag records which, and duals preserve it.

use std::collections::BTreeSet;
use std::fmt;

use crate::ambient::{AmbientSpace, Metric};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldCtx};
use crate::matrix::Mat;
use crate::scan;

/// Writes extension-field elements as coordinate rows over the base field.
#[derive(Clone)]
struct Expander {
    base: Field,
    ext: Field,
    /// Extension degree m, so |ext| = q^m.
    degree: usize,
    /// Inverse of the change-of-basis matrix over the prime field: maps the
    /// prime-field digit vector of an extension element to its coordinates
    /// in the basis {g^i * b_j} (i < m, j < e, b_j the p-power basis of the
    /// base field), grouped so rows i*e..(i+1)*e give the base-field
    /// coordinate of g^i.
    coords: Mat,
}

impl Expander {
    fn new(base: &Field, ext: &Field) -> Result<Self> {
        let emb = Embedding::new(base, ext)?;
        let degree = (ext.e / base.e) as usize;
        let p = base.p as u64;
        let prime = FieldCtx::new(p, 1)?;
        let em = ext.e as usize;
        let e = base.e as usize;
        let g = ext.generator();
        // Column i*e + j holds the digit vector of g^i * phi(p^j-th basis
        // element of the base field).
        let mut fwd = vec![0u32; em * em];
        let mut gpow = 1u32;
        for i in 0..degree {
            for j in 0..e {
                let bj = base.from_digits(&{
                    let mut d = vec![0u32; e];
                    d[j] = 1;
                    d
                });
                let val = ext.mul(gpow, emb.apply(bj));
                let digits = ext.digits(val);
                for (r, &dr) in digits.iter().enumerate() {
                    fwd[r * em + (i * e + j)] = dr;
                }
            }
            gpow = ext.mul(gpow, g);
        }
        let fwd = Mat::new(prime, em, em, fwd)?;
        let coords = fwd.inverse()?;
        Ok(Expander {
            base: base.clone(),
            ext: ext.clone(),
            degree,
            coords,
        })
    }

    /// Coordinates of an extension element in the basis {1, g, .., g^{m-1}},
    /// as base-field elements.
    fn coords_of(&self, a: u32) -> Vec<u32> {
        let em = self.ext.e as usize;
        let e = self.base.e as usize;
        let digits = self.ext.digits(a);
        let prime = self.coords.field();
        let mut y = vec![0u32; em];
        for r in 0..em {
            let mut acc = 0u32;
            for (s, &ds) in digits.iter().enumerate() {
                acc = prime.add(acc, prime.mul(self.coords.get(r, s), ds));
            }
            y[r] = acc;
        }
        (0..self.degree)
            .map(|i| self.base.from_digits(&y[i * e..(i + 1) * e]))
            .collect()
    }

    /// Expand a length-n row over the extension to a flattened m x n matrix
    /// over the base field (row-major).
    fn expand_row(&self, row: &[u32]) -> Vec<u32> {
        let n = row.len();
        let m = self.degree;
        let mut out = vec![0u32; m * n];
        for (j, &c) in row.iter().enumerate() {
            for (i, &a) in self.coords_of(c).iter().enumerate() {
                out[i * n + j] = a;
            }
        }
        out
    }
}

/// Generator of a code over an extension field, kept alongside the
/// base-field form for codes in matrix ambient spaces.
#[derive(Clone)]
pub struct ExtView {
    ext_field: Field,
    degree: usize,
    rows: Mat,
    ext_linear: bool,
}

impl ExtView {
    /// The extension field the rows live over.
    pub fn field(&self) -> &Field {
        &self.ext_field
    }

    /// Extension degree m over the base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Generator rows over the extension field.
    pub fn rows(&self) -> &Mat {
        &self.rows
    }

    /// Whether the code is linear over the extension field, rather than
    /// only over the base field.
    pub fn is_ext_linear(&self) -> bool {
        self.ext_linear
    }
}

/// A linear code: the row space of a generator matrix, measured by the
/// weight of its ambient space.
#[derive(Clone)]
pub struct LinearCode {
    ambient: AmbientSpace,
    gen: Mat,
    pivots: Vec<usize>,
    ext: Option<ExtView>,
}

impl PartialEq for LinearCode {
    /// Codes are equal when they are the same subspace of the same ambient
    /// space; extension views are presentation, not identity.
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    /// Debug output is the file-format serialisation, which determines the
    /// code completely.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self, self.to_file_string())
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} over {}] k={}",
            self.ambient.shape_string(),
            self.field(),
            self.k(),
        )?;
        match &self.ext {
            Some(v) if v.ext_linear => write!(f, " (linear over {})", v.ext_field),
            Some(v) => write!(f, " (spanned over {})", v.ext_field),
            None => Ok(()),
        }
    }
}

impl LinearCode {
    /// Build a code from spanning rows over the ambient field. Rows are
    /// reduced to canonical echelon form; dependent rows are dropped. The
    /// zero code is rejected.
    pub fn from_rows(ambient: AmbientSpace, rows: &[Vec<u32>]) -> Result<LinearCode> {
        let mat = Mat::from_rows(ambient.field().clone(), rows)?;
        Self::from_mat(ambient, mat)
    }

    /// Build a code from a spanning matrix over the ambient field.
    pub fn from_mat(ambient: AmbientSpace, mat: Mat) -> Result<LinearCode> {
        if mat.ncols() != ambient.len() {
            return Err(Error::LengthMismatch {
                expected: ambient.len(),
                got: mat.ncols(),
            });
        }
        if mat.field() != ambient.field() {
            return Err(Error::AmbientMismatch(format!(
                "rows over {} cannot span a code over {}",
                mat.field(),
                ambient.field()
            )));
        }
        let (gen, pivots) = mat.rref_trimmed();
        if gen.nrows() == 0 {
            return Err(Error::NotApplicable(
                "the zero code has no distance invariants".into(),
            ));
        }
        Ok(LinearCode {
            ambient,
            gen,
            pivots,
            ext: None,
        })
    }

    /// Build a code in a rank-metric ambient space from generator rows over
    /// an extension field F_{q^m}. Each extension row of length n expands to
    /// an m x n matrix over the base field. `ext_linear` records whether the
    /// code is closed under extension-field scalars; when it is, the rows
    /// are canonicalised by echelon reduction over the extension (which
    /// preserves the expanded code), otherwise they are kept verbatim
    /// (reduction could change the base-field span).
    pub fn from_ext_rows(
        base: Field,
        degree: usize,
        rows: &[Vec<u32>],
        ext_linear: bool,
    ) -> Result<LinearCode> {
        if degree == 0 {
            return Err(Error::DegreeTooLarge(0));
        }
        let ext = FieldCtx::new(base.p as u64, base.e as u64 * degree as u64)?;
        let mat = Mat::from_rows(ext.clone(), rows)?;
        Self::from_ext_mat(base, degree, mat, ext_linear)
    }

    fn from_ext_mat(
        base: Field,
        degree: usize,
        mat: Mat,
        ext_linear: bool,
    ) -> Result<LinearCode> {
        let ext = mat.field().clone();
        let n = mat.ncols();
        if n == 0 || mat.nrows() == 0 {
            return Err(Error::NotApplicable(
                "the zero code has no distance invariants".into(),
            ));
        }
        let expander = Expander::new(&base, &ext)?;
        let rows = if ext_linear {
            let (r, _) = mat.rref_trimmed();
            if r.nrows() == 0 {
                return Err(Error::NotApplicable(
                    "the zero code has no distance invariants".into(),
                ));
            }
            r
        } else {
            mat
        };
        let ambient = AmbientSpace::rank(base.clone(), degree, n)?;
        let mut expanded: Vec<Vec<u32>> = Vec::new();
        for r in 0..rows.nrows() {
            let row = rows.row(r).to_vec();
            if ext_linear {
                // Scalar multiples g^t * row expand to an F_q-basis of the
                // F_{q^m}-line through the row.
                let g = ext.generator();
                let mut scaled = row.clone();
                for _ in 0..degree {
                    expanded.push(expander.expand_row(&scaled));
                    for c in scaled.iter_mut() {
                        *c = ext.mul(*c, g);
                    }
                }
            } else {
                expanded.push(expander.expand_row(&row));
            }
        }
        let mat = Mat::from_rows(base, &expanded)?;
        let (gen, pivots) = mat.rref_trimmed();
        if gen.nrows() == 0 {
            return Err(Error::NotApplicable(
                "the zero code has no distance invariants".into(),
            ));
        }
        Ok(LinearCode {
            ambient,
            gen,
            pivots,
            ext: Some(ExtView {
                ext_field: ext,
                degree,
                rows,
                ext_linear,
            }),
        })
    }

    /// The ambient metric space.
    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    /// The base field.
    pub fn field(&self) -> &Field {
        self.ambient.field()
    }

    /// Dimension over the base field.
    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    /// Ambient length (number of base-field coordinates).
    pub fn len(&self) -> usize {
        self.ambient.len()
    }

    /// Codes are never empty; this mirrors the standard container API.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the code is the whole ambient space.
    pub fn is_full_space(&self) -> bool {
        self.k() == self.len()
    }

    /// The canonical (reduced echelon) generator matrix.
    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    /// Pivot columns of the canonical generator.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The extension-field view, when the code was built from one.
    pub fn ext_view(&self) -> Option<&ExtView> {
        self.ext.as_ref()
    }

    /// Weight of a word in the ambient metric.
    pub fn weight(&self, v: &[u32]) -> usize {
        self.ambient.weight(v)
    }

    /// Whether a word belongs to the code.
    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.len() && self.gen.contains_vector(&self.pivots, v)
    }

    /// Number of weight evaluations a full codeword scan costs.
    pub fn scan_cost(&self) -> u128 {
        scan::rep_count(self.k(), self.field().q as u64)
    }

    /// Minimum distance and a word attaining it.
    pub fn min_distance(&self, budget: &Budget) -> Result<(usize, Vec<u32>)> {
        budget.debit_u128(self.scan_cost())?;
        let (d, _, w) = scan::min_weight_scan(&self.ambient, &self.gen);
        Ok((d, w))
    }

    /// Maximum weight of a codeword and a word attaining it.
    pub fn max_weight(&self, budget: &Budget) -> Result<(usize, Vec<u32>)> {
        budget.debit_u128(self.scan_cost())?;
        let (d, _, w) = scan::max_weight_scan(&self.ambient, &self.gen);
        Ok((d, w))
    }

    /// The set of weights attained by nonzero codewords. For the Hamming
    /// metric these are exactly the support cardinalities of strongly
    /// linearly dependent subsets of the coordinate functionals, hence the
    /// name.
    pub fn sld_set(&self, budget: &Budget) -> Result<BTreeSet<usize>> {
        budget.debit_u128(self.scan_cost())?;
        Ok(scan::weight_set_scan(&self.ambient, &self.gen))
    }

    /// The dual code. For Hamming codes without an extension view this is
    /// the kernel of the generator under the standard inner product. For
    /// codes carrying an extension view the dual is taken over the
    /// extension field and expanded with the same linearity flag. A matrix
    /// code without an extension view has no canonical dual here.
    ///
    /// Duality is an involution for Hamming codes and for extension-linear
    /// views. For a merely spanned view the kernel is a subspace over the
    /// extension field, so taking duals twice lands on the canonical basis
    /// of the extension-field closure of the original rows, which can be a
    /// different base-field span.
    pub fn dual(&self) -> Result<LinearCode> {
        if let Some(view) = &self.ext {
            let ker = view.rows.kernel();
            if ker.nrows() == 0 {
                return Err(Error::NotApplicable(
                    "the dual of the full space is the zero code".into(),
                ));
            }
            let base = self.field().clone();
            return Self::from_ext_mat(base, view.degree, ker, view.ext_linear);
        }
        match self.ambient.metric() {
            Metric::Hamming => {
                if self.is_full_space() {
                    return Err(Error::NotApplicable(
                        "the dual of the full space is the zero code".into(),
                    ));
                }
                let ker = self.gen.kernel();
                LinearCode::from_mat(self.ambient.clone(), ker)
            }
            m => Err(Error::UnsupportedDual(format!(
                "duality in the {m} metric needs an extension-field view"
            ))),
        }
    }

    /// A parity-check matrix (Hamming metric only). The full space gets a
    /// single zero row, so that every length-n word passes the check.
    pub fn parity_check(&self) -> Result<Mat> {
        if self.ambient.metric() != Metric::Hamming {
            return Err(Error::UnsupportedDual(format!(
                "parity checks apply to the Hamming metric, not {}",
                self.ambient.metric()
            )));
        }
        if self.is_full_space() {
            return Ok(Mat::zeros(self.field().clone(), 1, self.len()));
        }
        Ok(self.gen.kernel())
    }

    /// Puncture: delete one coordinate (Hamming metric only).
    pub fn puncture(&self, position: usize) -> Result<LinearCode> {
        self.require_hamming("puncturing")?;
        if self.len() < 2 {
            return Err(Error::NotApplicable(
                "puncturing a length-1 code leaves no coordinates".into(),
            ));
        }
        let rows = self.gen.delete_column(position)?;
        let ambient = AmbientSpace::hamming(self.field().clone(), self.len() - 1)?;
        LinearCode::from_mat(ambient, rows)
    }

    /// Shorten: keep the codewords vanishing at one coordinate, then delete
    /// it (Hamming metric only).
    pub fn shorten(&self, position: usize) -> Result<LinearCode> {
        self.require_hamming("shortening")?;
        if position >= self.len() {
            return Err(Error::PositionOutOfRange {
                position,
                len: self.len(),
            });
        }
        if self.len() < 2 {
            return Err(Error::NotApplicable(
                "shortening a length-1 code leaves no coordinates".into(),
            ));
        }
        // Coefficient vectors x with (x . column) = 0 give the subcode
        // vanishing at the position.
        let col: Vec<u32> = (0..self.k()).map(|r| self.gen.get(r, position)).collect();
        let col_mat = Mat::new(self.field().clone(), 1, self.k(), col)?;
        let coeffs = col_mat.kernel();
        if coeffs.nrows() == 0 {
            return Err(Error::NotApplicable(
                "shortening removed every nonzero codeword".into(),
            ));
        }
        let sub = coeffs.mul(&self.gen)?;
        let rows = sub.delete_column(position)?;
        let ambient = AmbientSpace::hamming(self.field().clone(), self.len() - 1)?;
        LinearCode::from_mat(ambient, rows)
    }

    fn require_hamming(&self, what: &str) -> Result<()> {
        if self.ambient.metric() != Metric::Hamming {
            return Err(Error::NotApplicable(format!(
                "{what} is defined coordinate-wise, which needs the Hamming metric"
            )));
        }
        Ok(())
    }

    /// Extend scalars: the F_{q^l}-span of the same generator rows, in the
    /// ambient space of the same shape over F_{q^l}. Any extension view is
    /// dropped; the result is plainly linear over the larger field.
    pub fn extend_scalars(&self, ell: usize) -> Result<LinearCode> {
        if ell == 0 {
            return Err(Error::DegreeTooLarge(0));
        }
        if ell == 1 {
            return Ok(self.clone());
        }
        let base = self.field();
        let big = FieldCtx::new(base.p as u64, base.e as u64 * ell as u64)?;
        let emb = Embedding::new(base, &big)?;
        let ambient = self.ambient.with_field(big.clone())?;
        let data: Vec<u32> = self.gen.data().iter().map(|&a| emb.apply(a)).collect();
        let mat = Mat::new(big, self.k(), self.len(), data)?;
        LinearCode::from_mat(ambient, mat)
    }

    /// Serialise to the plain-text code format (see the crate docs).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("metric {}\n", self.ambient.shape_string()));
        out.push_str(&format!("field {} {}\n", self.field().p, self.field().e));
        let rows: &Mat = match &self.ext {
            Some(view) => {
                let kw = if view.ext_linear { "linear" } else { "spanned" };
                out.push_str(&format!("{kw} extension {}\n", view.degree));
                &view.rows
            }
            None => &self.gen,
        };
        out.push_str("generator\n");
        for r in 0..rows.nrows() {
            let line: Vec<String> = rows.row(r).iter().map(|a| a.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the plain-text code format. Lines starting with `#` and blank
    /// lines are ignored; errors carry 1-based line numbers of the input.
    pub fn parse_file(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (ln, metric_line) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 0, reason: "empty input".into() })?;
        let mtoks: Vec<&str> = metric_line.split_whitespace().collect();
        if mtoks.first() != Some(&"metric") || mtoks.len() < 2 {
            return Err(Error::Parse {
                line: ln,
                reason: "expected `metric hamming n`, `metric rank m n`, or `metric sumrank m1 n1 ...`".into(),
            });
        }
        let nums = |toks: &[&str], ln: usize| -> Result<Vec<usize>> {
            toks.iter()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: ln,
                        reason: format!("`{t}` is not a nonnegative integer"),
                    })
                })
                .collect()
        };
        enum Shape {
            Hamming(usize),
            Rank(usize, usize),
            SumRank(Vec<(usize, usize)>),
        }
        let shape = match mtoks[1] {
            "hamming" => {
                let v = nums(&mtoks[2..], ln)?;
                if v.len() != 1 {
                    return Err(Error::Parse {
                        line: ln,
                        reason: "`metric hamming` takes exactly one length".into(),
                    });
                }
                Shape::Hamming(v[0])
            }
            "rank" => {
                let v = nums(&mtoks[2..], ln)?;
                if v.len() != 2 {
                    return Err(Error::Parse {
                        line: ln,
                        reason: "`metric rank` takes two dimensions m n".into(),
                    });
                }
                Shape::Rank(v[0], v[1])
            }
            "sumrank" => {
                let v = nums(&mtoks[2..], ln)?;
                if v.is_empty() || v.len() % 2 != 0 {
                    return Err(Error::Parse {
                        line: ln,
                        reason: "`metric sumrank` takes pairs m1 n1 m2 n2 ...".into(),
                    });
                }
                Shape::SumRank(v.chunks(2).map(|c| (c[0], c[1])).collect())
            }
            other => {
                return Err(Error::Parse {
                    line: ln,
                    reason: format!("unknown metric `{other}`"),
                })
            }
        };

        let (ln, field_line) = lines.next().ok_or_else(|| Error::Parse {
            line: ln,
            reason: "missing `field p e` line".into(),
        })?;
        let ftoks: Vec<&str> = field_line.split_whitespace().collect();
        if ftoks.first() != Some(&"field") || ftoks.len() != 3 {
            return Err(Error::Parse {
                line: ln,
                reason: "expected `field p e`".into(),
            });
        }
        let fv = nums(&ftoks[1..], ln)?;
        let field = FieldCtx::new(fv[0] as u64, fv[1] as u64)?;

        let (mut ln, mut next) = lines.next().ok_or_else(|| Error::Parse {
            line: ln,
            reason: "missing `generator` line".into(),
        })?;
        let mut extension: Option<(usize, bool)> = None;
        let etoks: Vec<&str> = next.split_whitespace().collect();
        if etoks.len() == 3 && etoks[1] == "extension" {
            let ext_linear = match etoks[0] {
                "linear" => true,
                "spanned" => false,
                other => {
                    return Err(Error::Parse {
                        line: ln,
                        reason: format!(
                            "extension kind must be `linear` or `spanned`, got `{other}`"
                        ),
                    })
                }
            };
            let deg = nums(&etoks[2..], ln)?[0];
            extension = Some((deg, ext_linear));
            let (l2, n2) = lines.next().ok_or_else(|| Error::Parse {
                line: ln,
                reason: "missing `generator` line".into(),
            })?;
            ln = l2;
            next = n2;
        }
        if next != "generator" {
            return Err(Error::Parse {
                line: ln,
                reason: format!("expected `generator`, got `{next}`"),
            });
        }

        let row_field = match &extension {
            Some((deg, _)) => FieldCtx::new(field.p as u64, field.e as u64 * *deg as u64)?,
            None => field.clone(),
        };
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut width: Option<usize> = None;
        for (ln, line) in lines {
            let mut row = Vec::new();
            for t in line.split_whitespace() {
                let v: u64 = t.parse().map_err(|_| Error::Parse {
                    line: ln,
                    reason: format!("`{t}` is not a field element"),
                })?;
                if v >= row_field.q as u64 {
                    return Err(Error::Parse {
                        line: ln,
                        reason: format!("entry {v} is out of range for {row_field}"),
                    });
                }
                row.push(v as u32);
            }
            if let Some(w) = width {
                if row.len() != w {
                    return Err(Error::Parse {
                        line: ln,
                        reason: format!("row has {} entries, expected {w}", row.len()),
                    });
                }
            } else {
                width = Some(row.len());
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 0,
                reason: "no generator rows".into(),
            });
        }

        match (shape, extension) {
            (Shape::Rank(m, n), Some((deg, ext_linear))) => {
                if deg != m {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!(
                            "extension degree {deg} must match the rank row count {m}"
                        ),
                    });
                }
                if width != Some(n) {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!(
                            "extension rows have {} entries, expected column count {n}",
                            width.unwrap_or(0)
                        ),
                    });
                }
                LinearCode::from_ext_rows(field, deg, &rows, ext_linear)
            }
            (_, Some(_)) => Err(Error::Parse {
                line: 0,
                reason: "extension views require a rank-metric ambient space".into(),
            }),
            (Shape::Hamming(n), None) => {
                let ambient = AmbientSpace::hamming(field, n)?;
                LinearCode::from_rows(ambient, &rows)
            }
            (Shape::Rank(m, n), None) => {
                let ambient = AmbientSpace::rank(field, m, n)?;
                LinearCode::from_rows(ambient, &rows)
            }
            (Shape::SumRank(blocks), None) => {
                let ambient = AmbientSpace::sum_rank(field, blocks)?;
                LinearCode::from_rows(ambient, &rows)
            }
        }
    }
}

/// Minimum distance from a parity-check matrix: the smallest s such that
/// some s columns of `h` are linearly dependent. Returns
/// [`Error::NoDependentSubset`] when all columns are independent (the code
/// is the full space). Each subset rank test debits one budget unit.
pub fn min_distance_via_parity(h: &Mat, budget: &Budget) -> Result<usize> {
    use itertools::Itertools;
    let n = h.ncols();
    for s in 1..=n {
        for cols in (0..n).combinations(s) {
            budget.debit(1)?;
            let sub = h.select_columns(&cols);
            if sub.rank() < s {
                return Ok(s);
            }
        }
    }
    Err(Error::NoDependentSubset)
}

/// Whether the given vectors admit a dependency with every coefficient
/// nonzero (strong linear dependence). Scans the (q-1)^t sign patterns,
/// debiting one unit each, and stops at the first witness.
pub fn is_sld(field: &Field, vectors: &[Vec<u32>], budget: &Budget) -> Result<bool> {
    if vectors.is_empty() {
        return Ok(false);
    }
    let n = vectors[0].len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: vectors.iter().map(|v| v.len()).find(|&l| l != n).unwrap_or(n),
        });
    }
    let t = vectors.len();
    let q = field.q as u64;
    // Coefficients range over the q-1 nonzero elements; fix the first
    // coefficient to 1 (scaling a dependency keeps it strong).
    let mut pattern = vec![1u32; t];
    let mut sum = vec![0u32; n];
    let recompute = |pattern: &[u32], sum: &mut Vec<u32>| {
        for x in sum.iter_mut() {
            *x = 0;
        }
        for (lam, v) in pattern.iter().zip(vectors) {
            for (x, &vj) in sum.iter_mut().zip(v) {
                *x = field.add(*x, field.mul(*lam, vj));
            }
        }
    };
    let mut count: u128 = 1;
    for _ in 1..t {
        count *= q as u128 - 1;
    }
    budget.preflight(count)?;
    recompute(&pattern, &mut sum);
    loop {
        budget.debit(1)?;
        if sum.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        // Advance positions 1..t over nonzero elements, rightmost fastest.
        let mut j = t;
        loop {
            if j <= 1 {
                return Ok(false);
            }
            j -= 1;
            let old = pattern[j];
            let new = if old as u64 + 1 < q { old + 1 } else { 1 };
            pattern[j] = new;
            let delta = field.sub(new, old);
            for (x, &vj) in sum.iter_mut().zip(&vectors[j]) {
                *x = field.add(*x, field.mul(delta, vj));
            }
            if new != 1 {
                break;
            }
        }
    }
}

/// Cardinality of the smallest linearly dependent subset of the vectors,
/// or [`Error::NoDependentSubset`] when they are independent.
pub fn min_ld_cardinality(
    field: &Field,
    vectors: &[Vec<u32>],
    budget: &Budget,
) -> Result<usize> {
    use itertools::Itertools;
    let t = vectors.len();
    for s in 1..=t {
        for subset in (0..t).combinations(s) {
            budget.debit(1)?;
            let rows: Vec<Vec<u32>> = subset.iter().map(|&i| vectors[i].clone()).collect();
            let mat = Mat::from_rows(field.clone(), &rows)?;
            if mat.rank() < s {
                return Ok(s);
            }
        }
    }
    Err(Error::NoDependentSubset)
}

/// Cardinality of the smallest strongly linearly dependent subset, or
/// [`Error::NoDependentSubset`] when no subset is. Equals
/// [`min_ld_cardinality`] on every input: a dependent subset of minimal
/// size cannot have a vanishing coefficient, since dropping that vector
/// would give a smaller dependent subset.
pub fn min_sld_cardinality(
    field: &Field,
    vectors: &[Vec<u32>],
    budget: &Budget,
) -> Result<usize> {
    use itertools::Itertools;
    let t = vectors.len();
    for s in 1..=t {
        for subset in (0..t).combinations(s) {
            let sel: Vec<Vec<u32>> = subset.iter().map(|&i| vectors[i].clone()).collect();
            if is_sld(field, &sel, budget)? {
                return Ok(s);
            }
        }
    }
    Err(Error::NoDependentSubset)
}
