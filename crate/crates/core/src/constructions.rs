//! Named code families and a registry of small codes used throughout the
//! test corpus.
//!
//! Every constructor is deterministic: evaluation points default to
//! ascending canonical integer order and basis choices are fixed, so the
//! same call always yields byte-identical generator matrices.

use crate::ambient::AmbientSpace;
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldCtx};
use crate::matrix::Mat;
use crate::scan;

/// Evaluate a polynomial (coefficients in ascending degree) at a point.
fn eval_poly(field: &Field, coeffs: &[u32], a: u32) -> u32 {
    let mut acc = 0u32;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, a), c);
    }
    acc
}

fn check_points(field: &Field, points: &[u32]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for &a in points {
        if !seen.insert(a) {
            return Err(Error::DuplicatePoints);
        }
        if a >= field.q {
            return Err(Error::IndexOutOfRange {
                index: a as usize,
                valid: format!("elements of {field}"),
            });
        }
    }
    Ok(())
}

/// The Reed-Solomon code RS(A, k): evaluations of all polynomials of degree
/// below k at the points A. `points: None` means all field elements in
/// ascending canonical order.
pub fn reed_solomon(field: &Field, k: usize, points: Option<&[u32]>) -> Result<LinearCode> {
    let default_points: Vec<u32>;
    let points = match points {
        Some(p) => p,
        None => {
            default_points = field.elements().collect();
            &default_points
        }
    };
    check_points(field, points)?;
    let n = points.len();
    if k == 0 || k > n {
        return Err(Error::KTooLarge { k, max: n });
    }
    let mut rows = Vec::with_capacity(k);
    let mut mono = vec![0u32; k];
    for i in 0..k {
        mono.clear();
        mono.resize(i, 0);
        mono.push(1);
        rows.push(points.iter().map(|&a| eval_poly(field, &mono, a)).collect());
    }
    let ambient = AmbientSpace::hamming(field.clone(), n)?;
    LinearCode::from_rows(ambient, &rows)
}

/// An evaluation code: the row space of the vectors (f(a_1), .., f(a_n))
/// for the given polynomials (coefficient vectors, ascending degree). The
/// polynomials must be independent as functions on the points.
pub fn evaluation_code(
    field: &Field,
    points: &[u32],
    polys: &[Vec<u32>],
) -> Result<LinearCode> {
    check_points(field, points)?;
    for p in polys {
        if p.len() > field.q as usize {
            return Err(Error::DegreeTooLarge(p.len() as u64 - 1));
        }
    }
    let rows: Vec<Vec<u32>> = polys
        .iter()
        .map(|p| points.iter().map(|&a| eval_poly(field, p, a)).collect())
        .collect();
    let mat = Mat::from_rows(field.clone(), &rows)?;
    if mat.rank() < polys.len() {
        return Err(Error::DependentPolynomials);
    }
    let ambient = AmbientSpace::hamming(field.clone(), points.len())?;
    LinearCode::from_rows(ambient, &rows)
}

/// The Gabidulin code over F_{q^m} (q the prime subfield of `ext`): rows
/// are q-power evaluations (a_j^{q^i}) for i below k. Points default to
/// {1, g, .., g^{n-1}} and must be F_q-independent; requires m >= n >= k.
/// The result carries an extension-linear view in the rank metric.
pub fn gabidulin(
    ext: &Field,
    n: usize,
    k: usize,
    points: Option<&[u32]>,
) -> Result<LinearCode> {
    let m = ext.e as usize;
    if !(k >= 1 && k <= n && n <= m) {
        return Err(Error::DimensionOrder(format!(
            "Gabidulin codes need m >= n >= k >= 1, got m={m} n={n} k={k}"
        )));
    }
    let default_points: Vec<u32>;
    let points = match points {
        Some(p) => {
            if p.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
            p
        }
        None => {
            let g = ext.generator();
            let mut acc = 1u32;
            default_points = (0..n)
                .map(|_| {
                    let v = acc;
                    acc = ext.mul(acc, g);
                    v
                })
                .collect();
            &default_points
        }
    };
    check_points(ext, points)?;
    // Independence over the prime field: the canonical digits of an element
    // are its coordinates in the power basis of the Conway generator.
    let digit_rows: Vec<Vec<u32>> = points.iter().map(|&a| ext.digits(a)).collect();
    let prime = FieldCtx::new(ext.p as u64, 1)?;
    if Mat::from_rows(prime, &digit_rows)?.rank() < n {
        return Err(Error::DependentPoints);
    }
    let q = ext.p as u64;
    let mut rows = Vec::with_capacity(k);
    let mut current: Vec<u32> = points.to_vec();
    for _ in 0..k {
        rows.push(current.clone());
        for c in current.iter_mut() {
            *c = ext.pow(*c, q);
        }
    }
    let base = FieldCtx::new(ext.p as u64, 1)?;
    LinearCode::from_ext_rows(base, m, &rows, true)
}

/// The q-ary simplex code of dimension k: generator columns run over the
/// projective representatives of F_q^k in canonical scan order. Debits one
/// budget unit per column.
pub fn simplex(field: &Field, k: usize, budget: &Budget) -> Result<LinearCode> {
    if k == 0 {
        return Err(Error::KTooLarge { k, max: 0 });
    }
    let n128 = scan::rep_count(k, field.q as u64);
    budget.debit_u128(n128)?;
    let n = n128 as usize;
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    let id = Mat::identity(field.clone(), k);
    scan::visit_all(&id, |_, w| cols.push(w.to_vec()));
    let mut rows = vec![vec![0u32; n]; k];
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            rows[i][j] = x;
        }
    }
    let ambient = AmbientSpace::hamming(field.clone(), n)?;
    LinearCode::from_rows(ambient, &rows)
}

/// The binary even-weight code of length n: the kernel of the all-ones
/// parity check.
pub fn even_weight(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::NotApplicable(
            "even-weight codes need length at least 2".into(),
        ));
    }
    let f2 = FieldCtx::new(2, 1)?;
    let ones = Mat::new(f2.clone(), 1, n, vec![1; n])?;
    let ambient = AmbientSpace::hamming(f2, n)?;
    LinearCode::from_mat(ambient, ones.kernel())
}

/// The rank-metric Hadamard code H_{m,k,q}: a [mk, k, m] code whose k x mk
/// generator over F_{q^m} has columns forming an F_q-basis of F_{q^m}^k.
/// Row s carries (1, g, .., g^{m-1}) in its s-th block of m columns. Every
/// nonzero codeword has rank weight exactly m. Debits one budget unit per
/// generator entry.
pub fn hadamard_rank(base: &Field, m: usize, k: usize, budget: &Budget) -> Result<LinearCode> {
    if m == 0 || k == 0 {
        return Err(Error::DimensionOrder(format!(
            "Hadamard codes need m, k >= 1, got m={m} k={k}"
        )));
    }
    let ext = FieldCtx::new(base.p as u64, base.e as u64 * m as u64)?;
    budget.debit_u128((m * k) as u128 * k as u128)?;
    let g = ext.generator();
    let mut rows = vec![vec![0u32; m * k]; k];
    for (s, row) in rows.iter_mut().enumerate() {
        let mut acc = 1u32;
        for t in 0..m {
            row[s * m + t] = acc;
            acc = ext.mul(acc, g);
        }
    }
    LinearCode::from_ext_rows(base.clone(), m, &rows, false)
}

/// Names accepted by [`builtin`], in canonical order.
pub const BUILTIN_NAMES: &[&str] = &[
    "BR17-C1",
    "F4-C1",
    "F4-C2",
    "duality-C1",
    "duality-C2",
    "ternary-422",
    "twisted-RS-9-4",
];

/// A registry of small named codes used across the test corpus, stored
/// verbatim so their generator matrices are reproducible byte-for-byte.
pub fn builtin(name: &str) -> Result<LinearCode> {
    let f2 = || FieldCtx::new(2, 1);
    match name {
        // Four 4x4 binary matrices, flattened row-major; an F_2-linear
        // rank-metric code of dimension 4 that is maximum rank distance
        // without being extension-linear.
        "BR17-C1" => {
            let f = f2()?;
            let ambient = AmbientSpace::rank(f.clone(), 4, 4)?;
            LinearCode::from_rows(
                ambient,
                &[
                    vec![1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0],
                    vec![0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0],
                    vec![0, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1],
                    vec![0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1],
                ],
            )
        }
        // The F_4 duality pair: F_2-spans inside F_4^4, written over
        // F_4 = F_2[g] with g = 2, g^2 = 3.
        "F4-C1" => LinearCode::from_ext_rows(f2()?, 2, &[vec![1, 2, 0, 0], vec![0, 1, 3, 0]], false),
        "F4-C2" => LinearCode::from_ext_rows(f2()?, 2, &[vec![1, 2, 0, 0], vec![0, 0, 1, 2]], false),
        // Two binary [5, 2] codes with the same distance profile whose
        // duals differ.
        "duality-C1" => {
            let f = f2()?;
            let ambient = AmbientSpace::hamming(f, 5)?;
            LinearCode::from_rows(ambient, &[vec![1, 1, 1, 1, 0], vec![0, 0, 0, 1, 1]])
        }
        "duality-C2" => {
            let f = f2()?;
            let ambient = AmbientSpace::hamming(f, 5)?;
            LinearCode::from_rows(ambient, &[vec![1, 1, 1, 1, 0], vec![0, 0, 1, 1, 0]])
        }
        // A [4, 3, 2] ternary code whose distance profile drops early.
        "ternary-422" => {
            let f = FieldCtx::new(3, 1)?;
            let ambient = AmbientSpace::hamming(f, 4)?;
            LinearCode::from_rows(
                ambient,
                &[vec![1, 1, 1, 0], vec![0, 1, 2, 0], vec![0, 0, 1, 1]],
            )
        }
        // Evaluations of <1, x, x^2 - a*x^6, x^3> at all of F_9, a the
        // canonical generator: MDS like RS(F_9, 4) but with a different
        // distance profile.
        "twisted-RS-9-4" => {
            let f9 = FieldCtx::new(3, 2)?;
            let a = f9.generator();
            let minus_a = f9.neg(a);
            let points: Vec<u32> = f9.elements().collect();
            evaluation_code(
                &f9,
                &points,
                &[
                    vec![1],
                    vec![0, 1],
                    vec![0, 0, 1, 0, 0, 0, minus_a],
                    vec![0, 0, 0, 1],
                ],
            )
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}
