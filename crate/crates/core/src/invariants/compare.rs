//! Side-by-side invariant comparison of two codes in the same ambient
//! space.
//!
//! Any invariant that differs proves the codes inequivalent; agreeing on
//! every computed invariant proves nothing, and the verdict says so. Rows
//! whose computation exceeds the budget are shown as skipped and never
//! count as a difference.

use super::{
    code_distance, extended_distance, generalized_radius, greedy_profile,
    maximality_degree,
};
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use itertools::Itertools;
use std::fmt;
use std::ops::RangeInclusive;

/// Which invariant families to compare. Dimension, minimum distance and
/// maximum weight are always included; they are single scans.
#[derive(Debug, Clone)]
pub struct CompareSelection {
    /// Code distances over the requested range.
    pub alpha: bool,
    /// Greedy code distances.
    pub greedy: bool,
    /// Generalized radii (requires equal dimensions to line up).
    pub radii: bool,
    /// Maximality degree.
    pub mu: bool,
    /// Subcode-supported weights.
    pub sld: bool,
    /// Also compare code distances of every scalar extension from level 2
    /// up to this one.
    pub ext_level: Option<usize>,
}

impl Default for CompareSelection {
    /// Everything except extensions.
    fn default() -> Self {
        CompareSelection {
            alpha: true,
            greedy: true,
            radii: true,
            mu: true,
            sld: true,
            ext_level: None,
        }
    }
}

/// One compared invariant, with both values rendered as text.
#[derive(Debug, Clone)]
pub struct CompareRow {
    /// Name of the invariant, e.g. `alpha_3` or `d_min`.
    pub invariant: String,
    pub left: String,
    pub right: String,
    /// True when both sides were computed and disagree.
    pub differs: bool,
}

/// What the comparison established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Some invariant differs, so no isometry can map one code onto the
    /// other.
    ProvablyInequivalent {
        /// Name of the first differing invariant.
        first_difference: String,
    },
    /// Every computed invariant agrees; the codes may or may not be
    /// equivalent.
    Indistinguishable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProvablyInequivalent { first_difference } => {
                write!(f, "provably inequivalent (first difference: {first_difference})")
            }
            Verdict::Indistinguishable => {
                write!(f, "indistinguishable by these invariants")
            }
        }
    }
}

/// Full comparison: the rows in display order and the verdict.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub rows: Vec<CompareRow>,
    pub verdict: Verdict,
}

/// Ok(Some) on success, Ok(None) when the computation hit a resource
/// limit, Err for real failures.
fn guard<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(
            Error::BudgetExceeded { .. }
            | Error::LevelSetOverflow { .. }
            | Error::Overflow(_),
        ) => Ok(None),
        Err(e) => Err(e),
    }
}

fn push_row<T: PartialEq, F: Fn(&T) -> String>(
    rows: &mut Vec<CompareRow>,
    name: &str,
    left: Option<T>,
    right: Option<T>,
    render: F,
) {
    let differs = matches!((&left, &right), (Some(a), Some(b)) if a != b);
    let show = |v: &Option<T>| match v {
        Some(x) => render(x),
        None => "skipped".to_string(),
    };
    rows.push(CompareRow {
        invariant: name.to_string(),
        left: show(&left),
        right: show(&right),
        differs,
    });
}

/// Compare two codes invariant by invariant. The `range` limits which
/// distance indices are compared (default the full 1..=N); `selection`
/// picks the invariant families.
pub fn compare_codes(
    a: &LinearCode,
    b: &LinearCode,
    range: Option<RangeInclusive<usize>>,
    selection: &CompareSelection,
    budget: &Budget,
    level_cap: usize,
) -> Result<ComparisonReport> {
    if a.ambient().shape_string() != b.ambient().shape_string()
        || a.field().q != b.field().q
    {
        return Err(Error::AmbientMismatch(format!(
            "cannot compare a code in {} over {} with one in {} over {}",
            a.ambient().shape_string(),
            a.field(),
            b.ambient().shape_string(),
            b.field()
        )));
    }
    let n = a.ambient().len();
    let range = range.unwrap_or(1..=n);
    let mut rows: Vec<CompareRow> = Vec::new();

    push_row(
        &mut rows,
        "k",
        Some(a.k()),
        Some(b.k()),
        usize::to_string,
    );
    push_row(
        &mut rows,
        "d_min",
        guard(a.min_distance(budget))?.map(|x| x.0),
        guard(b.min_distance(budget))?.map(|x| x.0),
        usize::to_string,
    );
    push_row(
        &mut rows,
        "max_weight",
        guard(a.max_weight(budget))?.map(|x| x.0),
        guard(b.max_weight(budget))?.map(|x| x.0),
        usize::to_string,
    );
    if selection.sld {
        push_row(
            &mut rows,
            "sld_set",
            guard(a.sld_set(budget))?,
            guard(b.sld_set(budget))?,
            |s| format!("{{{}}}", s.iter().join(", ")),
        );
    }
    if selection.alpha {
        for i in range.clone() {
            push_row(
                &mut rows,
                &format!("alpha_{i}"),
                guard(code_distance(a, i, budget))?.map(|e| e.value),
                guard(code_distance(b, i, budget))?.map(|e| e.value),
                usize::to_string,
            );
        }
    }
    if selection.greedy {
        push_row(
            &mut rows,
            "greedy",
            guard(greedy_profile(a, budget, level_cap))?.map(|p| p.values),
            guard(greedy_profile(b, budget, level_cap))?.map(|p| p.values),
            |v| format!("[{}]", v.iter().join(", ")),
        );
    }
    if selection.mu {
        let mu = |c: &LinearCode| -> Result<Option<String>> {
            match maximality_degree(c, budget) {
                Ok(r) => Ok(Some(r.mu.to_string())),
                Err(Error::NotApplicable(_)) => Ok(Some("n/a".to_string())),
                other => guard(other).map(|o| o.map(|r| r.mu.to_string())),
            }
        };
        push_row(&mut rows, "mu", mu(a)?, mu(b)?, String::clone);
    }
    if selection.radii && a.k() == b.k() {
        for i in 1..=(n - a.k()) {
            push_row(
                &mut rows,
                &format!("rho_{i}"),
                guard(generalized_radius(a, i, budget))?.map(|r| r.value),
                guard(generalized_radius(b, i, budget))?.map(|r| r.value),
                usize::to_string,
            );
        }
    }
    if let Some(level) = selection.ext_level {
        for ell in 2..=level {
            for i in range.clone() {
                push_row(
                    &mut rows,
                    &format!("alpha_{i}^{ell}"),
                    guard(extended_distance(a, ell, i, budget))?,
                    guard(extended_distance(b, ell, i, budget))?,
                    usize::to_string,
                );
            }
        }
    }

    let verdict = match rows.iter().find(|r| r.differs) {
        Some(row) => Verdict::ProvablyInequivalent {
            first_difference: row.invariant.clone(),
        },
        None => Verdict::Indistinguishable,
    };
    Ok(ComparisonReport { rows, verdict })
}
