//! Report model shared by the subcommands: code identity, invariant
//! results with witnesses and per-index skip reasons, and the budget
//! ledger. Rendered as tab-separated rows for terminals or versioned
//! JSON for machines.
//!
//! Every collection here is an ordered `Vec` built in a fixed order, so
//! identical inputs produce byte-identical output no matter how many
//! worker threads the computation used.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

/// Schema version stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Marker attached to every asymptotic result: a finite sweep over
/// extension levels can only certify a lower bound, never the supremum.
pub const UNCERTIFIED: &str = "uncertified";

/// Identity of the code a report is about.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeIdentity {
    /// Path as given on the command line.
    pub file: String,
    /// SHA-256 of the file bytes, lowercase hex.
    pub sha256: String,
    /// Field characteristic.
    pub p: u64,
    /// Extension degree over the prime field.
    pub e: u64,
    /// Field order p^e.
    pub q: u64,
    /// Metric and shape, e.g. `hamming 5` or `rank 4 4`.
    pub metric: String,
    /// Ambient dimension: the largest possible supercode dimension.
    pub n: usize,
    /// Code dimension.
    pub k: usize,
}

/// Extremality flags; `None` means the flag does not apply to the metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlagSummary {
    pub is_mds: Option<bool>,
    pub is_mrd: Option<bool>,
    pub is_qmrd: Option<bool>,
    pub is_msrd: Option<bool>,
}

/// One computed invariant, or one explicitly recorded skip.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InvariantResult {
    /// Code distance α_i with its witness generator rows.
    Alpha {
        index: usize,
        value: usize,
        route: String,
        witness: Vec<Vec<u32>>,
    },
    /// Comma-joined view of the α values over the requested index range,
    /// with any skipped indices listed next to it.
    AlphaSummary {
        first_index: usize,
        last_index: usize,
        values: Vec<usize>,
        skipped_indices: Vec<usize>,
    },
    /// Greedy code distances with the size of each optimal level set.
    Greedy {
        values: Vec<usize>,
        level_sizes: Vec<usize>,
    },
    /// Covering radius with one coset leader of a deepest coset.
    CoveringRadius { value: usize, leader: Vec<u32> },
    /// Generalized radius ρ_i.
    Radius { index: usize, value: usize },
    /// Maximality degree μ and the two distances it compares.
    Maximality {
        mu: usize,
        is_maximal: bool,
        min_distance: usize,
        alpha_k_plus_1: usize,
    },
    /// Weights attained by nonzero codewords.
    Sld { weights: Vec<usize> },
    /// Code distance after scalar extension to level `level`.
    Extended {
        level: usize,
        index: usize,
        value: usize,
    },
    /// Sweep of α_i over extension levels 1..=max level.
    Asymptotic {
        index: usize,
        levels: Vec<usize>,
        value: usize,
        first_attained: usize,
        tail_stable: bool,
        /// Always "uncertified": a finite sweep is only a lower bound.
        certainty: String,
    },
    /// Singleton-style ceilings and extremality flags.
    Bounds {
        ceilings: Vec<usize>,
        rank_inverted: Option<Vec<usize>>,
        rank_forms_differ: bool,
        flags: FlagSummary,
    },
    /// Partial distances of a kernel matrix, with the exponent when the
    /// matrix is square and invertible.
    Partial {
        deltas: Vec<usize>,
        exponent: Option<f64>,
        exponent_ceiling: Option<f64>,
    },
    /// Rows of a greedy generator, weights alongside.
    GeneratorRows {
        rows: Vec<Vec<u32>>,
        row_weights: Vec<usize>,
    },
    /// An invariant that could not be computed, with the reason.
    Skipped { name: String, reason: String },
}

/// Budget ledger: the wall and what the run actually spent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BudgetSummary {
    pub limit: u64,
    pub spent: u64,
}

/// Full report for one code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub code: CodeIdentity,
    pub invariants: Vec<InvariantResult>,
    pub budget: BudgetSummary,
}

/// Lowercase-hex SHA-256 of raw bytes.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

fn join_usizes(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn render_vector(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn render_rows(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| render_vector(r))
        .collect::<Vec<_>>()
        .join("; ")
}

fn flag_text(flag: Option<bool>) -> &'static str {
    match flag {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self)
            .expect("the report model serializes without fallible map keys");
        text.push('\n');
        text
    }

    /// Tab-separated rows: `name<TAB>value<TAB>detail`, preceded by `#`
    /// comment lines identifying the code, followed by the budget line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let c = &self.code;
        let _ = writeln!(out, "# codedist report schema {}", self.schema);
        let _ = writeln!(out, "# file {}", c.file);
        let _ = writeln!(out, "# sha256 {}", c.sha256);
        let _ = writeln!(
            out,
            "# field GF({}) = GF({}^{})\tmetric {}\tn {}\tk {}",
            c.q, c.p, c.e, c.metric, c.n, c.k
        );
        for entry in &self.invariants {
            match entry {
                InvariantResult::Alpha {
                    index,
                    value,
                    route,
                    witness,
                } => {
                    let _ = writeln!(
                        out,
                        "alpha_{index}\t{value}\troute={route} witness={}",
                        render_rows(witness)
                    );
                }
                InvariantResult::AlphaSummary {
                    first_index,
                    last_index,
                    values,
                    skipped_indices,
                } => {
                    let mut detail = format!("indices={first_index}..{last_index}");
                    if !skipped_indices.is_empty() {
                        let _ = write!(detail, " skipped={}", join_usizes(skipped_indices));
                    }
                    let _ = writeln!(out, "alpha_profile\t{}\t{detail}", join_usizes(values));
                }
                InvariantResult::Greedy {
                    values,
                    level_sizes,
                } => {
                    let _ = writeln!(
                        out,
                        "greedy\t{}\tlevel_sizes={}",
                        join_usizes(values),
                        join_usizes(level_sizes)
                    );
                }
                InvariantResult::CoveringRadius { value, leader } => {
                    let _ = writeln!(
                        out,
                        "covering_radius\t{value}\tleader={}",
                        render_vector(leader)
                    );
                }
                InvariantResult::Radius { index, value } => {
                    let _ = writeln!(out, "rho_{index}\t{value}\t");
                }
                InvariantResult::Maximality {
                    mu,
                    is_maximal,
                    min_distance,
                    alpha_k_plus_1,
                } => {
                    let _ = writeln!(
                        out,
                        "mu\t{mu}\tmaximal={is_maximal} d_min={min_distance} alpha_k_plus_1={alpha_k_plus_1}"
                    );
                }
                InvariantResult::Sld { weights } => {
                    let _ = writeln!(out, "sld_set\t{{{}}}\t", join_usizes(weights));
                }
                InvariantResult::Extended {
                    level,
                    index,
                    value,
                } => {
                    let _ = writeln!(out, "alpha_{index}^{level}\t{value}\t");
                }
                InvariantResult::Asymptotic {
                    index,
                    levels,
                    value,
                    first_attained,
                    tail_stable,
                    certainty,
                } => {
                    let _ = writeln!(
                        out,
                        "alpha_{index}^sweep\t{value}\tlevels={} first_attained={first_attained} tail_stable={tail_stable} {certainty}",
                        join_usizes(levels)
                    );
                }
                InvariantResult::Bounds {
                    ceilings,
                    rank_inverted,
                    rank_forms_differ,
                    flags,
                } => {
                    let _ = writeln!(out, "singleton_ceilings\t{}\t", join_usizes(ceilings));
                    if let Some(inv) = rank_inverted {
                        let _ = writeln!(
                            out,
                            "singleton_rank_inverted\t{}\tforms_differ={rank_forms_differ}",
                            join_usizes(inv)
                        );
                    }
                    let _ = writeln!(
                        out,
                        "flags\tmds={} mrd={} qmrd={} msrd={}\t",
                        flag_text(flags.is_mds),
                        flag_text(flags.is_mrd),
                        flag_text(flags.is_qmrd),
                        flag_text(flags.is_msrd)
                    );
                }
                InvariantResult::Partial {
                    deltas,
                    exponent,
                    exponent_ceiling,
                } => {
                    let _ = writeln!(out, "partial_deltas\t{}\t", join_usizes(deltas));
                    if let Some(e) = exponent {
                        let _ = writeln!(out, "exponent\t{e}\t");
                    }
                    if let Some(c) = exponent_ceiling {
                        let _ = writeln!(out, "exponent_ceiling\t{c}\t");
                    }
                }
                InvariantResult::GeneratorRows { rows, row_weights } => {
                    for (i, (row, w)) in rows.iter().zip(row_weights).enumerate() {
                        let _ = writeln!(
                            out,
                            "greedy_row_{}\t{w}\t{}",
                            i + 1,
                            render_vector(row)
                        );
                    }
                }
                InvariantResult::Skipped { name, reason } => {
                    let _ = writeln!(out, "{name}\tskipped\t{reason}");
                }
            }
        }
        let _ = writeln!(
            out,
            "budget\t{}\tlimit={}",
            self.budget.spent, self.budget.limit
        );
        out
    }

    /// Render in the requested format.
    pub fn render(&self, format: crate::config::OutputFormat) -> String {
        match format {
            crate::config::OutputFormat::Tsv => self.to_tsv(),
            crate::config::OutputFormat::Json => self.to_json(),
        }
    }
}
