//! The `compare` subcommand: compute the same invariants on two codes in
//! the same ambient space and report which ones differ.
//!
//! Any difference proves the codes inequivalent (exit 0). Agreement on
//! everything computed proves nothing, and the command says so with exit
//! code 3. Rows whose computation hit a resource wall show `skipped` and
//! never count as differences.

use super::{parse_index_range, read_code_file, CliError, EXIT_INDISTINGUISHABLE, EXIT_OK};
use crate::config::{CommonOpts, OutputFormat, RunConfig};
use crate::report::{BudgetSummary, SCHEMA_VERSION};
use clap::Args;
use codedist_core::invariants::{compare_codes, CompareSelection, Verdict};
use codedist_core::LinearCode;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::PathBuf;

/// Flags for `codedist compare`.
#[derive(Debug, Args)]
pub struct CompareArgs {
    /// First code file.
    pub file_a: PathBuf,
    /// Second code file; must live in the same ambient space.
    pub file_b: PathBuf,

    /// Compare code distances.
    #[arg(long)]
    pub alpha: bool,

    /// Compare greedy code distances.
    #[arg(long)]
    pub greedy: bool,

    /// Compare generalized radii.
    #[arg(long)]
    pub radii: bool,

    /// Compare maximality degrees.
    #[arg(long)]
    pub mu: bool,

    /// Compare the sets of attained weights.
    #[arg(long)]
    pub sld: bool,

    /// Also compare code distances after scalar extension, for every
    /// level from 2 up to L.
    #[arg(long, value_name = "L")]
    pub asymptotic: Option<usize>,

    /// Restrict distance indices to I or A..B (default: the full range).
    #[arg(long, value_name = "RANGE")]
    pub range: Option<String>,

    #[command(flatten)]
    pub common: CommonOpts,
}

/// File identity in a comparison report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct FileRef {
    file: String,
    sha256: String,
}

/// One compared invariant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct RowOut {
    invariant: String,
    left: String,
    right: String,
    differs: bool,
}

/// Machine-readable comparison verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct VerdictOut {
    inequivalent: bool,
    first_difference: Option<String>,
}

/// JSON shape of a comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct CompareOut {
    schema: u32,
    left: FileRef,
    right: FileRef,
    rows: Vec<RowOut>,
    verdict: VerdictOut,
    budget: BudgetSummary,
}

pub fn run(args: &CompareArgs, cfg: &RunConfig) -> Result<u8, CliError> {
    let (text_a, sha_a) = read_code_file(&args.file_a)?;
    let (text_b, sha_b) = read_code_file(&args.file_b)?;
    let a = LinearCode::parse_file(&text_a)?;
    let b = LinearCode::parse_file(&text_b)?;

    let any_family = args.alpha || args.greedy || args.radii || args.mu || args.sld;
    let selection = if any_family || args.asymptotic.is_some() {
        CompareSelection {
            alpha: args.alpha,
            greedy: args.greedy,
            radii: args.radii,
            mu: args.mu,
            sld: args.sld,
            ext_level: args.asymptotic,
        }
    } else {
        CompareSelection::default()
    };
    let range = args
        .range
        .as_deref()
        .map(|spec| parse_index_range(spec, a.ambient().len()))
        .transpose()?;

    let budget = cfg.budget();
    let comparison = cfg.install(|| {
        compare_codes(&a, &b, range, &selection, &budget, cfg.level_cap)
    })?;

    let out = CompareOut {
        schema: SCHEMA_VERSION,
        left: FileRef {
            file: args.file_a.display().to_string(),
            sha256: sha_a,
        },
        right: FileRef {
            file: args.file_b.display().to_string(),
            sha256: sha_b,
        },
        rows: comparison
            .rows
            .iter()
            .map(|r| RowOut {
                invariant: r.invariant.clone(),
                left: r.left.clone(),
                right: r.right.clone(),
                differs: r.differs,
            })
            .collect(),
        verdict: match &comparison.verdict {
            Verdict::ProvablyInequivalent { first_difference } => VerdictOut {
                inequivalent: true,
                first_difference: Some(first_difference.clone()),
            },
            Verdict::Indistinguishable => VerdictOut {
                inequivalent: false,
                first_difference: None,
            },
        },
        budget: BudgetSummary {
            limit: budget.limit(),
            spent: budget.used(),
        },
    };

    match cfg.output {
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(&out)
                .expect("the comparison model serializes without fallible map keys");
            text.push('\n');
            print!("{text}");
        }
        OutputFormat::Tsv => print!("{}", render_tsv(&out, &comparison.verdict)),
    }

    Ok(match comparison.verdict {
        Verdict::ProvablyInequivalent { .. } => EXIT_OK,
        Verdict::Indistinguishable => EXIT_INDISTINGUISHABLE,
    })
}

fn render_tsv(out: &CompareOut, verdict: &Verdict) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "# codedist compare schema {}", out.schema);
    let _ = writeln!(text, "# left {} sha256 {}", out.left.file, out.left.sha256);
    let _ = writeln!(text, "# right {} sha256 {}", out.right.file, out.right.sha256);
    let _ = writeln!(text, "invariant\tleft\tright\tstatus");
    for row in &out.rows {
        let status = if row.differs {
            "differs"
        } else if row.left == "skipped" || row.right == "skipped" {
            "skipped"
        } else {
            "agrees"
        };
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{status}",
            row.invariant, row.left, row.right
        );
    }
    let _ = writeln!(
        text,
        "budget\t{}\tlimit={}\t",
        out.budget.spent, out.budget.limit
    );
    let _ = writeln!(text, "verdict: {verdict}");
    text
}
