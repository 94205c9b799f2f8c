//! The `partial` subcommand: partial distances of the literal generator
//! rows in a code file, with the exponent when the matrix is square.
//!
//! Partial distances depend on row order, and the library's file parser
//! canonicalizes generators to reduced row echelon form, so this command
//! parses the rows itself, verbatim. With `--from-code` it instead treats
//! the file as a code, builds the greedy generator, and reports that
//! matrix's rows and partial distances.

use super::{
    identity_for, matrix_rows, read_code_file, CliError, EXIT_OK,
};
use crate::config::{CommonOpts, RunConfig};
use crate::report::{BudgetSummary, CodeIdentity, InvariantResult, Report, SCHEMA_VERSION};
use clap::Args;
use codedist_core::invariants::{exponent, greedy_generator, partial_distances};
use codedist_core::{AmbientSpace, Error, FieldCtx, LinearCode, Mat};
use std::path::{Path, PathBuf};

/// Flags for `codedist partial`.
#[derive(Debug, Args)]
pub struct PartialArgs {
    /// Code file whose generator rows form the kernel matrix.
    pub file: PathBuf,

    /// Treat the file as a code and analyze its greedy generator instead
    /// of the literal rows.
    #[arg(long)]
    pub from_code: bool,

    #[command(flatten)]
    pub common: CommonOpts,
}

/// A code file read without canonicalization: the ambient space and the
/// generator rows exactly as written.
struct RawFile {
    ambient: AmbientSpace,
    mat: Mat,
}

/// Parse the code file format but keep the generator rows verbatim.
/// Extension-view files are refused: their rows live over the extension
/// field, not in the ambient space where weights are measured.
fn parse_verbatim(text: &str) -> Result<RawFile, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, metric_line) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 0, reason: "empty input".into() })?;
    let mtoks: Vec<&str> = metric_line.split_whitespace().collect();
    let nums = |toks: &[&str], ln: usize| -> Result<Vec<usize>, Error> {
        toks.iter()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: ln,
                    reason: format!("`{t}` is not a nonnegative integer"),
                })
            })
            .collect()
    };
    if mtoks.first() != Some(&"metric") {
        return Err(Error::Parse {
            line: ln,
            reason: "expected a `metric ...` line".into(),
        });
    }

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

    let ambient = match mtoks.get(1) {
        Some(&"hamming") => {
            let v = nums(&mtoks[2..], ln)?;
            if v.len() != 1 {
                return Err(Error::Parse {
                    line: ln,
                    reason: "`metric hamming` takes exactly one length".into(),
                });
            }
            AmbientSpace::hamming(field.clone(), v[0])?
        }
        Some(&"rank") => {
            let v = nums(&mtoks[2..], ln)?;
            if v.len() != 2 {
                return Err(Error::Parse {
                    line: ln,
                    reason: "`metric rank` takes two dimensions m n".into(),
                });
            }
            AmbientSpace::rank(field.clone(), v[0], v[1])?
        }
        Some(&"sumrank") => {
            let v = nums(&mtoks[2..], ln)?;
            if v.is_empty() || v.len() % 2 != 0 {
                return Err(Error::Parse {
                    line: ln,
                    reason: "`metric sumrank` takes pairs m1 n1 m2 n2 ...".into(),
                });
            }
            AmbientSpace::sum_rank(field.clone(), v.chunks(2).map(|c| (c[0], c[1])).collect())?
        }
        other => {
            return Err(Error::Parse {
                line: ln,
                reason: format!("unknown metric `{}`", other.unwrap_or(&"")),
            })
        }
    };

    let (mut ln, mut next) = lines.next().ok_or_else(|| Error::Parse {
        line: ln,
        reason: "missing `generator` line".into(),
    })?;
    let toks: Vec<&str> = next.split_whitespace().collect();
    if toks.len() == 3 && toks[1] == "extension" {
        return Err(Error::NotApplicable(
            "partial distances need the literal generator rows; this file stores an \
             extension-field view, so analyze it with --from-code instead"
                .into(),
        ));
    }
    if next != "generator" {
        return Err(Error::Parse {
            line: ln,
            reason: format!("expected `generator`, got `{next}`"),
        });
    }

    let q = field.q;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (row_ln, line) in lines {
        ln = row_ln;
        next = line;
        let mut row = Vec::new();
        for tok in next.split_whitespace() {
            let value: u32 = tok.parse().map_err(|_| Error::Parse {
                line: ln,
                reason: format!("`{tok}` is not a field element code"),
            })?;
            if value >= q {
                return Err(Error::Parse {
                    line: ln,
                    reason: format!("element code {value} is out of range for GF({q})"),
                });
            }
            row.push(value);
        }
        if row.len() != ambient.len() {
            return Err(Error::Parse {
                line: ln,
                reason: format!(
                    "row has {} entries but the ambient space needs {}",
                    row.len(),
                    ambient.len()
                ),
            });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: ln,
            reason: "no generator rows".into(),
        });
    }
    let mat = Mat::from_rows(field, &rows)?;
    Ok(RawFile { ambient, mat })
}

/// Identity block for a verbatim matrix file: `k` is the literal row
/// count, not the row-space dimension.
fn raw_identity(path: &Path, sha256: String, raw: &RawFile) -> CodeIdentity {
    let field = raw.ambient.field();
    CodeIdentity {
        file: path.display().to_string(),
        sha256,
        p: field.p as u64,
        e: field.e as u64,
        q: field.q as u64,
        metric: raw.ambient.shape_string(),
        n: raw.ambient.len(),
        k: raw.mat.nrows(),
    }
}

pub fn run(args: &PartialArgs, cfg: &RunConfig) -> Result<u8, CliError> {
    let (text, sha) = read_code_file(&args.file)?;
    let budget = cfg.budget();

    let (identity, mat, ambient, greedy_rows) = if args.from_code {
        let code = LinearCode::parse_file(&text)?;
        let identity = identity_for(&args.file, sha, &code);
        let generator =
            cfg.install(|| greedy_generator(&code, &budget, cfg.level_cap))?;
        let ambient = code.ambient().clone();
        (identity, generator, ambient, true)
    } else {
        let raw = parse_verbatim(&text)?;
        let identity = raw_identity(&args.file, sha, &raw);
        (identity, raw.mat, raw.ambient, false)
    };

    let mut entries = Vec::new();
    if greedy_rows {
        entries.push(InvariantResult::GeneratorRows {
            rows: matrix_rows(&mat),
            row_weights: mat.rows_iter().map(|r| ambient.weight(r)).collect(),
        });
    }

    let (profile, exponent_report) = cfg.install(|| -> Result<_, Error> {
        let profile = partial_distances(&mat, &ambient, &budget)?;
        let exponent_report = if mat.nrows() == mat.ncols() {
            Some(exponent(&mat, &ambient, &budget)?)
        } else {
            None
        };
        Ok((profile, exponent_report))
    })?;

    entries.push(InvariantResult::Partial {
        deltas: profile.deltas,
        exponent: exponent_report.as_ref().map(|r| r.exponent),
        exponent_ceiling: exponent_report.as_ref().map(|r| r.ceiling),
    });

    let report = Report {
        schema: SCHEMA_VERSION,
        code: identity,
        invariants: entries,
        budget: BudgetSummary {
            limit: budget.limit(),
            spent: budget.used(),
        },
    };
    print!("{}", report.render(cfg.output));
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verbatim_parsing_keeps_row_order() {
        let text = "metric hamming 3\nfield 2 1\ngenerator\n1 1 1\n0 1 1\n";
        let raw = parse_verbatim(text).unwrap();
        assert_eq!(raw.mat.row(0), &[1, 1, 1]);
        assert_eq!(raw.mat.row(1), &[0, 1, 1]);
    }

    #[test]
    fn extension_files_are_refused_with_a_pointer_to_from_code() {
        let text = "metric rank 2 2\nfield 2 1\nlinear extension 2\ngenerator\n1 2\n";
        assert!(matches!(
            parse_verbatim(text),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn out_of_range_elements_carry_their_line_number() {
        let text = "metric hamming 2\nfield 2 1\ngenerator\n1 0\n0 2\n";
        match parse_verbatim(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }
}
