//! The five subcommands, plus the error and exit-code plumbing they
//! share.
//!
//! Exit contract: 0 success (for `compare`: inequivalence proven), 1
//! usage or parse failure, 2 a resource wall (budget, level-set cap, or
//! counter overflow), 3 `compare` found no distinguishing invariant.

pub mod compare;
pub mod construct;
pub mod goldens;
pub mod invariants;
pub mod partial;

use crate::report::CodeIdentity;
use codedist_core::{Error, LinearCode, Mat};
use std::path::Path;

/// Exit code for success.
pub const EXIT_OK: u8 = 0;
/// Exit code for usage, I/O, and parse failures.
pub const EXIT_USAGE: u8 = 1;
/// Exit code when any computation hit the budget or another resource wall.
pub const EXIT_BUDGET: u8 = 2;
/// Exit code when `compare` cannot tell the codes apart.
pub const EXIT_INDISTINGUISHABLE: u8 = 3;

/// One error type for the whole command layer.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag values.
    Usage(String),
    /// The library refused the computation.
    Core(Error),
    /// Reading or writing a file failed.
    Io { path: String, err: std::io::Error },
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl CliError {
    /// Message for stderr.
    pub fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Core(err) => err.to_string(),
            CliError::Io { path, err } => format!("{path}: {err}"),
        }
    }

    /// Exit code under the 0/1/2/3 contract.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Core(err) => {
                if is_resource_wall(err) {
                    EXIT_BUDGET
                } else {
                    EXIT_USAGE
                }
            }
        }
    }
}

/// Whether an error means "ran out of resources" rather than "the request
/// was wrong". These map to exit code 2.
pub fn is_resource_wall(err: &Error) -> bool {
    matches!(
        err,
        Error::BudgetExceeded { .. } | Error::LevelSetOverflow { .. } | Error::Overflow(_)
    )
}

/// Read a code file and hash its bytes.
pub fn read_code_file(path: &Path) -> Result<(String, String), CliError> {
    let bytes = std::fs::read(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        err,
    })?;
    let sha = crate::report::sha256_hex(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Core(Error::Parse {
        line: 0,
        reason: "the file is not valid UTF-8".into(),
    }))?;
    Ok((text, sha))
}

/// Identity block for a parsed code.
pub fn identity_for(path: &Path, sha256: String, code: &LinearCode) -> CodeIdentity {
    let field = code.field();
    CodeIdentity {
        file: path.display().to_string(),
        sha256,
        p: field.p as u64,
        e: field.e as u64,
        q: field.q as u64,
        metric: code.ambient().shape_string(),
        n: code.ambient().len(),
        k: code.k(),
    }
}

/// Parse an index range: `I` for a single index or `A..B` inclusive on
/// both ends, checked against 1..=n.
pub fn parse_index_range(
    spec: &str,
    n: usize,
) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = |why: &str| {
        Err(CliError::Usage(format!(
            "bad index range {spec:?}: {why} (expected I or A..B with 1 <= A <= B <= {n})"
        )))
    };
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => {
            let (Ok(a), Ok(b)) = (a.trim().parse::<usize>(), b.trim().parse::<usize>()) else {
                return bad("both endpoints must be integers");
            };
            (a, b)
        }
        None => match spec.trim().parse::<usize>() {
            Ok(i) => (i, i),
            Err(_) => return bad("not an integer"),
        },
    };
    if lo < 1 || hi > n || lo > hi {
        return bad("out of range");
    }
    Ok(lo..=hi)
}

/// Matrix rows as plain integer vectors, for witnesses in reports.
pub fn matrix_rows(mat: &Mat) -> Vec<Vec<u32>> {
    mat.rows_iter().map(<[u32]>::to_vec).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_ranges_parse_single_and_double_forms() {
        assert_eq!(parse_index_range("3", 5).unwrap(), 3..=3);
        assert_eq!(parse_index_range("4..5", 9).unwrap(), 4..=5);
        assert!(parse_index_range("0..2", 5).is_err());
        assert!(parse_index_range("4..2", 5).is_err());
        assert!(parse_index_range("1..6", 5).is_err());
        assert!(parse_index_range("x", 5).is_err());
    }
}
