//! The `construct` subcommand: build a named code and write it in the
//! plain-text code file format, to stdout or to a file.
//!
//! Output bytes are deterministic for fixed parameters, so constructed
//! files are safe to check into test fixtures and to diff.

use super::{CliError, EXIT_OK};
use crate::config::{CommonOpts, RunConfig};
use clap::{Args, Subcommand};
use codedist_core::{
    builtin, even_weight, gabidulin, hadamard_rank, reed_solomon, simplex, FieldCtx, LinearCode,
};
use std::io::Write as _;
use std::path::PathBuf;

/// Flags for `codedist construct`.
#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
}

/// The constructions the CLI can emit.
#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Reed-Solomon code evaluating polynomials of degree below k.
    Rs {
        /// Field order (a power of 2, 3, 5, or 7).
        #[arg(long)]
        q: u64,
        /// Dimension.
        #[arg(long)]
        k: usize,
        /// Evaluation points as field-element codes (default: the whole field).
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...")]
        points: Option<Vec<u32>>,
        #[command(flatten)]
        io: ConstructIo,
    },
    /// Simplex code: one column per point of the projective space.
    Simplex {
        /// Field order.
        #[arg(long)]
        q: u64,
        /// Dimension.
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: ConstructIo,
    },
    /// Even-weight code: all length-n binary words of even weight.
    Even {
        /// Length.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: ConstructIo,
    },
    /// Gabidulin code in the rank metric, evaluated on a basis.
    Gabidulin {
        /// Base field order (must be prime here).
        #[arg(long)]
        q: u64,
        /// Extension degree m; codewords are m x n matrices.
        #[arg(long)]
        m: u64,
        /// Number of evaluation points.
        #[arg(long)]
        n: usize,
        /// Dimension over the extension field GF(q^m).
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: ConstructIo,
    },
    /// Rank-metric Hadamard code: every nonzero word has rank exactly m.
    Hadamard {
        /// Base field order.
        #[arg(long)]
        q: u64,
        /// Extension degree; codewords are m x (m*k) matrices.
        #[arg(long)]
        m: usize,
        /// Dimension.
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: ConstructIo,
    },
    /// One of the named example codes bundled with the library.
    Builtin {
        /// Name, e.g. BR17-C1 or duality-C1.
        name: String,
        #[command(flatten)]
        io: ConstructIo,
    },
}

/// Output options shared by every construction.
#[derive(Debug, Args)]
pub struct ConstructIo {
    /// Write the code file here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonOpts,
}

impl ConstructKind {
    /// The shared output options of whichever construction was chosen.
    pub fn io(&self) -> &ConstructIo {
        match self {
            ConstructKind::Rs { io, .. }
            | ConstructKind::Simplex { io, .. }
            | ConstructKind::Even { io, .. }
            | ConstructKind::Gabidulin { io, .. }
            | ConstructKind::Hadamard { io, .. }
            | ConstructKind::Builtin { io, .. } => io,
        }
    }
}

/// Factor a field order as p^e for a supported prime p.
fn prime_power(q: u64) -> Result<(u64, u64), CliError> {
    for p in [2u64, 3, 5, 7] {
        if q % p == 0 {
            let mut e = 0u64;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if rest == 1 {
                return Ok((p, e));
            }
            return Err(CliError::Usage(format!("{q} is not a prime power")));
        }
    }
    Err(CliError::Usage(format!(
        "{q} is not a power of a supported prime (2, 3, 5, or 7)"
    )))
}

fn build(kind: &ConstructKind, cfg: &RunConfig) -> Result<LinearCode, CliError> {
    let code = match kind {
        ConstructKind::Rs { q, k, points, .. } => {
            let (p, e) = prime_power(*q)?;
            let field = FieldCtx::new(p, e)?;
            reed_solomon(&field, *k, points.as_deref())?
        }
        ConstructKind::Simplex { q, k, .. } => {
            let (p, e) = prime_power(*q)?;
            let field = FieldCtx::new(p, e)?;
            simplex(&field, *k, &cfg.budget())?
        }
        ConstructKind::Even { n, .. } => even_weight(*n)?,
        ConstructKind::Gabidulin { q, m, n, k, .. } => {
            let (p, e) = prime_power(*q)?;
            if e != 1 {
                return Err(CliError::Usage(format!(
                    "the Gabidulin construction needs a prime base field, got {q} = {p}^{e}"
                )));
            }
            let ext = FieldCtx::new(p, *m)?;
            gabidulin(&ext, *n, *k, None)?
        }
        ConstructKind::Hadamard { q, m, k, .. } => {
            let (p, e) = prime_power(*q)?;
            let base = FieldCtx::new(p, e)?;
            hadamard_rank(&base, *m, *k, &cfg.budget())?
        }
        ConstructKind::Builtin { name, .. } => builtin(name)?,
    };
    Ok(code)
}

pub fn run(args: &ConstructArgs, cfg: &RunConfig) -> Result<u8, CliError> {
    let code = build(&args.kind, cfg)?;
    let text = code.to_file_string();
    match &args.kind.io().out {
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|err| CliError::Io {
                path: path.display().to_string(),
                err,
            })?;
            file.write_all(text.as_bytes()).map_err(|err| CliError::Io {
                path: path.display().to_string(),
                err,
            })?;
            eprintln!(
                "wrote {}: {} x {} generator over GF({}), metric {}",
                path.display(),
                code.k(),
                code.ambient().len(),
                code.field().q,
                code.ambient().shape_string()
            );
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers_factor_and_composites_are_refused() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(16).unwrap(), (2, 4));
        assert_eq!(prime_power(7).unwrap(), (7, 1));
        assert!(prime_power(6).is_err());
        assert!(prime_power(11).is_err());
    }
}
