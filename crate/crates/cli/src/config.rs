//! Run configuration shared by every subcommand: evaluation budget,
//! greedy level-set cap, worker count, and output format.
//!
//! The budget resolves in three steps: an explicit `--budget` flag wins,
//! then the `CODEDIST_BUDGET` environment variable, then the library
//! default. Validation happens once here so the commands can assume a
//! sane configuration.

use clap::{Args, ValueEnum};
use codedist_core::{Budget, DEFAULT_BUDGET};

/// Smallest budget the CLI accepts; anything lower cannot even finish the
/// trivial scans and almost certainly indicates a typo.
pub const MIN_BUDGET: u64 = 10_000;

/// Report format on stdout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Tab-separated rows for terminals, awk, and cut.
    Tsv,
    /// Versioned JSON for machines.
    Json,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CommonOpts {
    /// Weight-evaluation budget (default: CODEDIST_BUDGET or 10^8).
    #[arg(long, value_name = "EVALS")]
    pub budget: Option<u64>,

    /// Cap on the size of a greedy level set.
    #[arg(long, value_name = "SIZE", default_value_t = 1_000_000)]
    pub level_cap: usize,

    /// Worker threads used inside invariant computations.
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub workers: usize,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
    pub output: OutputFormat,
}

/// Fully resolved configuration for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Total weight evaluations the run may spend.
    pub budget_limit: u64,
    /// Cap on the size of a greedy level set.
    pub level_cap: usize,
    /// Worker threads for the rayon pool.
    pub workers: usize,
    /// Report format.
    pub output: OutputFormat,
}

impl RunConfig {
    /// Resolve the shared flags against the environment and validate the
    /// invariants budget ≥ 10^4 and workers ≥ 1.
    pub fn resolve(opts: &CommonOpts) -> Result<RunConfig, String> {
        let from_env = match std::env::var("CODEDIST_BUDGET") {
            Ok(raw) => Some(raw.trim().parse::<u64>().map_err(|_| {
                format!("CODEDIST_BUDGET must be a nonnegative integer, got {raw:?}")
            })?),
            Err(std::env::VarError::NotPresent) => None,
            Err(err) => return Err(format!("CODEDIST_BUDGET is unreadable: {err}")),
        };
        let budget_limit = opts.budget.or(from_env).unwrap_or(DEFAULT_BUDGET);
        if budget_limit < MIN_BUDGET {
            return Err(format!(
                "budget {budget_limit} is below the minimum of {MIN_BUDGET} weight evaluations"
            ));
        }
        if opts.workers < 1 {
            return Err("workers must be at least 1".to_string());
        }
        Ok(RunConfig {
            budget_limit,
            level_cap: opts.level_cap,
            workers: opts.workers,
            output: opts.output,
        })
    }

    /// A fresh budget with the configured limit.
    pub fn budget(&self) -> Budget {
        Budget::new(self.budget_limit)
    }

    /// Run `f` inside a rayon pool of exactly `workers` threads, so the
    /// flag is a real bound on parallelism rather than a hint.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("a thread pool with a fixed positive width always builds")
            .install(f)
    }
}
