//! The `invariants` subcommand: compute a requested set of invariants of
//! one code and emit a report.
//!
//! With no invariant flags at all the command computes the full code
//! distance profile. Per-index resource failures become explicit skip
//! entries and turn the exit code into 2; they never abort the rest of
//! the report.

use super::{
    identity_for, is_resource_wall, matrix_rows, parse_index_range, read_code_file, CliError,
    EXIT_BUDGET, EXIT_OK,
};
use crate::config::{CommonOpts, RunConfig};
use crate::report::{
    BudgetSummary, FlagSummary, InvariantResult, Report, SCHEMA_VERSION, UNCERTIFIED,
};
use clap::Args;
use codedist_core::invariants::{
    asymptotic_distance, covering_radius, distance_profile, extended_distance,
    generalized_radius, greedy_profile, maximality_degree, singleton_profile,
};
use codedist_core::{Budget, Error, LinearCode};
use std::ops::RangeInclusive;
use std::path::PathBuf;

/// Flags for `codedist invariants`.
#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Code file to analyze.
    pub file: PathBuf,

    /// Code distances α_i: bare flag for the full range 1..=n, or a
    /// single index I, or an inclusive range A..B.
    #[arg(long, value_name = "RANGE", num_args = 0..=1, default_missing_value = "full")]
    pub alpha: Option<String>,

    /// Greedy code distances α_i^g.
    #[arg(long)]
    pub greedy: bool,

    /// Covering radius and the generalized radii ρ_i.
    #[arg(long)]
    pub radii: bool,

    /// Maximality degree μ.
    #[arg(long)]
    pub mu: bool,

    /// Weights attained by nonzero codewords.
    #[arg(long)]
    pub sld: bool,

    /// Code distances after scalar extension to level L.
    #[arg(long, value_name = "L")]
    pub extend: Option<usize>,

    /// Sweep extended code distances over levels 1..=LMAX.
    #[arg(long, value_name = "LMAX")]
    pub asymptotic: Option<usize>,

    /// Singleton-style distance ceilings and extremality flags.
    #[arg(long)]
    pub bounds: bool,

    #[command(flatten)]
    pub common: CommonOpts,
}

/// What one run accumulates: result entries plus whether any computation
/// hit a resource wall.
struct Collected {
    entries: Vec<InvariantResult>,
    hit_wall: bool,
}

impl Collected {
    fn new() -> Collected {
        Collected {
            entries: Vec::new(),
            hit_wall: false,
        }
    }

    /// Record a value, or record the skip and remember a resource wall.
    /// Non-resource errors abort the run.
    fn push_or_skip<T>(
        &mut self,
        name: String,
        outcome: Result<T, Error>,
        to_entry: impl FnOnce(T) -> InvariantResult,
    ) -> Result<(), Error> {
        match outcome {
            Ok(value) => {
                self.entries.push(to_entry(value));
                Ok(())
            }
            Err(err) if is_resource_wall(&err) => {
                self.hit_wall = true;
                self.entries.push(InvariantResult::Skipped {
                    name,
                    reason: err.to_string(),
                });
                Ok(())
            }
            Err(err @ Error::NotApplicable(_)) => {
                self.entries.push(InvariantResult::Skipped {
                    name,
                    reason: err.to_string(),
                });
                Ok(())
            }
            Err(err) => Err(err),
        }
    }
}

pub fn run(args: &InvariantsArgs, cfg: &RunConfig) -> Result<u8, CliError> {
    let (text, sha) = read_code_file(&args.file)?;
    let code = LinearCode::parse_file(&text)?;
    let identity = identity_for(&args.file, sha, &code);
    let n = code.ambient().len();

    let any_flag = args.alpha.is_some()
        || args.greedy
        || args.radii
        || args.mu
        || args.sld
        || args.extend.is_some()
        || args.asymptotic.is_some()
        || args.bounds;
    let alpha_range: Option<RangeInclusive<usize>> = match &args.alpha {
        Some(spec) if spec == "full" => Some(1..=n),
        Some(spec) => Some(parse_index_range(spec, n)?),
        None if any_flag => None,
        None => Some(1..=n),
    };
    // Extension and sweep results follow the α range when one was given.
    let ext_range = alpha_range.clone().unwrap_or(1..=n);
    for (flag, level) in [("--extend", args.extend), ("--asymptotic", args.asymptotic)] {
        if level == Some(0) {
            return Err(CliError::Usage(format!(
                "{flag} needs a level of at least 1"
            )));
        }
    }

    let budget = cfg.budget();
    let collected = cfg.install(|| {
        collect(&code, args, alpha_range, ext_range, &budget, cfg.level_cap)
    })?;

    let report = Report {
        schema: SCHEMA_VERSION,
        code: identity,
        invariants: collected.entries,
        budget: BudgetSummary {
            limit: budget.limit(),
            spent: budget.used(),
        },
    };
    print!("{}", report.render(cfg.output));
    Ok(if collected.hit_wall { EXIT_BUDGET } else { EXIT_OK })
}

fn collect(
    code: &LinearCode,
    args: &InvariantsArgs,
    alpha_range: Option<RangeInclusive<usize>>,
    ext_range: RangeInclusive<usize>,
    budget: &Budget,
    level_cap: usize,
) -> Result<Collected, Error> {
    let mut c = Collected::new();
    let n = code.ambient().len();

    if let Some(range) = alpha_range {
        let profile = distance_profile(code, range.clone(), budget)?;
        for i in range.clone() {
            if let Some(entry) = profile.entries.get(&i) {
                c.entries.push(InvariantResult::Alpha {
                    index: i,
                    value: entry.value,
                    route: entry.route.to_string(),
                    witness: matrix_rows(&entry.witness),
                });
            } else if let Some(err) = profile.skipped.get(&i) {
                c.hit_wall = c.hit_wall || is_resource_wall(err);
                c.entries.push(InvariantResult::Skipped {
                    name: format!("alpha_{i}"),
                    reason: err.to_string(),
                });
            }
        }
        c.entries.push(InvariantResult::AlphaSummary {
            first_index: *range.start(),
            last_index: *range.end(),
            values: profile.values().into_iter().map(|(_, v)| v).collect(),
            skipped_indices: profile.skipped.keys().copied().collect(),
        });
    }

    if args.greedy {
        c.push_or_skip("greedy".to_string(), greedy_profile(code, budget, level_cap), |p| {
            InvariantResult::Greedy {
                values: p.values,
                level_sizes: p.level_sizes,
            }
        })?;
    }

    if args.radii {
        if code.k() == n {
            c.entries.push(InvariantResult::Skipped {
                name: "radii".to_string(),
                reason: "not applicable: the code fills its ambient space".to_string(),
            });
        } else {
            c.push_or_skip(
                "covering_radius".to_string(),
                covering_radius(code, budget),
                |r| InvariantResult::CoveringRadius {
                    value: r.value,
                    leader: r.leader,
                },
            )?;
            for i in 1..=(n - code.k()) {
                c.push_or_skip(
                    format!("rho_{i}"),
                    generalized_radius(code, i, budget),
                    |r| InvariantResult::Radius {
                        index: i,
                        value: r.value,
                    },
                )?;
            }
        }
    }

    if args.mu {
        c.push_or_skip("mu".to_string(), maximality_degree(code, budget), |r| {
            InvariantResult::Maximality {
                mu: r.mu,
                is_maximal: r.is_maximal,
                min_distance: r.min_distance,
                alpha_k_plus_1: r.alpha_k_plus_1,
            }
        })?;
    }

    if args.sld {
        c.push_or_skip("sld_set".to_string(), code.sld_set(budget), |set| {
            InvariantResult::Sld {
                weights: set.into_iter().collect(),
            }
        })?;
    }

    if let Some(level) = args.extend {
        for i in ext_range.clone() {
            c.push_or_skip(
                format!("alpha_{i}^{level}"),
                extended_distance(code, level, i, budget),
                |value| InvariantResult::Extended {
                    level,
                    index: i,
                    value,
                },
            )?;
        }
    }

    if let Some(level_max) = args.asymptotic {
        for i in ext_range.clone() {
            c.push_or_skip(
                format!("alpha_{i}^sweep"),
                asymptotic_distance(code, i, level_max, budget),
                |sweep| InvariantResult::Asymptotic {
                    index: i,
                    levels: sweep.values,
                    value: sweep.value,
                    first_attained: sweep.first_attained,
                    tail_stable: sweep.tail_stable,
                    certainty: if sweep.certified {
                        "certified".to_string()
                    } else {
                        UNCERTIFIED.to_string()
                    },
                },
            )?;
        }
    }

    if args.bounds {
        let d_min = match code.min_distance(budget) {
            Ok((d, _)) => Some(d),
            Err(err) if is_resource_wall(&err) => {
                c.hit_wall = true;
                None
            }
            Err(err) => return Err(err),
        };
        let profile = singleton_profile(code, d_min);
        c.entries.push(InvariantResult::Bounds {
            ceilings: profile.ceilings,
            rank_inverted: profile.rank_inverted,
            rank_forms_differ: profile.rank_forms_differ,
            flags: FlagSummary {
                is_mds: profile.flags.is_mds,
                is_mrd: profile.flags.is_mrd,
                is_qmrd: profile.flags.is_qmrd,
                is_msrd: profile.flags.is_msrd,
            },
        });
    }

    Ok(c)
}
