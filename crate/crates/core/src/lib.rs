//! Exact distance invariants of linear codes over finite fields, in the
//! Hamming, rank, and sum-rank metrics.
//!
//! The crate computes, by exhaustive search with explicit work budgets:
//!
//! - subcode and supercode distance profiles (the i-th value is the best
//!   minimum distance among i-dimensional subcodes, respectively the
//!   largest minimum distance among i-dimensional supercodes),
//! - their greedy variants, built level by level through nested chains,
//! - covering radii and their generalisations,
//! - the maximality degree (how far the minimum distance drops when one
//!   more dimension is forced in),
//! - weight sets, partial distances of a generator, and the exponent of a
//!   square generator used as a polarisation kernel,
//! - behaviour of all of the above under extension of scalars,
//! - Singleton-type ceilings and the associated optimality flags.
//!
//! Everything is exact: no probabilistic shortcuts, no floating-point
//! linear algebra. The price is exponential work, so every search debits a
//! [`budget::Budget`] and refuses up front when the cost estimate does not
//! fit.
//!
//! # Code files
//!
//! Codes are stored in a plain-text format:
//!
//! ```text
//! # comment lines start with a hash
//! metric hamming 5        (or: rank m n | sumrank m1 n1 m2 n2 ...)
//! field 2 1               (characteristic and degree: F_{p^e})
//! generator
//! 1 1 1 1 0
//! 0 0 0 1 1
//! ```
//!
//! Field elements are written as canonical integers: the element
//! `sum c_i g^i` (digits base p) is written `sum c_i p^i`, where g is the
//! canonical generator. Rank-metric codes may carry an extension view,
//! declared before the generator as `linear extension m` (the code is
//! F_{q^m}-linear) or `spanned extension m` (the rows merely span it over
//! F_q); the generator rows are then length-n vectors over F_{q^m} and
//! expand to m x n matrices over F_q.

pub mod ambient;
pub mod budget;
pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod invariants;
pub mod matrix;
pub(crate) mod scan;
pub mod subspace;

pub use ambient::{AmbientSpace, Metric};
pub use budget::{Budget, DEFAULT_BUDGET};
pub use code::{
    is_sld, min_distance_via_parity, min_ld_cardinality, min_sld_cardinality, ExtView,
    LinearCode,
};
pub use constructions::{
    builtin, evaluation_code, even_weight, gabidulin, hadamard_rank, reed_solomon,
    simplex, BUILTIN_NAMES,
};
pub use error::{Error, Result};
pub use field::{Embedding, Field, FieldCtx};
pub use matrix::Mat;
pub use subspace::{gaussian_binomial, projective_count, SubspaceEnum, SupercodeEnum};
