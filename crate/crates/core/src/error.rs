//! Error types shared across the crate.
//!
//! Every fallible operation returns [`Error`]. Exhaustive search routines
//! refuse up front (with [`Error::BudgetExceeded`]) when the work they are
//! about to do would exceed the caller's budget, rather than running forever.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The characteristic passed to a field constructor is not a supported prime.
    #[error("{0} is not a supported prime characteristic (expected 2, 3, 5, or 7)")]
    NotPrime(u64),
    /// The extension degree is outside the bundled table.
    #[error("extension degree {0} is out of range (supported: 1..=12)")]
    DegreeTooLarge(u64),
    /// The requested field has no bundled Conway polynomial or exceeds the size ceiling.
    #[error("no bundled Conway polynomial for GF({p}^{e}) (field order must be at most 2^20)")]
    NoConwayPolynomial { p: u64, e: u64 },
    /// Division by the zero element of a field.
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u64 },
    /// An embedding was requested between fields that do not nest.
    #[error("GF({pa}^{ea}) does not embed into GF({pb}^{eb})")]
    IncompatibleFields { pa: u64, ea: u64, pb: u64, eb: u64 },
    /// Two objects that must share a field or ambient space do not.
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    /// A vector or matrix has the wrong length for the requested operation.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// A requested dimension or index is outside its valid range.
    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },
    /// A coordinate position is outside the code length.
    #[error("position {position} out of range for length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    /// An exhaustive search would exceed the evaluation budget.
    #[error("search needs about {estimate} weight evaluations but only {remaining} of {budget} remain")]
    BudgetExceeded {
        estimate: u128,
        remaining: u64,
        budget: u64,
    },
    /// A greedy level set grew past the configured cap.
    #[error("greedy level set reached {size} members, past the cap of {cap}")]
    LevelSetOverflow { size: usize, cap: usize },
    /// An exact integer count overflowed the 128-bit accumulator.
    #[error("exact count overflowed 128 bits in {0}")]
    Overflow(&'static str),
    /// The dual is not defined for this code representation.
    #[error("dual is unsupported here: {0}")]
    UnsupportedDual(String),
    /// Every subset of the given vectors is linearly independent.
    #[error("the vectors are linearly independent; no dependent subset exists")]
    NoDependentSubset,
    /// Evaluation points for a code construction repeat.
    #[error("duplicate evaluation points")]
    DuplicatePoints,
    /// The requested dimension exceeds what the construction supports.
    #[error("dimension k={k} too large (maximum {max})")]
    KTooLarge { k: usize, max: usize },
    /// The polynomials handed to an evaluation code are dependent as functions.
    #[error("the evaluation polynomials are linearly dependent on the point set")]
    DependentPolynomials,
    /// The evaluation points of a rank-metric construction are dependent over the base field.
    #[error("the evaluation points are linearly dependent over the base field")]
    DependentPoints,
    /// A construction requires k <= n (or similar dimension order) and got the reverse.
    #[error("dimension order violated: {0}")]
    DimensionOrder(String),
    /// No built-in code with the given name.
    #[error("unknown built-in code {0:?}")]
    UnknownName(String),
    /// A matrix that must have independent rows does not.
    #[error("matrix rows are linearly dependent")]
    RankDeficient,
    /// The vectors handed in do not form a basis of the code.
    #[error("the given vectors are not a basis of the code: {0}")]
    NotABasis(String),
    /// A square matrix that must be invertible is singular.
    #[error("matrix is not invertible")]
    NotInvertible,
    /// The requested invariant does not apply to this code.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A code file or parameter string failed to parse.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
