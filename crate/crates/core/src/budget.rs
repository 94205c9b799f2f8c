//! Work budgets for exhaustive searches.
//!
//! Every exhaustive routine in this crate is exact, so the only defense
//! against combinatorial blowup is to refuse work up front. The unit of
//! account is one weight evaluation (Hamming weight of one vector, or one
//! rank computation for the rank and sum-rank metrics); cheap bookkeeping
//! around the evaluations is not billed. Routines first run a preflight
//! check against the full estimated cost, then debit as they go, so
//! concurrent searches sharing a budget stay within the limit.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default evaluation budget for a run.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A shared, thread-safe evaluation budget.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    /// A budget allowing `limit` weight evaluations.
    pub fn new(limit: u64) -> Budget {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// The configured limit.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Evaluations debited so far.
    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }

    /// Evaluations still available.
    pub fn remaining(&self) -> u64 {
        self.limit - self.used()
    }

    /// Check that an upcoming search of `estimate` evaluations could fit in
    /// what remains, without debiting anything.
    pub fn preflight(&self, estimate: u128) -> Result<()> {
        if estimate > self.remaining() as u128 {
            Err(Error::BudgetExceeded {
                estimate,
                remaining: self.remaining(),
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Debit a cost that may exceed u64 (subspace counts are u128). Any
    /// cost above the remaining allowance fails without debiting.
    pub fn debit_u128(&self, n: u128) -> Result<()> {
        self.preflight(n)?;
        self.debit(n as u64)
    }

    /// Debit `n` evaluations, failing (and refunding) once the limit is hit.
    pub fn debit(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before + n > self.limit {
            self.used.fetch_sub(n, Ordering::Relaxed);
            Err(Error::BudgetExceeded {
                estimate: n as u128,
                remaining: self.limit.saturating_sub(before),
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
