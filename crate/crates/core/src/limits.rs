//! Search budgets and size caps shared by every exhaustive routine.

use serde::{Deserialize, Serialize};

/// Default node budget for a single search call.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Nodes a single minor or coloring search may expand.
    pub node_budget: u64,
    /// Minimal minors the critical-set procedure enumerates before
    /// falling back to heuristic mode.
    pub procedure_minor_cap: usize,
    /// Minimal minors a claim check enumerates before reporting BUDGET.
    pub claim_minor_cap: usize,
    /// Largest order accepted by the exact chromatic oracle.
    pub chromatic_cap: usize,
    /// Largest order for checks that enumerate all vertex subsets.
    pub subset_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_budget: DEFAULT_NODE_BUDGET,
            procedure_minor_cap: 64,
            claim_minor_cap: 4096,
            chromatic_cap: 16,
            subset_cap: 16,
        }
    }
}

impl Limits {
    pub fn with_budget(node_budget: u64) -> Self {
        Limits {
            node_budget,
            ..Limits::default()
        }
    }
}

/// Node counter for one search call.
#[derive(Debug)]
pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(limit: u64) -> Self {
        Meter { limit, used: 0 }
    }

    /// Counts one node; `Err` once the limit is passed.
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), crate::BudgetExhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(crate::BudgetExhausted { limit: self.limit })
        } else {
            Ok(())
        }
    }
}
