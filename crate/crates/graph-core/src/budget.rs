use std::cell::Cell;

use crate::error::BudgetExhausted;

/// Environment variable that overrides the default node budget.
pub const BUDGET_ENV: &str = "ISOKIT_BUDGET";

/// Default node budget for long searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Cooperative node counter shared by a single search.
#[derive(Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: Cell<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: Cell::new(0) }
    }

    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: Cell::new(0) }
    }

    /// `ISOKIT_BUDGET` when set and numeric, else `default`.
    pub fn from_env_or(default: u64) -> Self {
        let limit = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default);
        Budget::new(limit)
    }

    /// Counts one node.
    #[inline]
    pub fn tick(&self) -> Result<(), BudgetExhausted> {
        let u = self.used.get() + 1;
        self.used.set(u);
        match self.limit {
            Some(limit) if u > limit => Err(BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }
}
