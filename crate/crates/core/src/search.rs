//! Node budgets and counters shared by the backtracking searches.

use serde::{Deserialize, Serialize};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Upper bound on the number of search nodes expanded by one call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub const fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.memo_hits += other.memo_hits;
    }
}

/// Raised inside a search when the budget runs out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct OutOfBudget;

/// Counts expanded nodes against a budget.
#[derive(Debug)]
pub(crate) struct Meter {
    limit: u64,
    pub stats: SearchStats,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            limit: budget.max_nodes,
            stats: SearchStats::default(),
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), OutOfBudget> {
        if self.stats.nodes >= self.limit {
            return Err(OutOfBudget);
        }
        self.stats.nodes += 1;
        Ok(())
    }

    #[inline]
    pub fn hit(&mut self) {
        self.stats.memo_hits += 1;
    }
}

/// Result of a search that can find a witness, prove there is none, or give up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was closed without finding a witness.
    NotFound,
    /// The node budget ran out first.
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Exhausted => Search::Exhausted,
        }
    }
}

/// A search outcome together with the work it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<T> {
    pub outcome: Search<T>,
    pub stats: SearchStats,
}
