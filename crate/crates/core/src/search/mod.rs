//! Exhaustive and randomized searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod builder_search;
mod enumerate;
mod hfree;
mod oracle;

pub use builder_search::{search_builder, BuilderPair, BuilderSearchResult, CopyLimit};
pub use enumerate::{enumerate_graphs, Enumerator};
pub use hfree::{find_h_free_saturated, HFreeResult, Strategy};
pub use oracle::{sat_oracle, saturated_classes, OracleResult};

/// Caps on a search. `None` means unlimited. In deterministic mode the
/// wall-clock cap is ignored and node caps are applied in branch order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
    pub deterministic: bool,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn seconds(s: f64) -> Self {
        SearchBudget { max_seconds: Some(s), ..Default::default() }
    }

    pub fn nodes(n: u64) -> Self {
        SearchBudget { max_nodes: Some(n), ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) || self.max_seconds.is_some_and(|s| !(s > 0.0)) {
            return Err(Error::OutOfRange("budget caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    BudgetExhausted,
}

pub(crate) struct Tracker {
    start: Instant,
    nodes: AtomicU64,
    stopped: AtomicBool,
    max_nodes: Option<u64>,
    max_seconds: Option<f64>,
}

impl Tracker {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Tracker {
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            stopped: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            max_seconds: if budget.deterministic { None } else { budget.max_seconds },
        }
    }

    /// Counts one node; false once a cap is hit.
    pub(crate) fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| count > m);
        let over_time = count % 1024 == 0
            && self.max_seconds.is_some_and(|s| self.start.elapsed().as_secs_f64() > s);
        if over_nodes || over_time {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn status(&self) -> SearchStatus {
        if self.stopped.load(Ordering::Relaxed) {
            SearchStatus::BudgetExhausted
        } else {
            SearchStatus::Complete
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}
