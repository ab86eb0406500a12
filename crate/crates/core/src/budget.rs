use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default extension-step budget for searches.
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// Resource limits for the exponential searches.
///
/// `None` means unlimited. Node counts are per search call: every
/// backtracking search owns a fresh [`Meter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            node_limit: Some(DEFAULT_NODE_LIMIT),
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            node_limit: None,
            time_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn meter(&self, what: &'static str) -> Meter {
        Meter {
            what,
            nodes: 0,
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|t| Instant::now() + t),
        }
    }
}

/// Running counter checked against a [`Budget`].
#[derive(Debug, Clone)]
pub struct Meter {
    what: &'static str,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded(format!(
                    "{}: more than {} search nodes",
                    self.what, limit
                )));
            }
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::BudgetExceeded(format!(
                        "{}: time limit reached",
                        self.what
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
