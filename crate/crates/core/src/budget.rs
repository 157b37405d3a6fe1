use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Work limit shared by the long-running searches. Checks are cheap: the
/// clock is only read every few thousand ticks.
#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    max_ticks: Option<u64>,
    ticks: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            deadline: None,
            max_ticks: None,
            ticks: 0,
        }
    }

    pub fn with_time(limit: Duration) -> Budget {
        Budget {
            deadline: Some(Instant::now() + limit),
            ..Budget::unlimited()
        }
    }

    pub fn with_ticks(max_ticks: u64) -> Budget {
        Budget {
            max_ticks: Some(max_ticks),
            ..Budget::unlimited()
        }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    /// A fresh tick counter sharing this budget's deadline.
    pub fn fork(&self) -> Budget {
        Budget {
            ticks: 0,
            ..self.clone()
        }
    }

    /// Like `fork`, but counting `spent` ticks as already used, so that a
    /// tick limit covers a sequence of forks.
    pub fn fork_after(&self, spent: u64) -> Budget {
        Budget {
            ticks: spent,
            ..self.clone()
        }
    }

    /// The same deadline with no tick limit.
    pub fn clock_only(&self) -> Budget {
        Budget {
            deadline: self.deadline,
            ..Budget::unlimited()
        }
    }

    pub fn ticks(&self) -> u64 {
        self.ticks
    }

    pub fn tick(&mut self) -> Result<()> {
        self.ticks += 1;
        if let Some(max) = self.max_ticks {
            if self.ticks > max {
                return Err(Error::BudgetExceeded);
            }
        }
        if self.ticks & 0xfff == 0 {
            self.check_clock()?;
        }
        Ok(())
    }

    pub fn check_clock(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tick_limit() {
        let mut b = Budget::with_ticks(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::BudgetExceeded));
    }

    #[test]
    fn expired_deadline() {
        let b = Budget::with_time(Duration::ZERO);
        assert_eq!(b.check_clock(), Err(Error::BudgetExceeded));
        assert!(Budget::unlimited().check_clock().is_ok());
    }
}
