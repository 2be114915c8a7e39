//! Time budgets for Groebner basis computations.
//!
//! The core has no clock of its own; callers supply one. Each Groebner basis
//! call starts its own allowance of `per_call_ms`.

use crate::error::{Error, Result};

pub trait Clock: Sync {
    /// Monotonic milliseconds since an arbitrary origin.
    fn now_ms(&self) -> u64;
}

/// A clock that never advances; budgets never expire.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_ms(&self) -> u64 {
        0
    }
}

#[derive(Clone, Copy)]
pub struct Limits<'a> {
    pub clock: &'a dyn Clock,
    pub per_call_ms: Option<u64>,
}

impl Limits<'static> {
    pub const fn unlimited() -> Self {
        Limits {
            clock: &NoClock,
            per_call_ms: None,
        }
    }
}

impl core::fmt::Debug for Limits<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Limits").field("per_call_ms", &self.per_call_ms).finish()
    }
}

impl<'a> Limits<'a> {
    pub fn start(&self) -> Deadline<'a> {
        Deadline {
            clock: self.clock,
            budget_ms: self.per_call_ms,
            start: self.clock.now_ms(),
        }
    }
}

pub struct Deadline<'a> {
    clock: &'a dyn Clock,
    budget_ms: Option<u64>,
    start: u64,
}

impl Deadline<'_> {
    pub fn check(&self) -> Result<()> {
        match self.budget_ms {
            Some(b) if self.clock.now_ms().saturating_sub(self.start) > b => {
                Err(Error::BudgetExceeded { budget_ms: b })
            }
            _ => Ok(()),
        }
    }
}
