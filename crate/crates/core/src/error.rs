use thiserror::Error;

use crate::region::LatticePoint;

/// Everything that can go wrong in this crate.
///
/// Errors fall into three broad classes (see [`ErrorClass`]) which the CLI
/// maps onto its exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{x} has no inverse modulo {m}")]
    NoInverse { x: i64, m: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("point ({}, {}) is neither blue nor red", .0.x, .0.y)]
    NotInRegion(LatticePoint),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input.
    Domain,
    /// Budget, magnitude or I/O limits.
    Resource,
    /// A branch the closed form claims is unreachable was reached.
    Invariant,
}

impl FrobError {
    pub fn class(&self) -> ErrorClass {
        match self {
            FrobError::Degenerate(_)
            | FrobError::NoInverse { .. }
            | FrobError::Domain(_)
            | FrobError::NotInRegion(_) => ErrorClass::Domain,
            FrobError::Resource(_) => ErrorClass::Resource,
            FrobError::Invariant(_) => ErrorClass::Invariant,
        }
    }
}

pub type Result<T, E = FrobError> = std::result::Result<T, E>;

/// Cap on how many lattice points / residues a single call may materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Reads `FROB_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Budget> {
        match std::env::var("FROB_BUDGET") {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .map(Budget)
                .map_err(|_| FrobError::Domain(format!("FROB_BUDGET is not an integer: {raw:?}"))),
            Err(_) => Ok(Budget::DEFAULT),
        }
    }

    pub(crate) fn check(self, needed: i128, what: &str) -> Result<()> {
        if needed > self.0 as i128 {
            return Err(FrobError::Resource(format!(
                "{what} needs {needed} points, budget is {}",
                self.0
            )));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
