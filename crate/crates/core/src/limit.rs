use crate::error::{Error, Result};
use crate::sets::Universe;

pub const LIMIT_ENV: &str = "SOFTROUGH_MAX_EXHAUSTIVE";

/// Largest universe for which a sweep over all `2^n` subsets is attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveLimit(pub usize);

impl ExhaustiveLimit {
    pub const DEFAULT: ExhaustiveLimit = ExhaustiveLimit(20);

    /// Reads [`LIMIT_ENV`], falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(LIMIT_ENV) {
            Ok(raw) => Self::parse(&raw),
            Err(_) => Ok(Self::DEFAULT),
        }
    }

    pub fn parse(raw: &str) -> Result<Self> {
        let value = raw.trim().parse::<usize>().map_err(|_| Error::Validation {
            field: LIMIT_ENV.to_string(),
            message: format!("expected a non-negative integer, got {raw:?}"),
        })?;
        Ok(Self(value.min(Universe::CAPACITY)))
    }

    pub fn check(self, size: usize) -> Result<()> {
        if size > self.0 {
            Err(Error::UniverseTooLarge {
                size,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for ExhaustiveLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}
