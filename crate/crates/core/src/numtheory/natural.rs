use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{zero_argument, Error, Result};

/// A positive integer of arbitrary size. Zero is not representable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn new(value: impl Into<BigUint>) -> Result<Self> {
        let value = value.into();
        if value.is_zero() {
            return Err(zero_argument());
        }
        Ok(Natural(value))
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    /// Wraps a value the caller knows is nonzero.
    pub(crate) fn from_nonzero(value: BigUint) -> Self {
        debug_assert!(!value.is_zero());
        Natural(value)
    }

    pub fn get(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl From<std::num::NonZeroU64> for Natural {
    fn from(n: std::num::NonZeroU64) -> Self {
        Natural(BigUint::from(n.get()))
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Natural::new(n)
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = BigUint::from_str(s.trim())
            .map_err(|_| Error::domain(format!("`{s}` is not a positive integer")))?;
        Natural::new(value)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero() {
        assert!(Natural::new(0u32).is_err());
        assert!("0".parse::<Natural>().is_err());
        assert!("-3".parse::<Natural>().is_err());
        assert_eq!("17".parse::<Natural>().unwrap().to_u64(), Some(17));
    }
}
