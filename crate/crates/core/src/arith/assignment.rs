use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, Natural, Rational};

/// How a [`PrimeAssignment`] values primes that have no explicit entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DefaultRule {
    Constant(Rational),
    /// `p -> p`
    Identity,
    /// `p -> 1/p`
    Reciprocal,
}

impl DefaultRule {
    pub fn apply(&self, p: &Natural) -> Rational {
        match self {
            DefaultRule::Constant(c) => c.clone(),
            DefaultRule::Identity => Rational::from_natural(p.get()),
            DefaultRule::Reciprocal => {
                Rational::from_natural(p.get()).recip().expect("primes are nonzero")
            }
        }
    }

    pub fn is_nonzero(&self) -> bool {
        !matches!(self, DefaultRule::Constant(c) if c.is_zero())
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefaultRule::Constant(c) => write!(f, "{c}"),
            DefaultRule::Identity => f.write_str("p"),
            DefaultRule::Reciprocal => f.write_str("1/p"),
        }
    }
}

/// Values at primes: finitely many explicit entries plus a rule covering the rest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimeAssignment {
    explicit: BTreeMap<Natural, Rational>,
    default: DefaultRule,
}

impl PrimeAssignment {
    pub fn new(default: DefaultRule) -> Self {
        PrimeAssignment {
            explicit: BTreeMap::new(),
            default,
        }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Self::new(DefaultRule::Constant(c.into()))
    }

    pub fn identity() -> Self {
        Self::new(DefaultRule::Identity)
    }

    pub fn reciprocal() -> Self {
        Self::new(DefaultRule::Reciprocal)
    }

    /// Sets the value at `p`, rejecting non-primes.
    pub fn set(&mut self, p: Natural, value: Rational) -> Result<()> {
        if !is_prime(p.get()) {
            return Err(Error::domain(format!("assignment key {p} is not prime")));
        }
        self.explicit.insert(p, value);
        Ok(())
    }

    pub fn with(mut self, p: u64, value: impl Into<Rational>) -> Result<Self> {
        self.set(Natural::try_from(p)?, value.into())?;
        Ok(self)
    }

    pub fn value_at(&self, p: &Natural) -> Rational {
        match self.explicit.get(p) {
            Some(v) => v.clone(),
            None => self.default.apply(p),
        }
    }

    pub fn value_at_u64(&self, p: u64) -> Rational {
        self.value_at(&Natural::from_nonzero(BigUint::from(p)))
    }

    pub fn explicit(&self) -> &BTreeMap<Natural, Rational> {
        &self.explicit
    }

    pub fn default_rule(&self) -> &DefaultRule {
        &self.default
    }
}

impl fmt::Display for PrimeAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, v)) in self.explicit.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: {v}")?;
        }
        if !self.explicit.is_empty() {
            f.write_str("; ")?;
        }
        write!(f, "default {}}}", self.default)
    }
}
