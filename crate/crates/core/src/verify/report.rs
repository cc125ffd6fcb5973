use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::numtheory::Rational;

/// The identities the verifier knows how to sweep.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Identity {
    /// `f(mn) = f(m) h(n) + f(n) h(m)`
    Leibniz,
    /// `f(u*v) = (fu)*v + u*(fv)`
    Schwab,
    /// `f(u*v) = (fu)*(hv) + (hu)*(fv)`
    GenSchwab,
    /// `D(u*v) = (Du)*(Nv) + (Nu)*(Dv)`
    Cor33,
    /// `f(u*u) = 2 (fu)*(hu)`
    SquareConv,
    /// `f tau = 2 (f*h)`
    Tau,
    /// `h(u*v) = (hu)*(hv)`
    Distributivity,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Leibniz,
        Identity::Schwab,
        Identity::GenSchwab,
        Identity::Cor33,
        Identity::SquareConv,
        Identity::Tau,
        Identity::Distributivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Leibniz => "leibniz",
            Identity::Schwab => "schwab",
            Identity::GenSchwab => "gen-schwab",
            Identity::Cor33 => "cor33",
            Identity::SquareConv => "square-conv",
            Identity::Tau => "tau",
            Identity::Distributivity => "distributivity",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    Point(u64),
    Pair(u64, u64),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(n) => write!(f, "n={n}"),
            Witness::Pair(m, n) => write!(f, "({m},{n})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail {
        witness: Witness,
        lhs: Rational,
        rhs: Rational,
    },
}

/// Result of sweeping one identity. A pass means no counterexample up to
/// the limit, nothing more.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    /// Human-readable description of the swept range.
    pub range: String,
    pub limit: u64,
    /// Instances evaluated; on failure, up to and including the witness.
    pub checks: u64,
    pub seed: Option<u64>,
    pub outcome: Outcome,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn witness(&self) -> Option<Witness> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail { witness, .. } => Some(*witness),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => {
                write!(f, "PASS {} checks={} limit={} seed=", self.identity, self.checks, self.limit)?;
                match self.seed {
                    Some(s) => write!(f, "{s}"),
                    None => f.write_str("-"),
                }
            }
            Outcome::Fail { witness, lhs, rhs } => {
                write!(f, "FAIL {} at {witness}: lhs={lhs} rhs={rhs}", self.identity)
            }
        }
    }
}
