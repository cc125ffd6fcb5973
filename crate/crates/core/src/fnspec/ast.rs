use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::numtheory::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Combinator {
    Conv,
    Mul,
    Compose,
    Ladd,
}

impl Combinator {
    pub fn keyword(self) -> &'static str {
        match self {
            Combinator::Conv => "conv",
            Combinator::Mul => "mul",
            Combinator::Compose => "compose",
            Combinator::Ladd => "ladd",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Some(match s {
            "conv" => Combinator::Conv,
            "mul" => Combinator::Mul,
            "compose" => Combinator::Compose,
            "ladd" => Combinator::Ladd,
            _ => return None,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DefaultValue {
    Ratio(Rational),
    /// `p`
    Prime,
    /// `1/p`
    Reciprocal,
}

/// Body of a `cadd{...}` or `cmul{...}` block. Keys are prime.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Block {
    pub pairs: BTreeMap<BigUint, Rational>,
    pub default: Option<DefaultValue>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FnExpr {
    Name(String),
    Dp(BigUint),
    CAdd(Block),
    CMul(Block),
    Call(Combinator, Box<FnExpr>, Box<FnExpr>),
}

impl FnExpr {
    pub fn call(c: Combinator, a: FnExpr, b: FnExpr) -> Self {
        FnExpr::Call(c, Box::new(a), Box::new(b))
    }
}

impl fmt::Display for DefaultValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefaultValue::Ratio(r) => write!(f, "{r}"),
            DefaultValue::Prime => f.write_str("p"),
            DefaultValue::Reciprocal => f.write_str("1/p"),
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, v)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: {v}")?;
        }
        if let Some(d) = &self.default {
            if !self.pairs.is_empty() {
                f.write_str("; ")?;
            }
            write!(f, "default {d}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for FnExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnExpr::Name(n) => f.write_str(n),
            FnExpr::Dp(p) => write!(f, "Dp[{p}]"),
            FnExpr::CAdd(b) => write!(f, "cadd{b}"),
            FnExpr::CMul(b) => write!(f, "cmul{b}"),
            FnExpr::Call(c, a, b) => write!(f, "{}({a}, {b})", c.keyword()),
        }
    }
}

/// Deterministic text form: keys ascending, `", "` separators, default last.
pub fn print_canonical(e: &FnExpr) -> String {
    e.to_string()
}
