use super::ast::{Block, Combinator, DefaultValue, FnExpr};
use crate::arith::{compose, pointwise_product, ArithFunction, DefaultRule, PrimeAssignment};
use crate::error::{Error, Result};
use crate::numtheory::{Natural, Rational};

/// Resolves an expression to an evaluatable function.
pub fn build(e: &FnExpr) -> Result<ArithFunction> {
    Ok(match e {
        FnExpr::Name(name) => match name.as_str() {
            "D" => ArithFunction::derivative(),
            "N" => ArithFunction::identity(),
            "E" => ArithFunction::ones(),
            "ld" => ArithFunction::log_derivative(),
            "eps" => ArithFunction::unit(),
            "tau" => ArithFunction::tau(),
            _ => return Err(Error::UnknownIdentifier(name.clone())),
        },
        FnExpr::Dp(p) => ArithFunction::partial(Natural::new(p.clone())?)?,
        FnExpr::CAdd(b) => ArithFunction::CompletelyAdditive(assignment(b, 0)?),
        FnExpr::CMul(b) => ArithFunction::CompletelyMultiplicative(assignment(b, 1)?),
        FnExpr::Call(c, a, b) => match c {
            Combinator::Conv => ArithFunction::convolution(build(a)?, build(b)?),
            Combinator::Mul => pointwise_product(build(a)?, build(b)?)?,
            Combinator::Compose => compose(build(a)?, build(b)?)?,
            Combinator::Ladd => {
                let g = match &**a {
                    FnExpr::CAdd(block) => assignment(block, 0)?,
                    other => {
                        return Err(Error::Construction(format!(
                            "ladd: first argument must be a cadd block, got {other}"
                        )))
                    }
                };
                let h = match &**b {
                    FnExpr::CMul(block) => assignment(block, 1)?,
                    other => {
                        return Err(Error::Construction(format!(
                            "ladd: second argument must be a cmul block, got {other}"
                        )))
                    }
                };
                ArithFunction::pair(g, h)
            }
        },
    })
}

fn assignment(b: &Block, missing_default: i64) -> Result<PrimeAssignment> {
    let rule = match &b.default {
        None => DefaultRule::Constant(Rational::from(missing_default)),
        Some(DefaultValue::Ratio(r)) => DefaultRule::Constant(r.clone()),
        Some(DefaultValue::Prime) => DefaultRule::Identity,
        Some(DefaultValue::Reciprocal) => DefaultRule::Reciprocal,
    };
    let mut pa = PrimeAssignment::new(rule);
    for (p, v) in &b.pairs {
        pa.set(Natural::new(p.clone())?, v.clone())?;
    }
    Ok(pa)
}

/// Parses and builds in one step.
pub fn parse_function(input: &str) -> Result<ArithFunction> {
    build(&super::parse(input)?)
}
