use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::assignment::PrimeAssignment;
use super::derivative::{derivative_of, log_derivative_of, partial_derivative_of};
use super::eval::{
    eval_completely_additive, eval_completely_multiplicative, eval_l_additive, LAdditivePair,
};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, factorize, is_prime, Factorization, Natural, PrimeSieve, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Builtin {
    /// Arithmetic derivative.
    D,
    /// Partial derivative with respect to a prime.
    Dp(Natural),
    /// Logarithmic derivative `D(n)/n`.
    Ld,
    /// `N(n) = n`
    N,
    /// `E(n) = 1`
    E,
    /// Convolution identity: 1 at `n = 1`, 0 elsewhere.
    Eps,
    /// Number of divisors.
    Tau,
}

/// What is statically known about a function's algebraic class.
#[derive(Clone, Debug)]
pub enum FunctionClass {
    /// L-additive with the given completely multiplicative part. Completely
    /// additive functions land here with `h = E`.
    LAdditive(ArithFunction),
    CompletelyMultiplicative,
    General,
}

type EvalFn = dyn Fn(&Natural, &PrimeSieve) -> Result<Rational> + Send + Sync;

/// A user-supplied function with a declared class.
#[derive(Clone)]
pub struct CustomFn {
    name: String,
    class: Box<FunctionClass>,
    func: Arc<EvalFn>,
}

impl fmt::Debug for CustomFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomFn").field("name", &self.name).finish_non_exhaustive()
    }
}

/// An evaluatable arithmetic function with exact rational values.
#[derive(Clone, Debug)]
pub enum ArithFunction {
    Builtin(Builtin),
    CompletelyAdditive(PrimeAssignment),
    CompletelyMultiplicative(PrimeAssignment),
    /// Given by `f` at primes and `h`; `h` may vanish where `f` does not.
    LAdditive {
        f_at_primes: PrimeAssignment,
        h: PrimeAssignment,
    },
    /// Given by the pair `f = g h`.
    Pair(LAdditivePair),
    Convolution(Arc<ArithFunction>, Arc<ArithFunction>),
    PointwiseProduct(Arc<ArithFunction>, Arc<ArithFunction>),
    Composition {
        outer: Arc<ArithFunction>,
        inner: Arc<ArithFunction>,
    },
    Custom(CustomFn),
}

impl ArithFunction {
    pub fn derivative() -> Self {
        ArithFunction::Builtin(Builtin::D)
    }

    pub fn partial(p: Natural) -> Result<Self> {
        if !is_prime(p.get()) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(ArithFunction::Builtin(Builtin::Dp(p)))
    }

    pub fn log_derivative() -> Self {
        ArithFunction::Builtin(Builtin::Ld)
    }

    pub fn identity() -> Self {
        ArithFunction::Builtin(Builtin::N)
    }

    pub fn ones() -> Self {
        ArithFunction::Builtin(Builtin::E)
    }

    pub fn unit() -> Self {
        ArithFunction::Builtin(Builtin::Eps)
    }

    pub fn tau() -> Self {
        ArithFunction::Builtin(Builtin::Tau)
    }

    pub fn zero() -> Self {
        ArithFunction::CompletelyAdditive(PrimeAssignment::constant(0))
    }

    pub fn l_additive(f_at_primes: PrimeAssignment, h: PrimeAssignment) -> Self {
        ArithFunction::LAdditive { f_at_primes, h }
    }

    pub fn pair(g: PrimeAssignment, h: PrimeAssignment) -> Self {
        ArithFunction::Pair(LAdditivePair::new(g, h))
    }

    /// `n -> n^k`.
    pub fn power(k: u32) -> Self {
        match k {
            0 => Self::ones(),
            1 => Self::identity(),
            // p -> p^k has no default rule, so spell it as a product of N's
            k => (1..k).fold(Self::identity(), |f, _| Self::product(f, Self::identity())),
        }
    }

    pub fn convolution(u: ArithFunction, v: ArithFunction) -> Self {
        ArithFunction::Convolution(Arc::new(u), Arc::new(v))
    }

    /// Unchecked pointwise product `(uv)(n) = u(n) v(n)`.
    pub fn product(u: ArithFunction, v: ArithFunction) -> Self {
        ArithFunction::PointwiseProduct(Arc::new(u), Arc::new(v))
    }

    pub fn custom<F>(name: impl Into<String>, class: FunctionClass, func: F) -> Self
    where
        F: Fn(&Natural, &PrimeSieve) -> Result<Rational> + Send + Sync + 'static,
    {
        ArithFunction::Custom(CustomFn {
            name: name.into(),
            class: Box::new(class),
            func: Arc::new(func),
        })
    }

    pub fn class(&self) -> FunctionClass {
        use ArithFunction as F;
        match self {
            F::Builtin(Builtin::D | Builtin::Dp(_)) => FunctionClass::LAdditive(Self::identity()),
            F::Builtin(Builtin::Ld) | F::CompletelyAdditive(_) => {
                FunctionClass::LAdditive(Self::ones())
            }
            F::Builtin(Builtin::N | Builtin::E | Builtin::Eps) | F::CompletelyMultiplicative(_) => {
                FunctionClass::CompletelyMultiplicative
            }
            F::Builtin(Builtin::Tau) | F::Convolution(..) => FunctionClass::General,
            F::LAdditive { h, .. } | F::Pair(LAdditivePair { h, .. }) => {
                FunctionClass::LAdditive(F::CompletelyMultiplicative(h.clone()))
            }
            F::PointwiseProduct(u, v) => match (u.class(), v.class()) {
                (FunctionClass::CompletelyMultiplicative, FunctionClass::CompletelyMultiplicative) => {
                    FunctionClass::CompletelyMultiplicative
                }
                (FunctionClass::LAdditive(h), FunctionClass::CompletelyMultiplicative) => {
                    FunctionClass::LAdditive(Self::product(h, (**v).clone()))
                }
                (FunctionClass::CompletelyMultiplicative, FunctionClass::LAdditive(h)) => {
                    FunctionClass::LAdditive(Self::product((**u).clone(), h))
                }
                _ => FunctionClass::General,
            },
            F::Composition { outer, inner } => match (outer.class(), inner.class()) {
                (FunctionClass::CompletelyMultiplicative, FunctionClass::CompletelyMultiplicative) => {
                    FunctionClass::CompletelyMultiplicative
                }
                (FunctionClass::LAdditive(h), FunctionClass::CompletelyMultiplicative) => {
                    FunctionClass::LAdditive(ArithFunction::Composition {
                        outer: Arc::new(h),
                        inner: inner.clone(),
                    })
                }
                _ => FunctionClass::General,
            },
            F::Custom(c) => (*c.class).clone(),
        }
    }

    /// The completely multiplicative part `h_f`, when `f` is statically L-additive.
    pub fn leibniz_part(&self) -> Option<ArithFunction> {
        match self.class() {
            FunctionClass::LAdditive(h) => Some(h),
            _ => None,
        }
    }

    pub fn is_completely_multiplicative(&self) -> bool {
        matches!(self.class(), FunctionClass::CompletelyMultiplicative)
    }

    pub fn eval(&self, n: &Natural, sieve: &PrimeSieve) -> Result<Rational> {
        self.eval_inner(n, None, sieve).map_err(|e| e.at_point(n.get()))
    }

    pub fn eval_u64(&self, n: u64, sieve: &PrimeSieve) -> Result<Rational> {
        self.eval(&Natural::try_from(n)?, sieve)
    }

    /// Evaluates with a factorization the caller already has.
    pub fn eval_factored(&self, fact: &Factorization, sieve: &PrimeSieve) -> Result<Rational> {
        let n = fact.value();
        self.eval_inner(&n, Some(fact), sieve).map_err(|e| e.at_point(n.get()))
    }

    fn eval_inner(
        &self,
        n: &Natural,
        fact: Option<&Factorization>,
        sieve: &PrimeSieve,
    ) -> Result<Rational> {
        use ArithFunction as F;
        let factored = || match fact {
            Some(f) => f.clone(),
            None => factorize(n, sieve),
        };
        Ok(match self {
            F::Builtin(b) => match b {
                Builtin::D => Rational::from_natural(&derivative_of(&factored())),
                Builtin::Dp(p) => Rational::from_natural(&partial_derivative_of(p, &factored())),
                Builtin::Ld => log_derivative_of(&factored()),
                Builtin::N => Rational::from_natural(n.get()),
                Builtin::E => Rational::one(),
                Builtin::Eps => {
                    if n.is_one() {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }
                Builtin::Tau => Rational::from_natural(&factored().divisor_count()),
            },
            F::CompletelyAdditive(g) => eval_completely_additive(g, &factored()),
            F::CompletelyMultiplicative(h) => eval_completely_multiplicative(h, &factored()),
            F::LAdditive { f_at_primes, h } => eval_l_additive(f_at_primes, h, &factored()),
            F::Pair(pair) => pair.eval_general(&factored()),
            F::Convolution(u, v) => {
                let mut total = Rational::zero();
                for d in divisors(&factored()) {
                    let cofactor = Natural::new(n.get() / d.get())?;
                    let a = u.eval(&d, sieve)?;
                    if a.is_zero() {
                        continue;
                    }
                    total += a * v.eval(&cofactor, sieve)?;
                }
                total
            }
            F::PointwiseProduct(u, v) => {
                let a = u.eval_inner(n, fact, sieve)?;
                if a.is_zero() {
                    return Ok(a);
                }
                a * v.eval_inner(n, fact, sieve)?
            }
            F::Composition { outer, inner } => {
                let value = inner.eval_inner(n, fact, sieve)?;
                let m = value
                    .to_biguint()
                    .filter(|m| !m.is_zero())
                    .ok_or_else(|| Error::Composition {
                        n: n.get().clone(),
                        value: value.to_string(),
                    })?;
                outer.eval(&Natural::from_nonzero(m), sieve)?
            }
            F::Custom(c) => (c.func)(n, sieve)?,
        })
    }
}

impl fmt::Display for ArithFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ArithFunction as F;
        match self {
            F::Builtin(b) => match b {
                Builtin::D => f.write_str("D"),
                Builtin::Dp(p) => write!(f, "Dp[{p}]"),
                Builtin::Ld => f.write_str("ld"),
                Builtin::N => f.write_str("N"),
                Builtin::E => f.write_str("E"),
                Builtin::Eps => f.write_str("eps"),
                Builtin::Tau => f.write_str("tau"),
            },
            F::CompletelyAdditive(g) => write!(f, "cadd{g}"),
            F::CompletelyMultiplicative(h) => write!(f, "cmul{h}"),
            // not expressible in the expression grammar, which reads ladd blocks as (g, h)
            F::LAdditive { f_at_primes, h } => write!(f, "lfun(f{f_at_primes}, h{h})"),
            F::Pair(LAdditivePair { g, h }) => write!(f, "ladd(cadd{g}, cmul{h})"),
            F::Convolution(u, v) => write!(f, "conv({u}, {v})"),
            F::PointwiseProduct(u, v) => write!(f, "mul({u}, {v})"),
            F::Composition { outer, inner } => write!(f, "compose({outer}, {inner})"),
            F::Custom(c) => f.write_str(&c.name),
        }
    }
}
