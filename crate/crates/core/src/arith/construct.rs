//! Closure constructions and recovery of the `(g, h)` representation.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::assignment::PrimeAssignment;
use super::eval::LAdditivePair;
use super::function::ArithFunction;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, Factorization, Natural, PrimeSieve, Rational};

/// `uv` for `v` completely multiplicative. When `u` is L-additive the result
/// is L-additive with `h = h_u * v`.
pub fn pointwise_product(u: ArithFunction, v: ArithFunction) -> Result<ArithFunction> {
    if !v.is_completely_multiplicative() {
        return Err(Error::Construction(format!(
            "mul: right factor {v} is not completely multiplicative"
        )));
    }
    Ok(ArithFunction::product(u, v))
}

/// `v o u` for `u` completely multiplicative. When `v` is L-additive the
/// result is L-additive with `h = h_v o u`. Integrality of `u` is checked
/// per evaluation.
pub fn compose(v: ArithFunction, u: ArithFunction) -> Result<ArithFunction> {
    if !u.is_completely_multiplicative() {
        return Err(Error::Construction(format!(
            "compose: inner function {u} is not completely multiplicative"
        )));
    }
    Ok(ArithFunction::Composition {
        outer: Arc::new(v),
        inner: Arc::new(u),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeStatus {
    /// `f(p) != 0` and `h(p) != 0`; `g(p) = f(p)/h(p)`.
    Determined,
    /// `f(p) = 0`, so `h(p)` is not pinned down by `f`.
    Indeterminate,
    /// `f(p) != 0` but `f(p^2) = 0`, so `h(p) = 0` and no `g` exists at `p`.
    NoQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeParts {
    pub f: Rational,
    /// `None` when indeterminate.
    pub h: Option<Rational>,
    /// Zero unless determined.
    pub g: Rational,
    pub status: PrimeStatus,
}

/// Prime-by-prime recovery of `h_f` and `g_f` from `f(p)` and `f(p^2)`.
#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    parts: BTreeMap<Natural, PrimeParts>,
}

impl Decomposition {
    pub fn get(&self, p: &Natural) -> Option<&PrimeParts> {
        self.parts.get(p)
    }

    pub fn get_u64(&self, p: u64) -> Option<&PrimeParts> {
        self.parts.get(&Natural::try_from(p).ok()?)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Natural, &PrimeParts)> {
        self.parts.iter()
    }

    pub fn is_fully_determined(&self) -> bool {
        self.parts.values().all(|p| p.status == PrimeStatus::Determined)
    }

    /// Values of `f` at the decomposed primes; zero elsewhere.
    pub fn f_at_primes(&self) -> PrimeAssignment {
        let mut pa = PrimeAssignment::constant(0);
        for (p, parts) in &self.parts {
            pa.set(p.clone(), parts.f.clone()).expect("keys are prime");
        }
        pa
    }

    /// Recovered `h`; indeterminate primes and primes outside the set map to 1.
    pub fn h_assignment(&self) -> PrimeAssignment {
        let mut pa = PrimeAssignment::constant(1);
        for (p, parts) in &self.parts {
            if let Some(h) = &parts.h {
                pa.set(p.clone(), h.clone()).expect("keys are prime");
            }
        }
        pa
    }

    /// The `(g, h)` pair over the decomposed primes, if every prime is determined.
    pub fn to_pair(&self) -> Option<LAdditivePair> {
        if !self.is_fully_determined() {
            return None;
        }
        let mut g = PrimeAssignment::constant(0);
        for (p, parts) in &self.parts {
            g.set(p.clone(), parts.g.clone()).expect("keys are prime");
        }
        Some(LAdditivePair::new(g, self.h_assignment()))
    }
}

/// Recovers `h(p) = f(p^2) / (2 f(p))` and `g(p) = f(p) / h(p)` at each prime.
pub fn decompose(f: &ArithFunction, primes: &[Natural], sieve: &PrimeSieve) -> Result<Decomposition> {
    let mut parts = BTreeMap::new();
    for p in primes {
        if !is_prime(p.get()) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        let p_fact = Factorization::from_prime_powers([(p.get().clone(), 1)])?;
        let f_p = f.eval_factored(&p_fact, sieve)?;
        let entry = if f_p.is_zero() {
            PrimeParts {
                f: f_p,
                h: None,
                g: Rational::zero(),
                status: PrimeStatus::Indeterminate,
            }
        } else {
            let f_p2 = f.eval_factored(&p_fact.pow(2), sieve)?;
            let h = f_p2.checked_div(&(&f_p * &Rational::from(2)))?;
            if h.is_zero() {
                PrimeParts {
                    f: f_p,
                    h: Some(h),
                    g: Rational::zero(),
                    status: PrimeStatus::NoQuotient,
                }
            } else {
                PrimeParts {
                    g: f_p.checked_div(&h)?,
                    f: f_p,
                    h: Some(h),
                    status: PrimeStatus::Determined,
                }
            }
        };
        parts.insert(p.clone(), entry);
    }
    Ok(Decomposition { parts })
}
