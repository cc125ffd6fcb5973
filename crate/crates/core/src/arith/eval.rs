//! Evaluation from values at primes.

use crate::error::{Error, Result};
use crate::numtheory::{Factorization, Natural, Rational};

use super::assignment::PrimeAssignment;

/// `sum n_i * g(p_i)`; zero at `n = 1`.
pub fn eval_completely_additive(g: &PrimeAssignment, fact: &Factorization) -> Rational {
    fact.factors()
        .iter()
        .map(|(p, e)| g.value_at(p) * Rational::from(*e as i64))
        .sum()
}

/// `prod h(p_i)^n_i`; one at `n = 1`.
pub fn eval_completely_multiplicative(h: &PrimeAssignment, fact: &Factorization) -> Rational {
    fact.factors()
        .iter()
        .map(|(p, e)| h.value_at(p).pow(*e))
        .product()
}

/// `f(p^k) = k * h(p)^(k-1) * f(p)` for `k >= 1`.
pub fn eval_prime_power(f_p: &Rational, h_p: &Rational, k: u32) -> Rational {
    debug_assert!(k >= 1);
    h_p.pow(k - 1) * f_p * Rational::from(k as i64)
}

/// Evaluates the L-additive function with values `f` at primes and
/// completely multiplicative part `h`:
///
/// `f(n) = sum_i f(p_i^n_i) * prod_{j != i} h(p_j)^n_j`
///
/// The products over `j != i` come from prefix and suffix products, so no
/// division happens and `h` may vanish at primes dividing `n`.
pub fn eval_l_additive(
    f: &PrimeAssignment,
    h: &PrimeAssignment,
    fact: &Factorization,
) -> Rational {
    eval_l_additive_with(|p| f.value_at(p), |p| h.value_at(p), fact)
}

pub(crate) fn eval_l_additive_with(
    f: impl Fn(&Natural) -> Rational,
    h: impl Fn(&Natural) -> Rational,
    fact: &Factorization,
) -> Rational {
    let factors = fact.factors();
    let s = factors.len();
    if s == 0 {
        return Rational::zero();
    }
    let h_at: Vec<Rational> = factors.iter().map(|(p, _)| h(p)).collect();
    let h_powers: Vec<Rational> = h_at.iter().zip(factors).map(|(hp, (_, e))| hp.pow(*e)).collect();

    // suffix[i] = prod_{j >= i} h_powers[j]
    let mut suffix = vec![Rational::one(); s + 1];
    for i in (0..s).rev() {
        suffix[i] = &suffix[i + 1] * &h_powers[i];
    }
    let mut prefix = Rational::one();
    let mut total = Rational::zero();
    for (i, (p, e)) in factors.iter().enumerate() {
        let local = eval_prime_power(&f(p), &h_at[i], *e);
        if !local.is_zero() {
            total += local * &prefix * &suffix[i + 1];
        }
        prefix *= &h_powers[i];
    }
    total
}

/// `f(n) = h(n) * sum_i n_i f(p_i) / h(p_i)`, defined only when `h` is
/// nonzero at every prime dividing `n`.
pub fn eval_l_additive_quotient(
    f: &PrimeAssignment,
    h: &PrimeAssignment,
    fact: &Factorization,
) -> Result<Rational> {
    let mut sum = Rational::zero();
    for (p, e) in fact.factors() {
        let h_p = h.value_at(p);
        if h_p.is_zero() {
            return Err(Error::Precondition(format!(
                "h({p}) = 0; the quotient formula needs h nonzero at every prime factor, \
                 use eval_l_additive instead"
            )));
        }
        sum += f.value_at(p).checked_div(&h_p)? * Rational::from(*e as i64);
    }
    Ok(eval_completely_multiplicative(h, fact) * sum)
}

/// An L-additive function `f = g * h` given by its completely additive part
/// `g` and completely multiplicative part `h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LAdditivePair {
    pub g: PrimeAssignment,
    pub h: PrimeAssignment,
}

impl LAdditivePair {
    pub fn new(g: PrimeAssignment, h: PrimeAssignment) -> Self {
        LAdditivePair { g, h }
    }

    /// `g(n) h(n)`.
    pub fn eval(&self, fact: &Factorization) -> Rational {
        eval_completely_additive(&self.g, fact) * eval_completely_multiplicative(&self.h, fact)
    }

    /// `f(p) = g(p) h(p)`.
    pub fn f_at(&self, p: &Natural) -> Rational {
        self.g.value_at(p) * self.h.value_at(p)
    }

    /// Same value as [`eval`](Self::eval), through the general product-sum
    /// formula on `f(p) = g(p) h(p)`.
    pub fn eval_general(&self, fact: &Factorization) -> Rational {
        eval_l_additive_with(|p| self.f_at(p), |p| self.h.value_at(p), fact)
    }
}
