//! The arithmetic derivative and its relatives.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, is_prime, Factorization, Natural, PrimeSieve, Rational};

/// `ld(n) = sum_p nu_p(n) / p`.
pub fn log_derivative_of(fact: &Factorization) -> Rational {
    fact.factors()
        .iter()
        .map(|(p, e)| {
            Rational::from_natural(&BigUint::from(*e))
                .checked_div(&Rational::from_natural(p.get()))
                .expect("primes are nonzero")
        })
        .sum()
}

/// `n' = n * sum_p nu_p(n) / p`, checked to be an integer.
pub fn derivative_of(fact: &Factorization) -> BigUint {
    let n = Rational::from_natural(fact.value().get());
    let value = n * log_derivative_of(fact);
    value
        .to_biguint()
        .unwrap_or_else(|| panic!("arithmetic derivative of {fact} is not a nonnegative integer: {value}"))
}

pub fn arithmetic_derivative(n: &Natural, sieve: &PrimeSieve) -> BigUint {
    derivative_of(&factorize(n, sieve))
}

pub fn log_derivative(n: &Natural, sieve: &PrimeSieve) -> Rational {
    log_derivative_of(&factorize(n, sieve))
}

/// `D_p(n) = nu_p(n) * n / p`.
pub fn partial_derivative_of(p: &Natural, fact: &Factorization) -> BigUint {
    let e = fact.exponent_of(p.get());
    if e == 0 {
        return BigUint::zero();
    }
    let value = Rational::from_natural(fact.value().get())
        * Rational::from_natural(&BigUint::from(e))
        * Rational::from_natural(p.get()).recip().expect("primes are nonzero");
    value
        .to_biguint()
        .unwrap_or_else(|| panic!("partial derivative D_{p}({fact}) is not an integer: {value}"))
}

pub fn partial_derivative(p: &Natural, n: &Natural, sieve: &PrimeSieve) -> Result<BigUint> {
    if !is_prime(p.get()) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    Ok(partial_derivative_of(p, &factorize(n, sieve)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{eval_l_additive, PrimeAssignment};
    use crate::numtheory::{build_sieve, rat_normalize};

    fn nat(n: u64) -> Natural {
        Natural::try_from(n).unwrap()
    }

    /// Axioms only: p' = 1 and (ab)' = a'b + ab'.
    fn leibniz_oracle(n: u64) -> u64 {
        if n == 1 {
            return 0;
        }
        let q = (2..).find(|d| n % d == 0 || d * d > n).unwrap();
        if n % q != 0 {
            return 1;
        }
        let m = n / q;
        if m == 1 {
            return 1;
        }
        leibniz_oracle(q) * m + q * leibniz_oracle(m)
    }

    #[test]
    fn derivative_examples() {
        let s = build_sieve(100).unwrap();
        let d = |n| arithmetic_derivative(&nat(n), &s);
        assert_eq!(d(1), 0u32.into());
        assert_eq!(d(5), 1u32.into());
        assert_eq!(d(6), 5u32.into());
        assert_eq!(d(8), 12u32.into());
        assert_eq!(leibniz_oracle(6), 5);
        assert_eq!(leibniz_oracle(12), 16);
    }

    #[test]
    fn derivative_matches_oracle() {
        let s = build_sieve(20_000).unwrap();
        for n in 1..=20_000u64 {
            assert_eq!(arithmetic_derivative(&nat(n), &s), BigUint::from(leibniz_oracle(n)), "n={n}");
        }
    }

    #[test]
    fn leibniz_rule_sweep() {
        let s = build_sieve(90_000).unwrap();
        let d = |n: u64| arithmetic_derivative(&nat(n), &s);
        for m in 1..=300u64 {
            for n in 1..=300u64 {
                assert_eq!(d(m * n), d(m) * n + d(n) * m, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn partial_examples() {
        let s = build_sieve(100).unwrap();
        let dp = |p, n| partial_derivative(&nat(p), &nat(n), &s).unwrap();
        assert_eq!(dp(5, 12), 0u32.into());
        assert_eq!(dp(2, 12), 12u32.into());
        assert_eq!(dp(3, 18), 12u32.into());
        assert!(partial_derivative(&nat(4), &nat(12), &s).is_err());

        // pair representation of D_p: g(p) = 1/p, g(q) = 0, h = N
        for p in [2u64, 3] {
            let f = PrimeAssignment::constant(0).with(p, 1).unwrap();
            let h = PrimeAssignment::identity();
            for n in [12u64, 18] {
                let via_pair = eval_l_additive(&f, &h, &factorize(&nat(n), &s));
                assert_eq!(Rational::from_natural(&dp(p, n)), via_pair);
            }
        }
    }

    #[test]
    fn partials_sum_to_derivative() {
        let s = build_sieve(10_000).unwrap();
        for n in 1..=10_000u64 {
            let fa = factorize(&nat(n), &s);
            let total: BigUint = fa.factors().iter().map(|(p, _)| partial_derivative_of(p, &fa)).sum();
            assert_eq!(total, derivative_of(&fa), "n={n}");
        }
    }

    #[test]
    fn log_derivative_examples() {
        let s = build_sieve(100).unwrap();
        assert_eq!(log_derivative(&nat(1), &s), Rational::zero());
        assert_eq!(log_derivative(&nat(7), &s), rat_normalize(1, 7).unwrap());
        assert_eq!(log_derivative(&nat(6), &s), rat_normalize(5, 6).unwrap());
    }

    #[test]
    fn log_derivative_is_completely_additive() {
        let s = build_sieve(90_000).unwrap();
        let ld = |n: u64| log_derivative(&nat(n), &s);
        for m in 1..=300u64 {
            for n in (1..=300u64).step_by(7) {
                assert_eq!(ld(m * n), ld(m) + ld(n), "m={m} n={n}");
            }
        }
    }
}
