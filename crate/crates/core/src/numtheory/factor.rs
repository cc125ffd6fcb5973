use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::natural::Natural;
use super::primality::{is_prime, is_prime_u64, pollard_rho_big, pollard_rho_u64};
use super::sieve::PrimeSieve;
use crate::error::{Error, Result};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Factorization::default()
    }

    /// Validates and canonicalizes a list of prime powers. Repeated primes merge.
    pub fn from_prime_powers(
        pairs: impl IntoIterator<Item = (BigUint, u32)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<BigUint, u32> = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(&p) {
                return Err(Error::domain(format!("{p} is not prime")));
            }
            if e > 0 {
                *merged.entry(p).or_default() += e;
            }
        }
        Ok(Factorization {
            factors: merged
                .into_iter()
                .map(|(p, e)| (Natural::from_nonzero(p), e))
                .collect(),
        })
    }

    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega_total(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.get().cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn value(&self) -> Natural {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.get().pow(*e);
        }
        Natural::from_nonzero(acc)
    }

    /// Number of divisors, the product of `(e_i + 1)`.
    pub fn divisor_count(&self) -> BigUint {
        self.factors
            .iter()
            .map(|&(_, e)| BigUint::from(e + 1))
            .product()
    }

    /// Exponent-wise product: the factorization of `self * other`.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut merged: BTreeMap<Natural, u32> = BTreeMap::new();
        for (p, e) in self.factors.iter().chain(&other.factors) {
            *merged.entry(p.clone()).or_default() += e;
        }
        Factorization {
            factors: merged.into_iter().collect(),
        }
    }

    /// The factorization of `self^k`.
    pub fn pow(&self, k: u32) -> Factorization {
        if k == 0 {
            return Factorization::one();
        }
        Factorization {
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        }
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.factors.iter().map(|(p, e)| (p.get(), e)))
            .finish()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n`, using the sieve table when `n` is in range and falling
/// back to trial division, Miller–Rabin and Pollard's rho above it.
pub fn factorize(n: &Natural, sieve: &PrimeSieve) -> Factorization {
    let mut acc: BTreeMap<BigUint, u32> = BTreeMap::new();
    match n.to_u64() {
        Some(small) => factor_u64(small, sieve, &mut acc),
        None => factor_big(n.get().clone(), sieve, &mut acc),
    }
    Factorization {
        factors: acc
            .into_iter()
            .map(|(p, e)| (Natural::from_nonzero(p), e))
            .collect(),
    }
}

fn factor_u64(mut n: u64, sieve: &PrimeSieve, acc: &mut BTreeMap<BigUint, u32>) {
    if n <= sieve.limit() as u64 {
        while n > 1 {
            let p = sieve.spf(n as usize).expect("in sieve range") as u64;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            *acc.entry(BigUint::from(p)).or_default() += e;
        }
        return;
    }
    for &p in sieve.primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            *acc.entry(BigUint::from(p)).or_default() += e;
            if n <= sieve.limit() as u64 {
                return factor_u64(n, sieve, acc);
            }
        }
    }
    split_u64(n, acc);
}

// `n` has no prime factor at or below the sieve's largest prime,
// or the trial division already reached sqrt(n).
fn split_u64(n: u64, acc: &mut BTreeMap<BigUint, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        *acc.entry(BigUint::from(n)).or_default() += 1;
        return;
    }
    let d = pollard_rho_u64(n);
    split_u64(d, acc);
    split_u64(n / d, acc);
}

fn factor_big(mut n: BigUint, sieve: &PrimeSieve, acc: &mut BTreeMap<BigUint, u32>) {
    for &p in sieve.primes() {
        let pb = BigUint::from(p);
        if (&n % &pb).to_u32() == Some(0) {
            let mut e = 0;
            while (&n % &pb).to_u32() == Some(0) {
                n /= &pb;
                e += 1;
            }
            *acc.entry(pb).or_default() += e;
            if let Some(small) = n.to_u64() {
                return factor_u64(small, sieve, acc);
            }
        }
    }
    split_big(n, acc);
}

fn split_big(n: BigUint, acc: &mut BTreeMap<BigUint, u32>) {
    if let Some(small) = n.to_u64() {
        return split_u64(small, acc);
    }
    if is_prime(&n) {
        *acc.entry(n).or_default() += 1;
        return;
    }
    // rho needs about sqrt(p) steps on p^k, so peel perfect powers first
    if let Some((root, k)) = perfect_power(&n) {
        let mut inner = BTreeMap::new();
        split_big(root, &mut inner);
        for (p, e) in inner {
            *acc.entry(p).or_default() += e * k;
        }
        return;
    }
    let d = pollard_rho_big(&n);
    let rest = &n / &d;
    split_big(d, acc);
    split_big(rest, acc);
}

/// `(r, k)` with `r^k = n` and `k >= 2` maximal-first, if `n` is a perfect power.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    (2..=bits).rev().find_map(|k| {
        let r = n.nth_root(k);
        (r > BigUint::one() && &r.pow(k) == n).then_some((r, k))
    })
}

/// Largest `k` with `p^k | n`.
pub fn valuation(n: &Natural, p: &Natural) -> Result<u32> {
    if !is_prime(p.get()) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let mut m = n.get().clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(p.get());
        if !num_traits::Zero::is_zero(&r) {
            return Ok(k);
        }
        m = q;
        k += 1;
    }
}

/// All divisors in increasing order, built by merging the sorted runs
/// `d * p^0, d * p^1, ..., d * p^e` one prime at a time.
pub fn divisors(f: &Factorization) -> Vec<Natural> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in f.factors() {
        let mut runs: Vec<Vec<BigUint>> = Vec::with_capacity(*e as usize + 1);
        runs.push(divs);
        for k in 1..=*e as usize {
            let next: Vec<BigUint> = runs[k - 1].iter().map(|d| d * p.get()).collect();
            runs.push(next);
        }
        divs = runs.into_iter().reduce(merge_sorted).unwrap_or_default();
    }
    divs.into_iter().map(Natural::from_nonzero).collect()
}

fn merge_sorted(a: Vec<BigUint>, b: Vec<BigUint>) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let take_a = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => x <= y,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        out.extend(if take_a { a.next() } else { b.next() });
    }
    out
}
