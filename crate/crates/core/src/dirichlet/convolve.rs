use crate::arith::ArithFunction;
use crate::error::{zero_argument, Result};
use crate::numtheory::{divisors, factorize, Natural, PrimeSieve, Rational};

use super::table::ValueTable;

/// `(u * v)(n) = sum_{d | n} u(d) v(n/d)`, over the divisors of `n`.
pub fn convolve_point(
    u: &ArithFunction,
    v: &ArithFunction,
    n: &Natural,
    sieve: &PrimeSieve,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for d in divisors(&factorize(n, sieve)) {
        let a = u.eval(&d, sieve)?;
        if a.is_zero() {
            continue;
        }
        let cofactor = Natural::new(n.get() / d.get())?;
        total += a * v.eval(&cofactor, sieve)?;
    }
    Ok(total)
}

pub fn convolve_point_u64(u: &ArithFunction, v: &ArithFunction, n: u64, sieve: &PrimeSieve) -> Result<Rational> {
    if n == 0 {
        return Err(zero_argument());
    }
    convolve_point(u, v, &Natural::try_from(n)?, sieve)
}

/// Dirichlet convolution of two tables on `1..=limit`: for each `a`, adds
/// `u(a) v(b)` into slot `ab` for every `b <= limit / a`.
pub fn convolve_prefix(u: &ValueTable, v: &ValueTable, limit: usize) -> Result<ValueTable> {
    u.require(limit)?;
    v.require(limit)?;
    let mut out = vec![Rational::zero(); limit];
    for a in 1..=limit {
        let ua = u.at(a);
        if ua.is_zero() {
            continue;
        }
        for b in 1..=limit / a {
            let vb = v.at(b);
            if !vb.is_zero() {
                out[a * b - 1] += ua * vb;
            }
        }
    }
    ValueTable::from_values(out)
}
