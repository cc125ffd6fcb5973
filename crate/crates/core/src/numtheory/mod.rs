//! Integer and rational substrate: sieving, factorization, valuations and
//! divisor enumeration.

mod factor;
mod natural;
mod primality;
mod rational;
mod sieve;

pub use factor::{divisors, factorize, valuation, Factorization};
pub use natural::Natural;
pub use primality::{is_prime, is_prime_u64};
pub use rational::{rat_normalize, Rational};
pub use sieve::{build_sieve, PrimeSieve, DEFAULT_SIEVE_LIMIT};
