//! Exact arithmetic for Leibniz-additive arithmetic functions.
//!
//! A function `f` on the positive integers is L-additive when there is a
//! completely multiplicative `h` with `f(mn) = f(m) h(n) + f(n) h(m)`. The
//! arithmetic derivative `D` is the model case, with `h = N`. This crate
//! evaluates such functions exactly over the rationals, builds them from
//! values at primes, convolves them, and sweeps their identities over
//! finite ranges.

pub mod arith;
pub mod cli;
pub mod dirichlet;
mod error;
pub mod fnspec;
pub mod numtheory;
pub mod verify;

pub use arith::ArithFunction;
pub use error::{Error, Location, Result};
pub use numtheory::{Factorization, Natural, PrimeSieve, Rational};
