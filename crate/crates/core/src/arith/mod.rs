//! Completely additive, completely multiplicative and L-additive functions.

mod assignment;
mod construct;
mod derivative;
mod eval;
mod function;

pub use assignment::{DefaultRule, PrimeAssignment};
pub use construct::{compose, decompose, pointwise_product, Decomposition, PrimeParts, PrimeStatus};
pub use derivative::{
    arithmetic_derivative, derivative_of, log_derivative, log_derivative_of, partial_derivative,
    partial_derivative_of,
};
pub use eval::{
    eval_completely_additive, eval_completely_multiplicative, eval_l_additive,
    eval_l_additive_quotient, eval_prime_power, LAdditivePair,
};
pub use function::{ArithFunction, Builtin, CustomFn, FunctionClass};
