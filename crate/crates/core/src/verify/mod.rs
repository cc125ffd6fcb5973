//! Exact finite-range checks of identities for L-additive functions.
//!
//! Every sweep compares exact rationals, so a failure is a genuine
//! counterexample and a pass means "none up to the limit". Witnesses are the
//! first failure in ascending `n` or lexicographic `(m, n)` order.

mod dispatch;
mod identities;
pub mod random;
mod report;

pub use identities::{
    verify_cor33, verify_distributivity, verify_gen_schwab, verify_leibniz, verify_schwab,
    verify_square_conv, verify_tau_identity,
};
pub use dispatch::{run, Sweep};
pub use report::{Identity, IdentityReport, Outcome, Witness};

/// Default `maxMN` for pair sweeps.
pub const DEFAULT_PAIR_LIMIT: u64 = 200;
/// Default limit for table sweeps.
pub const DEFAULT_TABLE_LIMIT: usize = 500;

#[cfg(test)]
mod tests;
