use crate::arith::ArithFunction;
use crate::dirichlet::ValueTable;
use crate::error::{Error, Result};
use crate::numtheory::PrimeSieve;

use super::random::random_integer_table;
use super::report::{Identity, IdentityReport};
use super::{identities as id, DEFAULT_PAIR_LIMIT, DEFAULT_TABLE_LIMIT};

/// Inputs for [`run`]. Missing `h` falls back to the statically known
/// `h_f` of `f`; missing tables are drawn from `seed` (`u`) and `seed + 1` (`v`).
#[derive(Clone, Debug)]
pub struct Sweep {
    pub identity: Identity,
    pub f: Option<ArithFunction>,
    pub h: Option<ArithFunction>,
    pub u: Option<ValueTable>,
    pub v: Option<ValueTable>,
    /// `maxMN` for the Leibniz sweep, table limit otherwise.
    pub limit: Option<u64>,
    pub seed: u64,
}

impl Sweep {
    pub fn new(identity: Identity) -> Self {
        Sweep {
            identity,
            f: None,
            h: None,
            u: None,
            v: None,
            limit: None,
            seed: 0,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit.unwrap_or(match self.identity {
            Identity::Leibniz => DEFAULT_PAIR_LIMIT,
            _ => DEFAULT_TABLE_LIMIT as u64,
        })
    }

    fn f(&self) -> Result<&ArithFunction> {
        self.f
            .as_ref()
            .ok_or_else(|| Error::MissingArgument(format!("{} needs a function f", self.identity)))
    }

    fn h(&self, needs_f: bool) -> Result<ArithFunction> {
        if let Some(h) = &self.h {
            return Ok(h.clone());
        }
        if !needs_f {
            return Err(Error::MissingArgument(format!("{} needs h", self.identity)));
        }
        let f = self.f()?;
        f.leibniz_part().ok_or_else(|| {
            Error::MissingArgument(format!("{} needs h; none is known for {f}", self.identity))
        })
    }
}

/// Runs one sweep. The report carries the sweep's seed.
pub fn run(sweep: &Sweep, sieve: &PrimeSieve) -> Result<IdentityReport> {
    let limit = sweep.limit();
    if sweep.identity == Identity::Leibniz {
        let report = id::verify_leibniz(sweep.f()?, &sweep.h(true)?, limit, sieve)?;
        return Ok(report.with_seed(sweep.seed));
    }
    let limit = usize::try_from(limit).map_err(|_| Error::domain(format!("limit {limit} is too large")))?;
    let table = |t: &Option<ValueTable>, seed: u64| match t {
        Some(t) => t.clone(),
        None => random_integer_table(limit, seed),
    };
    let u = table(&sweep.u, sweep.seed);
    let v = table(&sweep.v, sweep.seed.wrapping_add(1));
    let report = match sweep.identity {
        Identity::Leibniz => unreachable!("handled above"),
        Identity::Schwab => id::verify_schwab(sweep.f()?, &u, &v, limit, sieve)?,
        Identity::GenSchwab => id::verify_gen_schwab(sweep.f()?, &sweep.h(true)?, &u, &v, limit, sieve)?,
        Identity::Cor33 => id::verify_cor33(&u, &v, limit, sieve)?,
        Identity::SquareConv => id::verify_square_conv(sweep.f()?, &sweep.h(true)?, &u, limit, sieve)?,
        Identity::Tau => id::verify_tau_identity(sweep.f()?, &sweep.h(true)?, limit, sieve)?,
        Identity::Distributivity => id::verify_distributivity(&sweep.h(false)?, &u, &v, limit, sieve)?,
    };
    Ok(report.with_seed(sweep.seed))
}
