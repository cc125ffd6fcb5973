//! Finite-range sweeps of convolution and Leibniz-rule identities.

use crate::arith::ArithFunction;
use crate::dirichlet::{convolve_prefix, tabulate, ValueTable};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, Natural, PrimeSieve, Rational};

use super::report::{Identity, IdentityReport, Outcome, Witness};

fn point_range(limit: usize) -> String {
    format!("1 <= n <= {limit}")
}

/// Compares two tables on `1..=limit` in ascending `n`.
fn compare_tables(identity: Identity, lhs: &ValueTable, rhs: &ValueTable, limit: usize) -> IdentityReport {
    let mut report = IdentityReport {
        identity,
        range: point_range(limit),
        limit: limit as u64,
        checks: 0,
        seed: None,
        outcome: Outcome::Pass,
    };
    for n in 1..=limit {
        report.checks += 1;
        let (l, r) = (lhs.at(n), rhs.at(n));
        if l != r {
            report.outcome = Outcome::Fail {
                witness: Witness::Point(n as u64),
                lhs: l.clone(),
                rhs: r.clone(),
            };
            break;
        }
    }
    report
}

fn check_limit(limit: usize, tables: &[&ValueTable]) -> Result<()> {
    if limit == 0 {
        return Err(Error::domain("limit must be at least 1"));
    }
    for t in tables {
        if t.limit() < limit {
            return Err(Error::domain(format!(
                "table covers 1..={} but the sweep needs 1..={limit}",
                t.limit()
            )));
        }
    }
    Ok(())
}

/// `f(mn) = f(m) h(n) + f(n) h(m)` for `1 <= m <= n <= max_mn`, in
/// lexicographic `(m, n)` order.
pub fn verify_leibniz(
    f: &ArithFunction,
    h: &ArithFunction,
    max_mn: u64,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    if max_mn == 0 {
        return Err(Error::domain("maxMN must be at least 1"));
    }
    let eval_small = |g: &ArithFunction| -> Result<Vec<Rational>> {
        (1..=max_mn).map(|k| g.eval_u64(k, sieve)).collect()
    };
    let f_small = eval_small(f)?;
    let h_small = eval_small(h)?;
    let mut report = IdentityReport {
        identity: Identity::Leibniz,
        range: format!("1 <= m <= n <= {max_mn}"),
        limit: max_mn,
        checks: 0,
        seed: None,
        outcome: Outcome::Pass,
    };
    for m in 1..=max_mn {
        let (fm, hm) = (&f_small[m as usize - 1], &h_small[m as usize - 1]);
        let m_fact = factorize(&Natural::try_from(m)?, sieve);
        for n in m..=max_mn {
            report.checks += 1;
            let (fn_, hn) = (&f_small[n as usize - 1], &h_small[n as usize - 1]);
            let mn_fact = m_fact.mul(&factorize(&Natural::try_from(n)?, sieve));
            let lhs = f.eval_factored(&mn_fact, sieve).map_err(|e| e.at_pair(m, n))?;
            let rhs = fm * hn + fn_ * hm;
            if lhs != rhs {
                report.outcome = Outcome::Fail {
                    witness: Witness::Pair(m, n),
                    lhs,
                    rhs,
                };
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// `f(u*v) = (fu)*v + u*(fv)`.
pub fn verify_schwab(
    f: &ArithFunction,
    u: &ValueTable,
    v: &ValueTable,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[u, v])?;
    let ft = tabulate(f, limit, sieve)?;
    let lhs = ft.pointwise_mul(&convolve_prefix(u, v, limit)?)?;
    let rhs = convolve_prefix(&ft.pointwise_mul(u)?, v, limit)?
        .pointwise_add(&convolve_prefix(u, &ft.pointwise_mul(v)?, limit)?)?;
    Ok(compare_tables(Identity::Schwab, &lhs, &rhs, limit))
}

/// `f(u*v) = (fu)*(hv) + (hu)*(fv)`; `h` must be nonzero on `1..=limit`.
pub fn verify_gen_schwab(
    f: &ArithFunction,
    h: &ArithFunction,
    u: &ValueTable,
    v: &ValueTable,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[u, v])?;
    let ft = tabulate(f, limit, sieve)?;
    let ht = tabulate(h, limit, sieve)?;
    if let Some((n, _)) = ht.iter().find(|(_, x)| x.is_zero()) {
        return Err(Error::Precondition(format!("h vanishes at n={n}; h must be nonzero-valued")));
    }
    Ok(gen_schwab_tables(Identity::GenSchwab, &ft, &ht, u, v, limit)?)
}

fn gen_schwab_tables(
    identity: Identity,
    ft: &ValueTable,
    ht: &ValueTable,
    u: &ValueTable,
    v: &ValueTable,
    limit: usize,
) -> Result<IdentityReport> {
    let lhs = ft.pointwise_mul(&convolve_prefix(u, v, limit)?)?;
    let rhs = convolve_prefix(&ft.pointwise_mul(u)?, &ht.pointwise_mul(v)?, limit)?
        .pointwise_add(&convolve_prefix(&ht.pointwise_mul(u)?, &ft.pointwise_mul(v)?, limit)?)?;
    Ok(compare_tables(identity, &lhs, &rhs, limit))
}

/// `D(u*v) = (Du)*(Nv) + (Nu)*(Dv)`.
pub fn verify_cor33(
    u: &ValueTable,
    v: &ValueTable,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[u, v])?;
    let dt = tabulate(&ArithFunction::derivative(), limit, sieve)?;
    let nt = tabulate(&ArithFunction::identity(), limit, sieve)?;
    gen_schwab_tables(Identity::Cor33, &dt, &nt, u, v, limit)
}

/// `f(u*u) = 2 [(fu)*(hu)]`.
pub fn verify_square_conv(
    f: &ArithFunction,
    h: &ArithFunction,
    u: &ValueTable,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[u])?;
    let ft = tabulate(f, limit, sieve)?;
    let ht = tabulate(h, limit, sieve)?;
    let lhs = ft.pointwise_mul(&convolve_prefix(u, u, limit)?)?;
    let rhs = convolve_prefix(&ft.pointwise_mul(u)?, &ht.pointwise_mul(u)?, limit)?
        .scale(&Rational::from(2));
    Ok(compare_tables(Identity::SquareConv, &lhs, &rhs, limit))
}

/// `f tau = 2 (f*h)`.
pub fn verify_tau_identity(
    f: &ArithFunction,
    h: &ArithFunction,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[])?;
    let ft = tabulate(f, limit, sieve)?;
    let ht = tabulate(h, limit, sieve)?;
    let tau = tabulate(&ArithFunction::tau(), limit, sieve)?;
    let lhs = ft.pointwise_mul(&tau)?;
    let rhs = convolve_prefix(&ft, &ht, limit)?.scale(&Rational::from(2));
    Ok(compare_tables(Identity::Tau, &lhs, &rhs, limit))
}

/// `h(u*v) = (hu)*(hv)`, which holds for completely multiplicative `h`.
pub fn verify_distributivity(
    h: &ArithFunction,
    u: &ValueTable,
    v: &ValueTable,
    limit: usize,
    sieve: &PrimeSieve,
) -> Result<IdentityReport> {
    check_limit(limit, &[u, v])?;
    let ht = tabulate(h, limit, sieve)?;
    let lhs = ht.pointwise_mul(&convolve_prefix(u, v, limit)?)?;
    let rhs = convolve_prefix(&ht.pointwise_mul(u)?, &ht.pointwise_mul(v)?, limit)?;
    Ok(compare_tables(Identity::Distributivity, &lhs, &rhs, limit))
}
