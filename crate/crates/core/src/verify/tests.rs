use super::random::{random_integer_table, random_prime_data};
use super::*;
use crate::arith::{ArithFunction, FunctionClass, PrimeAssignment};
use crate::dirichlet::{tabulate, ValueTable};
use crate::numtheory::{build_sieve, PrimeSieve, Rational};

fn sieve() -> PrimeSieve {
    build_sieve(100_000).unwrap()
}

fn ones(limit: usize) -> ValueTable {
    ValueTable::from_fn(limit, |_| Rational::one()).unwrap()
}

fn unit(limit: usize) -> ValueTable {
    ValueTable::from_fn(limit, |n| if n == 1 { Rational::one() } else { Rational::zero() }).unwrap()
}

/// First `n` where `f(n) tau(n) != 2 sum_{d|n} f(d) h(n/d)`, by scanning.
fn brute_tau_witness(f: &ArithFunction, h: &ArithFunction, limit: u64, s: &PrimeSieve) -> Option<u64> {
    (1..=limit).find(|&n| {
        let divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let lhs = f.eval_u64(n, s).unwrap() * Rational::from(divs.len() as i64);
        let rhs: Rational = divs
            .iter()
            .map(|&d| f.eval_u64(d, s).unwrap() * h.eval_u64(n / d, s).unwrap())
            .sum::<Rational>()
            * Rational::from(2);
        lhs != rhs
    })
}

#[test]
fn leibniz_examples() {
    let s = sieve();
    let (d, n, e) = (ArithFunction::derivative(), ArithFunction::identity(), ArithFunction::ones());
    let r = verify_leibniz(&d, &n, 200, &s).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks, 200 * 201 / 2);
    assert!(verify_leibniz(&ArithFunction::log_derivative(), &e, 100, &s).unwrap().passed());
    let r = verify_leibniz(&d, &e, 10, &s).unwrap();
    assert_eq!(r.witness(), Some(Witness::Pair(2, 2)));
    assert_eq!(r.to_string(), "FAIL leibniz at (2,2): lhs=4 rhs=2");
    // (1,1)..(1,10) pass, then (2,2) fails
    assert_eq!(r.checks, 11);
    assert!(verify_leibniz(&d, &n, 0, &s).is_err());
}

#[test]
fn leibniz_errors_carry_pair() {
    let s = sieve();
    let f = ArithFunction::custom("bad", FunctionClass::General, |n, _| {
        if n.to_u64() == Some(12) {
            Err(crate::Error::Domain("bad".into()))
        } else {
            Ok(Rational::zero())
        }
    });
    let err = verify_leibniz(&f, &ArithFunction::ones(), 10, &s).unwrap_err();
    assert!(err.to_string().contains("(m,n)=(2,6)"), "{err}");
}

#[test]
fn schwab_examples() {
    let s = sieve();
    let (u, v) = (random_integer_table(300, 1), random_integer_table(300, 2));
    assert!(verify_schwab(&ArithFunction::log_derivative(), &u, &v, 300, &s).unwrap().passed());

    let d = ArithFunction::derivative();
    let r = verify_schwab(&d, &ones(20), &ones(20), 20, &s).unwrap();
    // with u = v = E the identity reads f tau = 2 (f * E)
    let want = brute_tau_witness(&d, &ArithFunction::ones(), 20, &s).unwrap();
    assert_eq!(r.witness(), Some(Witness::Point(want)));
    assert_eq!(want, 4);

    assert!(verify_schwab(&ArithFunction::zero(), &u, &v, 300, &s).unwrap().passed());
    assert!(verify_schwab(&d, &u, &v, 301, &s).is_err());
}

#[test]
fn gen_schwab_examples() {
    let s = sieve();
    let (u, v) = (random_integer_table(300, 3), random_integer_table(300, 4));
    let (d, n, e) = (ArithFunction::derivative(), ArithFunction::identity(), ArithFunction::ones());
    assert!(verify_gen_schwab(&d, &n, &u, &v, 300, &s).unwrap().passed());
    let ld = ArithFunction::log_derivative();
    let a = verify_gen_schwab(&ld, &e, &u, &v, 300, &s).unwrap();
    let b = verify_schwab(&ld, &u, &v, 300, &s).unwrap();
    assert!(a.passed() && b.passed() && a.checks == b.checks);

    let r = verify_gen_schwab(&d, &e, &ones(10), &ones(10), 10, &s).unwrap();
    assert_eq!(r.witness(), Some(Witness::Point(brute_tau_witness(&d, &e, 10, &s).unwrap())));

    let h0 = ArithFunction::CompletelyMultiplicative(PrimeAssignment::identity().with(3, 0).unwrap());
    assert!(matches!(
        verify_gen_schwab(&d, &h0, &u, &v, 300, &s),
        Err(crate::Error::Precondition(_))
    ));
}

#[test]
fn cor33_examples() {
    let s = sieve();
    let r = verify_cor33(&ones(500), &ones(500), 500, &s).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks, 500);
    assert!(verify_cor33(&unit(300), &random_integer_table(300, 5), 300, &s).unwrap().passed());
    for seed in 0..3 {
        let (u, v) = (random_integer_table(300, seed), random_integer_table(300, seed + 100));
        assert!(verify_cor33(&u, &v, 300, &s).unwrap().passed());
    }
}

#[test]
fn square_conv_examples() {
    let s = sieve();
    let (d, n, e) = (ArithFunction::derivative(), ArithFunction::identity(), ArithFunction::ones());
    assert!(verify_square_conv(&d, &n, &ones(500), 500, &s).unwrap().passed());
    let zero = ValueTable::from_fn(50, |_| Rational::zero()).unwrap();
    assert!(verify_square_conv(&d, &e, &zero, 50, &s).unwrap().passed());
    let r = verify_square_conv(&d, &e, &ones(10), 10, &s).unwrap();
    assert_eq!(r.witness(), Some(Witness::Point(brute_tau_witness(&d, &e, 10, &s).unwrap())));
}

#[test]
fn tau_examples() {
    let s = sieve();
    let (d, n, e) = (ArithFunction::derivative(), ArithFunction::identity(), ArithFunction::ones());
    let r = verify_tau_identity(&d, &n, 1000, &s).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks, 1000);
    assert!(verify_tau_identity(&ArithFunction::log_derivative(), &e, 500, &s).unwrap().passed());
    let r = verify_tau_identity(&n, &n, 10, &s).unwrap();
    assert_eq!(r.to_string(), "FAIL tau at n=1: lhs=1 rhs=2");
    assert_eq!(r.checks, 1);
}

#[test]
fn distributivity_examples() {
    let s = sieve();
    let (u, v) = (random_integer_table(300, 6), random_integer_table(300, 7));
    assert!(verify_distributivity(&ArithFunction::identity(), &u, &v, 300, &s).unwrap().passed());
    assert!(verify_distributivity(&ArithFunction::ones(), &u, &v, 300, &s).unwrap().passed());
    let d = ArithFunction::derivative();
    let r = verify_distributivity(&d, &ones(12), &ones(12), 12, &s).unwrap();
    // first n with D(n) tau(n) != sum_{d|n} D(d) D(n/d)
    let want = (1..=12u64)
        .find(|&n| {
            let lhs = d.eval_u64(n, &s).unwrap() * Rational::from((1..=n).filter(|k| n % k == 0).count() as i64);
            let rhs: Rational = (1..=n)
                .filter(|k| n % k == 0)
                .map(|k| d.eval_u64(k, &s).unwrap() * d.eval_u64(n / k, &s).unwrap())
                .sum();
            lhs != rhs
        })
        .unwrap();
    assert_eq!(r.witness(), Some(Witness::Point(want)));
}

#[test]
fn converse_discriminator() {
    let s = sieve();
    for seed in 0..4 {
        let (f_at, _) = random_prime_data(200, true, seed);
        let f = ArithFunction::l_additive(f_at, PrimeAssignment::identity());
        let n = ArithFunction::identity();
        assert!(verify_tau_identity(&f, &n, 300, &s).unwrap().passed());

        let base = f.clone();
        let perturbed = ArithFunction::custom("perturbed", FunctionClass::General, move |m, sv| {
            let v = base.eval(m, sv)?;
            Ok(if m.to_u64() == Some(49) { v + Rational::one() } else { v })
        });
        let r = verify_tau_identity(&perturbed, &n, 300, &s).unwrap();
        assert_eq!(r.witness(), Some(Witness::Point(49)), "seed={seed}");
    }
}

#[test]
fn random_tables_are_reproducible() {
    let a = random_integer_table(100, 42);
    assert_eq!(a, random_integer_table(100, 42));
    assert_ne!(a, random_integer_table(100, 43));
    assert!(a.values().iter().all(|x| x.is_integer() && x.numer().magnitude() <= &9u32.into()));
    let _ = tabulate(&ArithFunction::ones(), 1, &sieve()).unwrap();
}
