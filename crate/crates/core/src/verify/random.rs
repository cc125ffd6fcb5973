//! Seeded generators for sweep inputs. Seeds fully determine the output.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{ArithFunction, PrimeAssignment};
use crate::dirichlet::ValueTable;
use crate::fnspec::{Block, Combinator, DefaultValue, FnExpr};
use crate::numtheory::{is_prime_u64, rat_normalize, Natural, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries drawn uniformly from `[-9, 9]`.
pub fn random_integer_table(limit: usize, seed: u64) -> ValueTable {
    let mut rng = rng(seed);
    ValueTable::from_fn(limit, |_| Rational::from(rng.gen_range(-9i64..=9)))
        .expect("limit >= 1")
}

fn small_ratio(rng: &mut impl Rng) -> Rational {
    rat_normalize(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=3)).expect("nonzero denominator")
}

fn small_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rat_normalize(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)).expect("nonzero");
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random `(f at primes, h)` for primes up to `prime_bound`, with constant
/// defaults beyond. `h` is nonzero everywhere when `nonzero_h` is set;
/// otherwise about one prime in eight gets `h(p) = 0`.
pub fn random_prime_data(
    prime_bound: u64,
    nonzero_h: bool,
    seed: u64,
) -> (PrimeAssignment, PrimeAssignment) {
    let mut rng = rng(seed);
    let mut f = PrimeAssignment::constant(small_ratio(&mut rng));
    let mut h = PrimeAssignment::constant(small_nonzero(&mut rng));
    for p in (2..=prime_bound).filter(|&p| is_prime_u64(p)) {
        let p = Natural::try_from(p).expect("p >= 2");
        f.set(p.clone(), small_ratio(&mut rng)).expect("prime key");
        let hp = if !nonzero_h && rng.gen_ratio(1, 8) {
            Rational::zero()
        } else {
            small_nonzero(&mut rng)
        };
        h.set(p, hp).expect("prime key");
    }
    (f, h)
}

/// A random L-additive function with nonzero `h`, plus its `h` part.
pub fn random_l_additive(prime_bound: u64, seed: u64) -> (ArithFunction, ArithFunction) {
    let (f, h) = random_prime_data(prime_bound, true, seed);
    (
        ArithFunction::l_additive(f, h.clone()),
        ArithFunction::CompletelyMultiplicative(h),
    )
}

const NAMES: [&str; 6] = ["D", "N", "E", "ld", "eps", "tau"];
const KEY_PRIMES: [u32; 8] = [2, 3, 5, 7, 11, 13, 97, 65537];

fn random_block(rng: &mut impl Rng) -> Block {
    let mut block = Block::default();
    for _ in 0..rng.gen_range(0..4) {
        let p = KEY_PRIMES[rng.gen_range(0..KEY_PRIMES.len())];
        let n = rng.gen_range(-30i64..=30);
        let d = rng.gen_range(1i64..=8);
        block.pairs.insert(BigUint::from(p), rat_normalize(n, d).expect("nonzero"));
    }
    block.default = match rng.gen_range(0..4) {
        0 => None,
        1 => Some(DefaultValue::Prime),
        2 => Some(DefaultValue::Reciprocal),
        _ => Some(DefaultValue::Ratio(small_ratio(rng))),
    };
    block
}

/// A random syntax tree of depth at most `depth`.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> FnExpr {
    let leaf = depth == 0 || rng.gen_ratio(2, 5);
    if leaf {
        return match rng.gen_range(0..4) {
            0 => FnExpr::Name(NAMES[rng.gen_range(0..NAMES.len())].to_string()),
            1 => FnExpr::Dp(BigUint::from(KEY_PRIMES[rng.gen_range(0..KEY_PRIMES.len())])),
            2 => FnExpr::CAdd(random_block(rng)),
            _ => FnExpr::CMul(random_block(rng)),
        };
    }
    let c = [Combinator::Conv, Combinator::Mul, Combinator::Compose, Combinator::Ladd]
        [rng.gen_range(0..4)];
    let a = random_expr(rng, depth - 1);
    let b = random_expr(rng, depth - 1);
    FnExpr::call(c, a, b)
}
