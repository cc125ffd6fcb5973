use crate::error::{Error, Result};

pub const DEFAULT_SIEVE_LIMIT: usize = 1_000_000;

/// Smallest-prime-factor table over `2..=limit`, built with a linear sieve.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: usize,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

pub fn build_sieve(limit: usize) -> Result<PrimeSieve> {
    if limit < 2 {
        return Err(Error::domain(format!("sieve limit must be at least 2, got {limit}")));
    }
    if limit > u32::MAX as usize {
        return Err(Error::domain(format!("sieve limit {limit} exceeds the supported range")));
    }
    let mut spf = vec![0u32; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            let m = i * p as usize;
            if p > si || m > limit {
                break;
            }
            spf[m] = p;
        }
    }
    Ok(PrimeSieve { limit, spf, primes })
}

impl PrimeSieve {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Smallest prime factor of `k`, for `2 <= k <= limit`.
    pub fn spf(&self, k: usize) -> Option<u32> {
        if (2..=self.limit).contains(&k) {
            Some(self.spf[k])
        } else {
            None
        }
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn is_prime(&self, k: usize) -> Option<bool> {
        match k {
            0 | 1 => Some(false),
            _ => self.spf(k).map(|p| p as usize == k),
        }
    }
}
