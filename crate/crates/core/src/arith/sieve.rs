use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};

pub const SIEVE_LIMIT: u64 = 400_000_000;

/// `μ(n)` for `1 ≤ n ≤ max`, with a running Mertens function on demand.
#[derive(Debug, Clone)]
pub struct MoebiusTable {
    mu: Vec<i8>,
}

impl MoebiusTable {
    pub fn max(&self) -> u64 {
        (self.mu.len() - 1) as u64
    }

    /// `μ(n)`; panics when `n` is zero or beyond the table.
    pub fn mu(&self, n: u64) -> i8 {
        assert!(n >= 1, "mu(0) undefined");
        self.mu[n as usize]
    }

    pub fn get(&self, n: u64) -> Option<i8> {
        if n == 0 {
            None
        } else {
            self.mu.get(n as usize).copied()
        }
    }

    pub fn mertens(&self, x: u64) -> i64 {
        self.mu[1..=x as usize].iter().map(|&m| m as i64).sum()
    }
}

/// Linear sieve for `μ` on `1..=n`.
pub fn moebius_sieve(n: u64) -> Result<MoebiusTable> {
    if n > SIEVE_LIMIT {
        return Err(Error::Capacity { requested: n, limit: SIEVE_LIMIT });
    }
    let n = n as usize;
    let mut mu = vec![0i8; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    if n >= 1 {
        mu[1] = 1;
    }
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p as usize;
            if ip > n {
                break;
            }
            composite[ip] = true;
            if i % p as usize == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    Ok(MoebiusTable { mu })
}

static CACHE: Mutex<Option<Arc<MoebiusTable>>> = Mutex::new(None);

/// Shared read-only table covering at least `1..=n`; regrown when needed.
pub fn moebius_cached(n: u64) -> Result<Arc<MoebiusTable>> {
    let mut guard = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = guard.as_ref() {
        if t.max() >= n {
            return Ok(t.clone());
        }
    }
    let size = n.max(1 << 20).next_power_of_two().min(SIEVE_LIMIT.max(n));
    let t = Arc::new(moebius_sieve(size)?);
    *guard = Some(t.clone());
    Ok(t)
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_totient(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Whether `a` has a prime factor `≥ bound`.
pub fn has_prime_factor_at_least(mut a: u128, bound: u128) -> bool {
    if a <= 1 {
        return false;
    }
    let mut d: u128 = 2;
    while d < bound && d * d <= a {
        while a % d == 0 {
            a /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if d >= bound {
        return a > 1;
    }
    a >= bound
}
