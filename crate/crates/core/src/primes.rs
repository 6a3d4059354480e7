//! Elementary integer helpers: Eratosthenes sieve, Möbius function,
//! divisors.

use crate::error::{Result, ZetaError};

/// Largest sieve bound; anything beyond is refused rather than degraded.
pub const SIEVE_CAP: u64 = 10_000_000;

/// Primes `p <= limit` in increasing order.
pub fn sieve(limit: u64) -> Result<Vec<u64>> {
    if limit > SIEVE_CAP {
        return Err(ZetaError::Budget(format!("prime sieve to {limit} exceeds the cap {SIEVE_CAP}")));
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::with_capacity(if n > 10 { n / ((n as f64).ln() as usize) + 16 } else { 8 });
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn mobius(n: u64) -> i32 {
    assert!(n > 0);
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && mobius(n) != 0
}

/// Order of `k` in the additive group ℤ/m.
pub fn additive_order(k: u64, m: u64) -> u64 {
    m / gcd(k % m, m)
}
