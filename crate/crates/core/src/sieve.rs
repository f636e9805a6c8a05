//! Immutable arithmetic-function tables.
//!
//! [`PrimeTable`] stores the least prime factor of every integer up to a
//! fixed limit, built by a segmented sieve. All multiplicative-function
//! queries (von Mangoldt, Möbius, totient, squarefree-times-square split)
//! reduce to O(log n) divisions against this table. The table is frozen at
//! construction and can be shared freely across threads.

use crate::error::{Error, Result};

/// Hard ceiling on the sieve limit (least-prime-factor entries are `u32`).
pub const MAX_LIMIT: u64 = u32::MAX as u64;

/// Segment length for the sieve, in entries. 2^20 u32 entries = 4 MiB,
/// small enough to stay cache-friendly.
const SEGMENT_LEN: usize = 1 << 20;

/// Least-prime-factor table for `2..=limit`, plus the ordered list of primes.
#[derive(Debug)]
pub struct PrimeTable {
    limit: u64,
    /// `spf[n]` is the least prime factor of n (0 for n < 2).
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl PrimeTable {
    /// Build the table for all n up to `limit` (inclusive).
    pub fn build(limit: u64) -> Result<Self> {
        if !(2..=MAX_LIMIT).contains(&limit) {
            return Err(Error::Config(format!(
                "sieve limit {limit} outside supported range 2..={MAX_LIMIT}"
            )));
        }
        let lim = limit as usize;
        let mut spf = vec![0u32; lim + 1];
        let root = isqrt(limit);
        let base = simple_primes(root);

        let mut primes: Vec<u32> = Vec::new();
        let mut seg_start = 2usize;
        while seg_start <= lim {
            let seg_end = (seg_start + SEGMENT_LEN - 1).min(lim);
            for &p in &base {
                let p = p as usize;
                if p * p > seg_end {
                    break;
                }
                // Least factors win because base primes come in increasing order.
                let mut m = (p * p).max(seg_start.div_ceil(p) * p);
                while m <= seg_end {
                    if spf[m] == 0 {
                        spf[m] = p as u32;
                    }
                    m += p;
                }
            }
            for n in seg_start..=seg_end {
                if spf[n] == 0 {
                    spf[n] = n as u32;
                    primes.push(n as u32);
                }
            }
            seg_start = seg_end + 1;
        }

        Ok(Self { limit, spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primes up to the limit, in increasing order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().map(|&p| p as u64)
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    fn check(&self, n: u64) -> Result<()> {
        if n < 1 || n > self.limit {
            return Err(Error::Range(format!(
                "n = {n} outside table range 1..={}",
                self.limit
            )));
        }
        Ok(())
    }

    /// Least prime factor of n (n >= 2).
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        if n < 2 {
            return Err(Error::Domain("n = 1 has no prime factor".into()));
        }
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check(n)?;
        Ok(n >= 2 && self.spf[n as usize] as u64 == n)
    }

    /// Prime factorization as (prime, exponent) pairs in increasing prime order.
    pub fn factor(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        self.check(n)?;
        let mut out = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        Ok(out)
    }

    /// If n = p^k for a prime p and k >= 1, return (p, k).
    pub fn prime_power(&self, n: u64) -> Result<Option<(u64, u32)>> {
        self.check(n)?;
        if n < 2 {
            return Ok(None);
        }
        let p = self.spf[n as usize] as u64;
        let mut m = n;
        let mut k = 0u32;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        Ok(if m == 1 { Some((p, k)) } else { None })
    }

    /// Von Mangoldt function: log p when n = p^k, otherwise 0.
    pub fn von_mangoldt(&self, n: u64) -> Result<f64> {
        Ok(match self.prime_power(n)? {
            Some((p, _)) => (p as f64).ln(),
            None => 0.0,
        })
    }

    /// Möbius function in {-1, 0, 1}.
    pub fn mobius(&self, n: u64) -> Result<i32> {
        self.check(n)?;
        let mut m = n;
        let mut factors = 0u32;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            factors += 1;
        }
        Ok(if factors % 2 == 0 { 1 } else { -1 })
    }

    /// Euler totient.
    pub fn euler_phi(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        let mut result = n;
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        Ok(result)
    }

    /// The unique split n = g * k^2 with g squarefree.
    pub fn squarefree_square_split(&self, n: u64) -> Result<(u64, u64)> {
        self.check(n)?;
        let mut g = 1u64;
        let mut k = 1u64;
        for (p, e) in self.factor(n)? {
            if e % 2 == 1 {
                g *= p;
            }
            for _ in 0..e / 2 {
                k *= p;
            }
        }
        Ok((g, k))
    }

    /// Factor an integer that may exceed the table limit, by trial
    /// division against the stored primes. Requires sqrt(n) <= limit.
    pub fn factor_wide(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        if n == 0 {
            return Err(Error::Domain("cannot factor 0".into()));
        }
        if n <= self.limit {
            return self.factor(n);
        }
        if isqrt(n) > self.limit {
            return Err(Error::Range(format!(
                "factor_wide({n}) needs primes up to {}, table stops at {}",
                isqrt(n),
                self.limit
            )));
        }
        let mut out = Vec::new();
        let mut m = n;
        for p in self.primes() {
            if p * p > m {
                break;
            }
            if m % p == 0 {
                let mut e = 0u32;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
        if m > 1 {
            out.push((m, 1));
        }
        Ok(out)
    }

    /// Euler totient for n possibly above the table limit (sqrt(n) must
    /// stay within it).
    pub fn euler_phi_wide(&self, n: u64) -> Result<u64> {
        let mut result = n;
        for (p, _) in self.factor_wide(n)? {
            result = result / p * (p - 1);
        }
        Ok(result)
    }

    /// All divisors of n, sorted increasing.
    pub fn divisors(&self, n: u64) -> Result<Vec<u64>> {
        let factors = self.factor(n)?;
        let mut divs = vec![1u64];
        for (p, e) in factors {
            let prior = divs.len();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                for i in 0..prior {
                    divs.push(divs[i] * pe);
                }
            }
        }
        divs.sort_unstable();
        Ok(divs)
    }
}

/// Integer square root (largest r with r*r <= n).
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && r.checked_mul(r).map_or(true, |sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= n) {
        r += 1;
    }
    r
}

/// Plain boolean sieve for the base primes up to `limit`.
fn simple_primes(limit: u64) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let lim = limit as usize;
    let mut composite = vec![false; lim + 1];
    let mut primes = Vec::new();
    for n in 2..=lim {
        if !composite[n] {
            primes.push(n as u32);
            let mut m = n * n;
            while m <= lim {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
}
