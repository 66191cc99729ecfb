//! Small prime utilities: trial division, primorials, and a growable
//! next-prime provider used by table mode.

use num_bigint::BigUint;

/// Deterministic trial division by 2 and every odd integer up to `⌊√v⌋`.
///
/// This is the ground truth the verification code compares against; it does
/// not touch any sieve.
pub fn is_prime_trial(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v < 4 {
        return true;
    }
    if v.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= v / d {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime factor by trial division; `None` for `v < 2`.
pub fn least_prime_factor(v: u64) -> Option<u64> {
    if v < 2 {
        return None;
    }
    if v.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3u64;
    while d <= v / d {
        if v.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    Some(v)
}

/// Product of all primes `<= p`.
pub fn primorial(p: u64) -> BigUint {
    (2..=p)
        .filter(|&q| is_prime_trial(q))
        .fold(BigUint::from(1u32), |acc, q| acc * q)
}

/// Answers "next prime after x" for unbounded x by re-sieving at double the
/// range whenever a query runs off the end.
#[derive(Clone, Debug)]
pub struct PrimeProvider {
    composite: Vec<bool>,
}

impl Default for PrimeProvider {
    fn default() -> Self {
        Self::with_limit(1024)
    }
}

impl PrimeProvider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: u64) -> Self {
        let mut p = PrimeProvider {
            composite: Vec::new(),
        };
        p.resieve(limit.max(16));
        p
    }

    /// Current sieved range `[0, limit]`.
    pub fn limit(&self) -> u64 {
        self.composite.len() as u64 - 1
    }

    fn resieve(&mut self, limit: u64) {
        let len = limit as usize + 1;
        let mut composite = vec![false; len];
        composite[0] = true;
        composite[1] = true;
        let mut i = 2usize;
        while i * i < len {
            if !composite[i] {
                for m in (i * i..len).step_by(i) {
                    composite[m] = true;
                }
            }
            i += 1;
        }
        self.composite = composite;
    }

    pub fn is_prime(&mut self, v: u64) -> bool {
        while v > self.limit() {
            self.resieve(self.limit() * 2);
        }
        !self.composite[v as usize]
    }

    pub fn next_prime_after(&mut self, x: u64) -> u64 {
        let mut v = x + 1;
        loop {
            if v > self.limit() {
                self.resieve(self.limit() * 2);
                continue;
            }
            if !self.composite[v as usize] {
                return v;
            }
            v += 1;
        }
    }
}
