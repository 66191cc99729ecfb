//! Bounded sieves with removal accounting.
//!
//! All four sieves produce a [`SieveRun`]. A removal event is logged every
//! time a sieve *creates* a non-prime, whether or not it was still in the
//! list; `already_absent` marks the duplicates.

use serde::{Deserialize, Serialize};

use crate::bitlist::BitList;
use crate::engine::{EngineState, Mode, NextTerm};
use crate::error::{check_bound, Error, Result};
use crate::primes::is_prime_trial;

/// Bound up to which removal logs are kept by default.
pub const DEFAULT_LOG_LIMIT: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fabio,
    Eratosthenes,
    Euler,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Fabio => "fabio",
            Method::Eratosthenes => "eratosthenes",
            Method::Euler => "euler",
            Method::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalSource {
    /// 1-based index of the pattern-sieve calculation.
    Calculation(u64),
    /// Eratosthenes: multiples of this prime.
    Prime(u64),
    /// Euler: pass ordinal and the prime driving it.
    Pass { ordinal: u64, prime: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalEvent {
    pub value: u64,
    pub source: RemovalSource,
    pub already_absent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub retain_log: bool,
    /// Pattern sieve only.
    pub next_term: NextTerm,
}

impl RunOptions {
    pub fn for_bound(n: u64) -> Self {
        RunOptions {
            retain_log: n <= DEFAULT_LOG_LIMIT,
            next_term: NextTerm::default(),
        }
    }

    pub fn counters_only() -> Self {
        RunOptions {
            retain_log: false,
            next_term: NextTerm::default(),
        }
    }

    pub fn with_log() -> Self {
        RunOptions {
            retain_log: true,
            next_term: NextTerm::default(),
        }
    }

    pub fn next_term(self, next_term: NextTerm) -> Self {
        RunOptions { next_term, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveRun {
    pub method: Method,
    pub n: u64,
    pub primes: Vec<u64>,
    pub removal_log: Vec<RemovalEvent>,
    pub log_retained: bool,
    pub created_count: u64,
    pub distinct_removed: u64,
    pub duplicate_count: u64,
    pub feed_count: u64,
    pub pattern_count: u64,
}

/// Counts events and optionally keeps them.
struct Recorder {
    log: Vec<RemovalEvent>,
    retain: bool,
    created: u64,
    duplicates: u64,
}

impl Recorder {
    fn new(opts: RunOptions) -> Self {
        Recorder {
            log: Vec::new(),
            retain: opts.retain_log,
            created: 0,
            duplicates: 0,
        }
    }

    #[inline]
    fn record(&mut self, value: u64, source: RemovalSource, already_absent: bool) {
        self.created += 1;
        if already_absent {
            self.duplicates += 1;
        }
        if self.retain {
            self.log.push(RemovalEvent {
                value,
                source,
                already_absent,
            });
        }
    }

    fn finish(
        self,
        method: Method,
        n: u64,
        primes: Vec<u64>,
        feeds: u64,
        patterns: u64,
    ) -> SieveRun {
        SieveRun {
            method,
            n,
            primes,
            removal_log: self.log,
            log_retained: self.retain,
            created_count: self.created,
            distinct_removed: self.created - self.duplicates,
            duplicate_count: self.duplicates,
            feed_count: feeds,
            pattern_count: patterns,
        }
    }
}

pub fn fabio_sieve(n: u64) -> Result<SieveRun> {
    fabio_sieve_with(n, RunOptions::for_bound(n))
}

/// Runs the bounded calculation engine to completion; survivors are the
/// reported primes.
///
/// Duplicates are counted, not assumed away: with the live-list rule an
/// uncovered composite such as 1331 later re-enters as a `J` and re-creates
/// values an earlier block already removed (first at 17303 = 13 * 1331).
pub fn fabio_sieve_with(n: u64, opts: RunOptions) -> Result<SieveRun> {
    let mut state = EngineState::with_next_term(Mode::Bounded(n), opts.next_term)?;
    let mut rec = Recorder::new(opts);
    while !state.is_terminated() {
        let index = state.emitted() + 1;
        state.next_calculation_with(|v, absent| {
            rec.record(v, RemovalSource::Calculation(index), absent)
        })?;
    }
    let patterns = state.emitted();
    Ok(rec.finish(Method::Fabio, n, state.list_members(), 1, patterns))
}

pub fn eratosthenes_instrumented(n: u64) -> Result<SieveRun> {
    eratosthenes_instrumented_with(n, RunOptions::for_bound(n))
}

/// Crosses out `2p, 3p, ..., ⌊n/p⌋p` for every prime `p` with `p*p <= n`,
/// counting re-creations of already crossed-out values.
pub fn eratosthenes_instrumented_with(n: u64, opts: RunOptions) -> Result<SieveRun> {
    check_bound(n, 2)?;
    let mut list = BitList::filled(2, n);
    let mut rec = Recorder::new(opts);
    let mut p = 2u64;
    while p <= n / p {
        let mut v = 2 * p;
        while v <= n {
            let present = list.remove(v);
            rec.record(v, RemovalSource::Prime(p), !present);
            v += p;
        }
        match list.next_after(p) {
            Some(q) => p = q,
            None => break,
        }
    }
    Ok(rec.finish(Method::Eratosthenes, n, list.members().collect(), 1, 0))
}

pub fn euler_instrumented(n: u64) -> Result<SieveRun> {
    euler_instrumented_with(n, RunOptions::for_bound(n))
}

/// One pass per surviving prime `p` with `p*p <= n`: the products `p*q` for
/// every `q >= p` in the list at pass start are collected first, then removed.
pub fn euler_instrumented_with(n: u64, opts: RunOptions) -> Result<SieveRun> {
    check_bound(n, 2)?;
    let mut list = BitList::filled(2, n);
    let mut rec = Recorder::new(opts);
    let mut passes = 0u64;
    let mut p = 2u64;
    let mut batch = Vec::new();
    while p <= n / p {
        passes += 1;
        batch.clear();
        let mut q = p;
        loop {
            let prod = p * q;
            if prod > n {
                break;
            }
            batch.push(prod);
            match list.next_after(q) {
                Some(next) => q = next,
                None => break,
            }
        }
        let source = RemovalSource::Pass {
            ordinal: passes,
            prime: p,
        };
        for &v in &batch {
            let present = list.remove(v);
            debug_assert!(present, "euler pass re-created {v}");
            rec.record(v, source, !present);
        }
        match list.next_after(p) {
            Some(next) => p = next,
            None => break,
        }
    }
    Ok(rec.finish(Method::Euler, n, list.members().collect(), passes, 0))
}

/// Ground truth: every `v` in `[2, n]` tested by trial division.
pub fn oracle_primes(n: u64) -> Result<SieveRun> {
    check_bound(n, 2)?;
    let primes = (2..=n).filter(|&v| is_prime_trial(v)).collect();
    Ok(SieveRun {
        method: Method::Oracle,
        n,
        primes,
        removal_log: Vec::new(),
        log_retained: true,
        created_count: 0,
        distinct_removed: 0,
        duplicate_count: 0,
        feed_count: 0,
        pattern_count: 0,
    })
}

/// Applies a run's removal log to a fresh `[2, n]` list and returns the
/// survivors. The oracle has an empty log and is not replayable.
pub fn replay_log(run: &SieveRun) -> Result<Vec<u64>> {
    if !run.log_retained || run.method == Method::Oracle {
        return Err(Error::LogNotRetained);
    }
    let mut list = BitList::filled(2, run.n);
    for ev in &run.removal_log {
        list.remove(ev.value);
    }
    Ok(list.members().collect())
}
