//! Prime-sieve workbench built around the pattern sieve `J*K + M*N`.
//!
//! The pattern sieve removes composites through arithmetic progressions whose
//! first term is `J*K` and whose step `M` is the product of every `K` selected
//! so far (a primorial). Next to it sit two instrumented baselines (Eratosthenes
//! from `2p` and Euler's pass-based sieve) and a trial-division oracle that
//! shares no code with any sieve.
//!
//! - [`engine`] generates the `(J, K, M)` calculations, either unbounded
//!   (table mode) or driven by a live list bounded by `n`.
//! - [`sieves`] runs the four sieves and records every removal.
//! - [`verify`] checks disjointness, coverage and the "below `J*K`" note
//!   against the oracle.
//! - [`report`] builds comparison reports, pattern replays and renders them as
//!   text, CSV or JSON.

mod bitlist;
pub mod engine;
mod error;
pub mod primes;
pub mod report;
pub mod sieves;
pub mod verify;

pub use engine::{
    calculation_table, initial_state, jk_rows, progression_elements, Calculation, EngineState,
    Mode, NextTerm, Progression, Situation,
};
pub use error::{Error, Result};
pub use report::{
    compare, compare_with, pattern_replay, render, ComparisonReport, Format, MethodStats, Percent,
    Renderable, ReplayStep,
};
pub use sieves::{
    eratosthenes_instrumented, euler_instrumented, fabio_sieve, oracle_primes, replay_log, Method,
    RemovalEvent, RemovalSource, RunOptions, SieveRun,
};
pub use verify::{
    check_coverage, check_disjointness, check_disjointness_with, check_jk_note, explain_gap,
    find_first_divergence, verify, Check, GapExplanation, JkNoteFailure, MultiplyCovered,
    VerificationReport,
};
