//! Brute-force checks of the pattern sieve's structural claims against the
//! trial-division oracle.
//!
//! Everything here is exhaustive over `[2, n]`: the claims are universally
//! quantified, so nothing is sampled.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::engine::{progression_elements, EngineState, Mode, NextTerm};
use crate::error::{check_bound, Result};
use crate::primes::{is_prime_trial, least_prime_factor, primorial};
use crate::sieves::{fabio_sieve_with, RunOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Disjoint,
    Coverage,
    Divergence,
    JkNote,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Disjoint,
        Check::Coverage,
        Check::Divergence,
        Check::JkNote,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplyCovered {
    pub value: u64,
    pub indices: Vec<u64>,
}

/// A composite that survived below `j*k` when a `J = K` row was emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JkNoteFailure {
    pub index: u64,
    pub k: u64,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u64,
    pub checks: Vec<Check>,
    pub disjoint: bool,
    pub multiply_covered: Vec<MultiplyCovered>,
    pub uncovered_composites: Vec<u64>,
    pub first_divergence: Option<u64>,
    pub jk_note_failures: Vec<JkNoteFailure>,
}

impl VerificationReport {
    /// True when any executed check found a counterexample.
    pub fn has_findings(&self) -> bool {
        !self.disjoint
            || !self.uncovered_composites.is_empty()
            || self.first_divergence.is_some()
            || !self.jk_note_failures.is_empty()
    }
}

/// Which calculations cover each value in `[0, n]`.
struct Cover {
    first: Vec<u32>,
    repeats: BTreeMap<u64, Vec<u64>>,
}

impl Cover {
    fn is_covered(&self, v: u64) -> bool {
        self.first[v as usize] != 0
    }
}

/// Replays bounded mode and tallies every in-range progression element by
/// calculation index. Counting is done from `progression_elements`, not from
/// the engine's own removal bookkeeping.
fn pattern_cover(n: u64, rule: NextTerm) -> Result<Cover> {
    let mut state = EngineState::with_next_term(Mode::Bounded(n), rule)?;
    let mut cover = Cover {
        first: vec![0; n as usize + 1],
        repeats: BTreeMap::new(),
    };
    while !state.is_terminated() {
        let c = state.next_calculation()?;
        let idx = c.index();
        for v in progression_elements(&c, n) {
            let slot = &mut cover.first[v as usize];
            if *slot == 0 {
                *slot = u32::try_from(idx).expect("calculation index exceeds u32");
            } else {
                cover
                    .repeats
                    .entry(v)
                    .or_insert_with(|| vec![u64::from(*slot)])
                    .push(idx);
            }
        }
    }
    Ok(cover)
}

pub fn check_disjointness(n: u64) -> Result<(bool, Vec<MultiplyCovered>)> {
    check_disjointness_with(n, NextTerm::LiveList)
}

/// Values reached by two or more calculations, with every covering index.
///
/// Neither reading of "next term" is disjoint at desk scale: the live-list
/// rule first overlaps at 17303 (13 * 1331 re-covers 11 * 1573), the
/// prime rule at 510799 (the `K = 17` block closes on `J = 30047`, which is
/// `17 mod 30030`).
pub fn check_disjointness_with(n: u64, rule: NextTerm) -> Result<(bool, Vec<MultiplyCovered>)> {
    check_bound(n, 4)?;
    let cover = pattern_cover(n, rule)?;
    let multiply: Vec<MultiplyCovered> = cover
        .repeats
        .into_iter()
        .map(|(value, indices)| MultiplyCovered { value, indices })
        .collect();
    Ok((multiply.is_empty(), multiply))
}

/// Composites in `[4, n]` that no progression reaches.
pub fn check_coverage(n: u64) -> Result<Vec<u64>> {
    check_bound(n, 4)?;
    let cover = pattern_cover(n, NextTerm::LiveList)?;
    Ok((4..=n)
        .filter(|&v| !cover.is_covered(v) && !is_prime_trial(v))
        .collect())
}

/// Smallest `v <= limit` whose pattern-sieve verdict disagrees with trial
/// division.
pub fn find_first_divergence(limit: u64) -> Result<Option<u64>> {
    check_bound(limit, 2)?;
    let run = fabio_sieve_with(limit, RunOptions::counters_only())?;
    let mut survivors = run.primes.iter().copied().peekable();
    for v in 2..=limit {
        let survived = survivors.next_if_eq(&v).is_some();
        if survived != is_prime_trial(v) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// At every `J = K` emission, lists the composites still in the list below
/// `j*k`.
pub fn check_jk_note(n: u64) -> Result<Vec<JkNoteFailure>> {
    check_bound(n, 4)?;
    let mut state = EngineState::new(Mode::Bounded(n))?;
    let mut failures = Vec::new();
    while !state.is_terminated() {
        if state.j() == state.k() {
            let index = state.emitted() + 1;
            let k = state.k();
            failures.extend(
                state
                    .list_members_below(k * k)
                    .filter(|&v| !is_prime_trial(v))
                    .map(|value| JkNoteFailure { index, k, value }),
            );
        }
        state.next_calculation()?;
    }
    Ok(failures)
}

/// Runs the selected checks at bound `n`.
pub fn verify(n: u64, checks: &[Check]) -> Result<VerificationReport> {
    check_bound(n, 4)?;
    let mut report = VerificationReport {
        n,
        checks: Check::ALL
            .into_iter()
            .filter(|c| checks.contains(c))
            .collect(),
        disjoint: true,
        multiply_covered: Vec::new(),
        uncovered_composites: Vec::new(),
        first_divergence: None,
        jk_note_failures: Vec::new(),
    };
    if checks.contains(&Check::Disjoint) {
        let (disjoint, multiply) = check_disjointness(n)?;
        report.disjoint = disjoint;
        report.multiply_covered = multiply;
    }
    if checks.contains(&Check::Coverage) {
        report.uncovered_composites = check_coverage(n)?;
    }
    if checks.contains(&Check::Divergence) {
        report.first_divergence = find_first_divergence(n)?;
    }
    if checks.contains(&Check::JkNote) {
        report.jk_note_failures = check_jk_note(n)?;
    }
    Ok(report)
}

/// Why a composite escapes every pattern: with `p` its least prime factor,
/// the cofactor reduced modulo `p#/p` is the `J` the `K = p` block would
/// need, and the block only steps `J` through list members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapExplanation {
    pub value: u64,
    pub least_factor: u64,
    pub modulus: BigUint,
    pub residue: u64,
    pub residue_composite: bool,
}

pub fn explain_gap(value: u64) -> Option<GapExplanation> {
    let p = least_prime_factor(value)?;
    if p == value {
        return None;
    }
    let modulus = primorial(p) / p;
    let residue = (BigUint::from(value / p) % &modulus)
        .to_u64()
        .expect("residue below a u64 cofactor");
    Some(GapExplanation {
        value,
        least_factor: p,
        modulus,
        residue,
        residue_composite: residue > 3 && !is_prime_trial(residue),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_small() {
        let (ok, multi) = check_disjointness(100).unwrap();
        assert!(ok);
        assert!(multi.is_empty());
        let (ok, _) = check_disjointness(4).unwrap();
        assert!(ok);
        assert!(check_disjointness(3).is_err());
    }

    #[test]
    fn cover_union_at_100_has_74_values() {
        let cover = pattern_cover(100, NextTerm::LiveList).unwrap();
        assert_eq!((0..=100).filter(|&v| cover.is_covered(v)).count(), 74);
        let cover = pattern_cover(4, NextTerm::LiveList).unwrap();
        assert_eq!(
            (0..=4).filter(|&v| cover.is_covered(v)).collect::<Vec<_>>(),
            vec![4]
        );
    }

    #[test]
    fn first_overlaps() {
        assert!(check_disjointness(17_302).unwrap().0);
        let (ok, multi) = check_disjointness(17_303).unwrap();
        assert!(!ok);
        assert_eq!(multi.len(), 1);
        assert_eq!(multi[0].value, 17_303);
        assert_eq!(multi[0].indices.len(), 2);

        assert!(check_disjointness_with(510_798, NextTerm::Prime).unwrap().0);
        let (ok, multi) = check_disjointness_with(510_799, NextTerm::Prime).unwrap();
        assert!(!ok);
        assert_eq!(
            multi.iter().map(|m| m.value).collect::<Vec<_>>(),
            vec![510_799]
        );
    }

    #[test]
    fn coverage_examples() {
        assert!(check_coverage(1000).unwrap().is_empty());
        assert!(check_coverage(1330).unwrap().is_empty());
        assert_eq!(
            check_coverage(2500).unwrap(),
            vec![1331, 1573, 2057, 2197, 2299]
        );
    }

    #[test]
    fn divergence_examples() {
        assert_eq!(find_first_divergence(10).unwrap(), None);
        assert_eq!(find_first_divergence(1330).unwrap(), None);
        assert_eq!(find_first_divergence(2000).unwrap(), Some(1331));
    }

    #[test]
    fn jk_note_examples() {
        assert!(check_jk_note(20).unwrap().is_empty());
        assert!(check_jk_note(1000).unwrap().is_empty());
        let f = check_jk_note(1400).unwrap();
        assert_eq!(
            f,
            vec![JkNoteFailure {
                index: 112,
                k: 37,
                value: 1331
            }]
        );
    }

    #[test]
    fn report_flags() {
        let r = verify(1330, &Check::ALL).unwrap();
        assert!(!r.has_findings());
        let r = verify(2000, &Check::ALL).unwrap();
        assert!(r.has_findings());
        assert!(r.disjoint);
        assert_eq!(r.first_divergence, Some(1331));
        assert!(r.uncovered_composites.contains(&1331));
        let r = verify(2000, &[Check::Disjoint]).unwrap();
        assert_eq!(r.checks, vec![Check::Disjoint]);
        assert!(!r.has_findings());
    }

    #[test]
    fn gap_mechanism_1331() {
        let g = explain_gap(1331).unwrap();
        assert_eq!(g.least_factor, 11);
        assert_eq!(g.modulus, BigUint::from(210u32));
        assert_eq!(g.residue, 121);
        assert!(g.residue_composite);
        assert!(explain_gap(97).is_none());
    }
}
