//! Comparison reports, pattern replays, and their text/CSV/JSON renderings.
//!
//! Rendering is deterministic: fixed column widths, LF line endings, struct
//! field order for JSON keys, and percentages carried as integer hundredths.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::engine::{Calculation, EngineState, Mode, Progression, Situation};
use crate::error::{check_bound, Error, Result};
use crate::sieves::{
    eratosthenes_instrumented_with, euler_instrumented_with, fabio_sieve_with, oracle_primes,
    Method, RunOptions, SieveRun,
};
use crate::verify::{Check, VerificationReport};

pub(crate) mod big_string {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A percentage with two decimals, stored as hundredths of a percent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Percent(pub u64);

impl Percent {
    /// `round(100 * num / den, 2)` with half-up rounding; zero when `den == 0`.
    pub fn ratio(num: u64, den: u64) -> Self {
        if den == 0 {
            return Percent(0);
        }
        let (num, den) = (u128::from(num), u128::from(den));
        Percent(((20_000 * num + den) / (2 * den)) as u64)
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

impl FromStr for Percent {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || format!("malformed percentage {s:?}");
        let (whole, frac) = s.split_once('.').ok_or_else(bad)?;
        if frac.len() != 2 {
            return Err(bad());
        }
        let whole: u64 = whole.parse().map_err(|_| bad())?;
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        Ok(Percent(whole * 100 + frac))
    }
}

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Percent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodStats {
    pub name: Method,
    pub prime_count: u64,
    pub composite_count: u64,
    pub created_count: u64,
    pub duplicate_count: u64,
    pub waste_percent: Percent,
    pub feed_count: u64,
    pub agrees_with_oracle: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
}

impl MethodStats {
    fn from_run(run: &SieveRun, oracle: &SieveRun, include_primes: bool) -> Self {
        MethodStats {
            name: run.method,
            prime_count: run.primes.len() as u64,
            composite_count: run.distinct_removed,
            created_count: run.created_count,
            duplicate_count: run.duplicate_count,
            waste_percent: Percent::ratio(run.duplicate_count, run.distinct_removed),
            feed_count: run.feed_count,
            agrees_with_oracle: run.primes == oracle.primes,
            primes: include_primes.then(|| run.primes.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n: u64,
    pub methods: Vec<MethodStats>,
}

impl ComparisonReport {
    pub fn method(&self, m: Method) -> Option<&MethodStats> {
        self.methods.iter().find(|s| s.name == m)
    }

    pub fn disagreeing(&self) -> impl Iterator<Item = Method> + '_ {
        self.methods
            .iter()
            .filter(|s| !s.agrees_with_oracle)
            .map(|s| s.name)
    }
}

pub fn compare(n: u64) -> Result<ComparisonReport> {
    compare_with(n, false)
}

/// Runs the pattern sieve, Eratosthenes and Euler at bound `n` and checks
/// each against the oracle.
pub fn compare_with(n: u64, include_primes: bool) -> Result<ComparisonReport> {
    check_bound(n, 2)?;
    let opts = RunOptions::counters_only();
    let oracle = oracle_primes(n)?;
    let runs = [
        fabio_sieve_with(n, opts)?,
        eratosthenes_instrumented_with(n, opts)?,
        euler_instrumented_with(n, opts)?,
    ];
    Ok(ComparisonReport {
        n,
        methods: runs
            .iter()
            .map(|r| MethodStats::from_run(r, &oracle, include_primes))
            .collect(),
    })
}

/// One step of the lettered pattern walk-through.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayStep {
    pub label: String,
    pub progression: Progression,
    pub elements: Vec<u64>,
    pub snapshot: Vec<u64>,
}

/// A, B, ..., Z, AA, AB, ...
fn pattern_label(mut ordinal: u64) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (ordinal % 26) as u8);
        if ordinal < 26 {
            break;
        }
        ordinal = ordinal / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

pub fn pattern_replay(n: u64) -> Result<Vec<ReplayStep>> {
    check_bound(n, 2)?;
    let mut state = EngineState::new(Mode::Bounded(n))?;
    let mut steps = Vec::new();
    while !state.is_terminated() {
        let mut elements = Vec::new();
        let c = state.next_calculation_with(|v, _| elements.push(v))?;
        steps.push(ReplayStep {
            label: pattern_label(c.index() - 1),
            progression: c.progression(),
            elements,
            snapshot: state.list_members(),
        });
    }
    Ok(steps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Renderable<'a> {
    Primes(&'a SieveRun),
    Table(&'a [Calculation]),
    JkTable(&'a [Calculation]),
    Comparison(&'a ComparisonReport),
    Verification(&'a VerificationReport),
    Replay(&'a [ReplayStep]),
}

impl Renderable<'_> {
    fn name(&self) -> &'static str {
        match self {
            Renderable::Primes(_) => "primes",
            Renderable::Table(_) => "table",
            Renderable::JkTable(_) => "jk-table",
            Renderable::Comparison(_) => "comparison",
            Renderable::Verification(_) => "verification",
            Renderable::Replay(_) => "replay",
        }
    }
}

#[derive(Serialize)]
struct CalculationRecord {
    index: u64,
    j: u64,
    k: u64,
    m: String,
    situation: Situation,
    start: u64,
    step: String,
}

impl From<&Calculation> for CalculationRecord {
    fn from(c: &Calculation) -> Self {
        CalculationRecord {
            index: c.index(),
            j: c.j(),
            k: c.k(),
            m: c.m().to_string(),
            situation: c.situation(),
            start: c.start(),
            step: c.step().to_string(),
        }
    }
}

#[derive(Serialize)]
struct PrimesRecord<'a> {
    method: Method,
    n: u64,
    primes: &'a [u64],
}

pub fn render(input: &Renderable<'_>, format: Format) -> Result<Vec<u8>> {
    let unsupported = || Error::UnsupportedFormat {
        input: input.name(),
        format: format.name(),
    };
    match format {
        Format::Json => {
            let mut out = match *input {
                Renderable::Primes(run) => serde_json::to_vec_pretty(&PrimesRecord {
                    method: run.method,
                    n: run.n,
                    primes: &run.primes,
                })?,
                Renderable::Table(rows) | Renderable::JkTable(rows) => {
                    let recs: Vec<CalculationRecord> = rows.iter().map(Into::into).collect();
                    serde_json::to_vec_pretty(&recs)?
                }
                Renderable::Comparison(r) => serde_json::to_vec_pretty(r)?,
                Renderable::Verification(r) => serde_json::to_vec_pretty(r)?,
                Renderable::Replay(steps) => serde_json::to_vec_pretty(steps)?,
            };
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => match *input {
            Renderable::Primes(run) => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["prime"])?;
                for p in &run.primes {
                    w.write_record([p.to_string()])?;
                }
                finish_csv(w)
            }
            Renderable::Table(rows) | Renderable::JkTable(rows) => csv_calculations(rows),
            Renderable::Comparison(r) => csv_comparison(r),
            Renderable::Verification(_) | Renderable::Replay(_) => Err(unsupported()),
        },
        Format::Text => Ok(match *input {
            Renderable::Primes(run) => run
                .primes
                .iter()
                .map(|p| format!("{p}\n"))
                .collect::<String>(),
            Renderable::Table(rows) => text_table(rows, true),
            Renderable::JkTable(rows) => text_table(rows, false),
            Renderable::Comparison(r) => text_comparison(r),
            Renderable::Verification(r) => text_verification(r),
            Renderable::Replay(steps) => text_replay(steps),
        }
        .into_bytes()),
    }
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>> {
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

fn csv_calculations(rows: &[Calculation]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["calculation", "j", "k", "m", "situation", "start", "step"])?;
    for c in rows {
        w.write_record([
            c.index().to_string(),
            c.j().to_string(),
            c.k().to_string(),
            c.m().to_string(),
            c.situation().to_string(),
            c.start().to_string(),
            c.step().to_string(),
        ])?;
    }
    finish_csv(w)
}

fn csv_comparison(r: &ComparisonReport) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "method",
        "primes",
        "composites",
        "created",
        "duplicates",
        "waste_percent",
        "feeds",
        "agrees_with_oracle",
    ])?;
    for s in &r.methods {
        w.write_record([
            r.n.to_string(),
            s.name.to_string(),
            s.prime_count.to_string(),
            s.composite_count.to_string(),
            s.created_count.to_string(),
            s.duplicate_count.to_string(),
            s.waste_percent.to_string(),
            s.feed_count.to_string(),
            s.agrees_with_oracle.to_string(),
        ])?;
    }
    finish_csv(w)
}

const SITUATION_WIDTH: usize = 10;

/// Mirrors the printed tables: `M>J*K` rows are right-justified in the
/// situation column so the rarer `M<J*K` rows stand out.
fn text_table(rows: &[Calculation], with_index: bool) -> String {
    let expr_header = "J*K + M*N";
    let exprs: Vec<String> = rows.iter().map(Calculation::expression).collect();
    let ew = exprs
        .iter()
        .map(String::len)
        .chain([expr_header.len()])
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    let lead = |out: &mut String, s: &str| {
        if with_index {
            let _ = write!(out, "{s:>11}  ");
        }
    };
    lead(&mut out, "Calculation");
    let _ = writeln!(
        out,
        "{:<ew$}  {:<SITUATION_WIDTH$}  Sequences to be removed from LIST",
        "Expression", "Situation"
    );
    lead(&mut out, "");
    let _ = writeln!(out, "{expr_header:<ew$}  {:<SITUATION_WIDTH$}  N >= 0", "");
    for (c, expr) in rows.iter().zip(&exprs) {
        lead(&mut out, &c.index().to_string());
        let sit = c.situation().to_string();
        let sit = match c.situation() {
            Situation::MLessThanJk => format!("{sit:<SITUATION_WIDTH$}"),
            Situation::MGreaterThanJk => format!("{sit:>SITUATION_WIDTH$}"),
        };
        let _ = writeln!(
            out,
            "{expr:<ew$}  {sit}  Seq ({} to n by {})",
            c.start(),
            c.step()
        );
    }
    out
}

fn text_comparison(r: &ComparisonReport) -> String {
    let mut out = format!("n = {}\n", r.n);
    let _ = writeln!(
        out,
        "{:<13}{:>8}{:>12}{:>9}{:>12}{:>9}{:>7}  oracle",
        "method", "primes", "composites", "created", "duplicates", "waste%", "feeds"
    );
    for s in &r.methods {
        let _ = writeln!(
            out,
            "{:<13}{:>8}{:>12}{:>9}{:>12}{:>9}{:>7}  {}",
            s.name.name(),
            s.prime_count,
            s.composite_count,
            s.created_count,
            s.duplicate_count,
            s.waste_percent.to_string(),
            s.feed_count,
            if s.agrees_with_oracle {
                "agree"
            } else {
                "DIFFER"
            }
        );
    }
    out
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn text_verification(r: &VerificationReport) -> String {
    let mut out = format!("n = {}\n", r.n);
    for check in &r.checks {
        match check {
            Check::Disjoint => {
                let _ = writeln!(
                    out,
                    "disjoint: {} ({} values in more than one pattern)",
                    if r.disjoint { "yes" } else { "no" },
                    r.multiply_covered.len()
                );
                for m in &r.multiply_covered {
                    let idx: Vec<u64> = m.indices.clone();
                    let _ = writeln!(out, "  {} covered by calculations {}", m.value, join(&idx));
                }
            }
            Check::Coverage => {
                let _ = writeln!(
                    out,
                    "uncovered composites: {} [{}]",
                    r.uncovered_composites.len(),
                    join(&r.uncovered_composites)
                );
            }
            Check::Divergence => {
                let _ = match r.first_divergence {
                    Some(v) => writeln!(out, "first divergence: {v}"),
                    None => writeln!(out, "first divergence: none"),
                };
            }
            Check::JkNote => {
                let _ = writeln!(out, "jk-note failures: {}", r.jk_note_failures.len());
                for f in &r.jk_note_failures {
                    let _ = writeln!(
                        out,
                        "  calculation {} ({k}*{k}): {} is not prime",
                        f.index,
                        f.value,
                        k = f.k
                    );
                }
            }
        }
    }
    out
}

fn text_replay(steps: &[ReplayStep]) -> String {
    let mut out = String::new();
    for s in steps {
        let _ = writeln!(
            out,
            "Pattern {}: with a = {} and d = {},",
            s.label, s.progression.a, s.progression.d
        );
        let _ = writeln!(out, "{{{}}}", join(&s.elements));
        let _ = writeln!(out, "S = {{{}}}", join(&s.snapshot));
    }
    out
}
