//! The calculation engine behind the pattern sieve.
//!
//! Each calculation is a triple `(J, K, M)` standing for the progression
//! `J*K + M*N`, `N = 0, 1, 2, ...`. Starting from `J = K = M = 2`, the engine
//! compares `M` with `J*K`:
//!
//! - `M > J*K`: keep `K` and `M`, move `J` to the next list member after `J`.
//! - `M < J*K`: take the next list member `q` after `K`, then `M *= q` and
//!   `J = K = q`.
//!
//! In [`Mode::Bounded`] the "list" is the live set of survivors in `[2, n]`
//! and each emitted calculation removes its progression from it. When the
//! advanced `J` gives `J*K > n` the block is cut short and `K` advances as in
//! the `M < J*K` branch; the run ends once `K*K > n`.
//!
//! [`Mode::Table`] has no bound, so "next list member" is answered by a
//! next-prime provider instead. This reproduces the printed tables, which
//! only use prime `J`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bitlist::BitList;
use crate::error::{check_bound, Error, Result};
use crate::primes::{is_prime_trial, primorial, PrimeProvider};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Situation {
    #[serde(rename = "M<J*K")]
    MLessThanJk,
    #[serde(rename = "M>J*K")]
    MGreaterThanJk,
}

impl fmt::Display for Situation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Situation::MLessThanJk => "M<J*K",
            Situation::MGreaterThanJk => "M>J*K",
        })
    }
}

/// One `J*K + M*N` expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calculation {
    index: u64,
    j: u64,
    k: u64,
    m: BigUint,
    situation: Situation,
}

impl Calculation {
    /// Panics if `m == j*k` (unreachable for any engine output) or `k > j`.
    pub fn new(index: u64, j: u64, k: u64, m: BigUint) -> Self {
        assert!(k <= j, "K ({k}) must not exceed J ({j})");
        let jk = j.checked_mul(k).expect("J*K overflows u64");
        let situation = match compare_big(&m, jk) {
            Ordering::Less => Situation::MLessThanJk,
            Ordering::Greater => Situation::MGreaterThanJk,
            Ordering::Equal => panic!("M == J*K ({jk}) has no transition rule"),
        };
        Calculation {
            index,
            j,
            k,
            m,
            situation,
        }
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn situation(&self) -> Situation {
        self.situation
    }

    /// First term `J*K`.
    pub fn start(&self) -> u64 {
        self.j * self.k
    }

    /// Common difference, always `M`.
    pub fn step(&self) -> &BigUint {
        &self.m
    }

    pub fn is_jk_row(&self) -> bool {
        self.j == self.k
    }

    pub fn progression(&self) -> Progression {
        Progression::new(self.start(), self.m.clone())
    }

    /// `"7*5 + 30*N"`.
    pub fn expression(&self) -> String {
        format!("{}*{} + {}*N", self.j, self.k, self.m)
    }
}

/// The arithmetic progression `{a + d*t : t >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progression {
    pub a: u64,
    #[serde(with = "crate::report::big_string")]
    pub d: BigUint,
}

impl Progression {
    pub fn new(a: u64, d: BigUint) -> Self {
        Progression { a, d }
    }

    /// Ascending elements `<= n`.
    pub fn elements(&self, n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.for_each_upto(n, |v| out.push(v));
        out
    }

    pub fn for_each_upto(&self, n: u64, mut f: impl FnMut(u64)) {
        if self.a > n {
            return;
        }
        match self.d.to_u64() {
            Some(d) if d > 0 => {
                let mut v = self.a;
                loop {
                    f(v);
                    match v.checked_add(d) {
                        Some(next) if next <= n => v = next,
                        _ => break,
                    }
                }
            }
            // step larger than any u64 bound (or zero): only the first term
            _ => f(self.a),
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        if v < self.a {
            return false;
        }
        (BigUint::from(v - self.a) % &self.d) == BigUint::default()
    }
}

fn compare_big(m: &BigUint, x: u64) -> Ordering {
    match m.to_u64() {
        Some(small) => small.cmp(&x),
        None => Ordering::Greater,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Table,
    Bounded(u64),
}

/// What "the next term in the list" means when the bounded engine advances
/// `J` or `K`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NextTerm {
    /// The next survivor in the live list, composite or not.
    #[default]
    LiveList,
    /// The next prime (always still in the list, since no pattern removes
    /// primes). Table mode always behaves this way.
    Prime,
}

#[derive(Clone, Debug)]
enum ListView {
    Primes(PrimeProvider),
    Live(BitList, Option<PrimeProvider>),
}

/// Mutable engine state: the current `(J, K, M)` plus the list it reads from.
#[derive(Clone, Debug)]
pub struct EngineState {
    j: u64,
    k: u64,
    m: BigUint,
    emitted: u64,
    list: ListView,
    terminated: bool,
}

/// `J = K = M = 2` over `[2, n]` (bounded) or over the primes (table).
pub fn initial_state(mode: Mode) -> Result<EngineState> {
    EngineState::new(mode)
}

impl EngineState {
    pub fn new(mode: Mode) -> Result<Self> {
        Self::with_next_term(mode, NextTerm::LiveList)
    }

    /// `rule` only affects bounded mode.
    pub fn with_next_term(mode: Mode, rule: NextTerm) -> Result<Self> {
        let list = match mode {
            Mode::Table => ListView::Primes(PrimeProvider::new()),
            Mode::Bounded(n) => {
                check_bound(n, 2)?;
                let primes = match rule {
                    NextTerm::LiveList => None,
                    NextTerm::Prime => Some(PrimeProvider::with_limit(n.min(1 << 20))),
                };
                ListView::Live(BitList::filled(2, n), primes)
            }
        };
        Ok(EngineState {
            j: 2,
            k: 2,
            m: BigUint::from(2u32),
            emitted: 0,
            list,
            terminated: false,
        })
    }

    pub fn mode(&self) -> Mode {
        match &self.list {
            ListView::Primes(_) => Mode::Table,
            ListView::Live(l, _) => Mode::Bounded(l.bound()),
        }
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    /// Number of calculations emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// Whether `v` is still in the live list. Always false in table mode.
    pub fn in_list(&self, v: u64) -> bool {
        match &self.list {
            ListView::Live(l, _) => l.contains(v),
            ListView::Primes(_) => false,
        }
    }

    /// Live list members in ascending order (empty in table mode).
    pub fn list_members(&self) -> Vec<u64> {
        match &self.list {
            ListView::Live(l, _) => l.members().collect(),
            ListView::Primes(_) => Vec::new(),
        }
    }

    /// Live list members below `x`.
    pub fn list_members_below(&self, x: u64) -> impl Iterator<Item = u64> + '_ {
        let live = match &self.list {
            ListView::Live(l, _) => Some(l),
            ListView::Primes(_) => None,
        };
        live.into_iter()
            .flat_map(|l| l.members())
            .take_while(move |&v| v < x)
    }

    pub fn list_len(&self) -> u64 {
        match &self.list {
            ListView::Live(l, _) => l.count(),
            ListView::Primes(_) => 0,
        }
    }

    pub fn next_calculation(&mut self) -> Result<Calculation> {
        self.next_calculation_with(|_, _| {})
    }

    /// Emits the pending calculation and advances. In bounded mode its
    /// progression is removed from the list first; `on_remove(value,
    /// already_absent)` sees each in-range element in ascending order.
    pub fn next_calculation_with(
        &mut self,
        mut on_remove: impl FnMut(u64, bool),
    ) -> Result<Calculation> {
        if self.terminated {
            return Err(Error::Exhausted);
        }
        self.emitted += 1;
        let calc = Calculation::new(self.emitted, self.j, self.k, self.m.clone());

        if let ListView::Live(list, _) = &mut self.list {
            let n = list.bound();
            calc.progression().for_each_upto(n, |v| {
                let present = list.remove(v);
                on_remove(v, !present);
            });
        }

        match calc.situation() {
            Situation::MLessThanJk => self.advance_k(),
            Situation::MGreaterThanJk => match self.next_after(self.j) {
                Some(q) if !self.exceeds_bound(q, self.k) => {
                    debug_assert!(self.is_member(q));
                    self.j = q;
                }
                // J*K past the bound (or nothing left): move on to the next K
                _ => self.advance_k(),
            },
        }
        if let Mode::Bounded(n) = self.mode() {
            if self.k.checked_mul(self.k).is_none_or(|kk| kk > n) {
                self.terminated = true;
            }
        }
        Ok(calc)
    }

    fn advance_k(&mut self) {
        match self.next_after(self.k) {
            Some(q) => {
                debug_assert!(self.is_member(q));
                self.m *= q;
                self.j = q;
                self.k = q;
            }
            None => self.terminated = true,
        }
    }

    fn exceeds_bound(&self, j: u64, k: u64) -> bool {
        match self.mode() {
            Mode::Table => false,
            Mode::Bounded(n) => j.checked_mul(k).is_none_or(|jk| jk > n),
        }
    }

    fn is_member(&mut self, v: u64) -> bool {
        match &mut self.list {
            ListView::Live(l, _) => l.contains(v),
            ListView::Primes(p) => p.is_prime(v),
        }
    }

    fn next_after(&mut self, x: u64) -> Option<u64> {
        match &mut self.list {
            ListView::Live(l, None) => l.next_after(x),
            ListView::Live(l, Some(p)) => {
                let q = p.next_prime_after(x);
                (q <= l.bound()).then_some(q)
            }
            ListView::Primes(p) => Some(p.next_prime_after(x)),
        }
    }
}

/// The first `count` table-mode calculations.
pub fn calculation_table(count: usize) -> Result<Vec<Calculation>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let mut state = EngineState::new(Mode::Table)?;
    (0..count).map(|_| state.next_calculation()).collect()
}

/// The `J = K` rows for every prime `K <= max_k`.
///
/// Every table-mode block ends with an `M < J*K` row, so the `J = K` rows are
/// exactly `(p, p, p#)` over the primes. They are built directly rather than
/// by walking the blocks, which grow like `p#/p`. Indices count positions in
/// this listing.
pub fn jk_rows(max_k: u64) -> Result<Vec<Calculation>> {
    if !is_prime_trial(max_k) {
        return Err(Error::InvalidArgument(format!(
            "max-k {max_k} is not prime"
        )));
    }
    let mut m = BigUint::from(1u32);
    let mut rows = Vec::new();
    for p in (2..=max_k).filter(|&p| is_prime_trial(p)) {
        m *= p;
        rows.push(Calculation::new(rows.len() as u64 + 1, p, p, m.clone()));
    }
    debug_assert_eq!(rows.last().map(|c| c.m().clone()), Some(primorial(max_k)));
    Ok(rows)
}

/// `{c.start + c.step*t} ∩ [1, n]`, ascending.
pub fn progression_elements(c: &Calculation, n: u64) -> Vec<u64> {
    c.progression().elements(n)
}
