//! Path statistics and the Narayana numbers.
//!
//! Every statistic is defined on all words, including steps at zero or
//! negative height. Parity is mathematical parity, so a step at height -1 is
//! odd and one at height -2 is even.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{PathClass, PathWord, Step};

/// `(step, step height)` for each step in order.
pub(crate) fn steps_with_height(w: &PathWord) -> impl Iterator<Item = (Step, i64)> + '_ {
    let mut h = 0i64;
    w.steps().map(move |s| {
        let before = h;
        h += s.delta();
        (s, before.max(h))
    })
}

#[inline]
fn is_odd(h: i64) -> bool {
    h.rem_euclid(2) == 1
}

pub fn semilength(w: &PathWord) -> Result<u64> {
    w.require_bilateral()?;
    Ok(w.len() as u64 / 2)
}

fn count_pairs(w: &PathWord, first: Step, second: Step) -> u64 {
    let mut prev = None;
    let mut count = 0;
    for s in w.steps() {
        if prev == Some(first) && s == second {
            count += 1;
        }
        prev = Some(s);
    }
    count
}

/// Number of `UD` factors, at any height.
pub fn peaks(w: &PathWord) -> u64 {
    count_pairs(w, Step::Up, Step::Down)
}

/// Number of `DU` factors, at any height.
pub fn valleys(w: &PathWord) -> u64 {
    count_pairs(w, Step::Down, Step::Up)
}

#[inline]
fn is_contact(step: Step, height: i64) -> bool {
    matches!((step, height), (Step::Down, 1) | (Step::Up, 0))
}

/// Down-steps at height 1 plus up-steps at height 0.
pub fn contacts(w: &PathWord) -> u64 {
    steps_with_height(w)
        .filter(|&(s, h)| is_contact(s, h))
        .count() as u64
}

#[inline]
fn is_crossing(a: (Step, i64), b: (Step, i64)) -> bool {
    matches!(
        (a, b),
        ((Step::Down, 1), (Step::Down, 0)) | ((Step::Up, 0), (Step::Up, 1))
    )
}

/// Adjacent step pairs passing straight through the axis.
pub fn crossings(w: &PathWord) -> u64 {
    let mut prev = None;
    let mut count = 0;
    for cur in steps_with_height(w) {
        if let Some(p) = prev {
            if is_crossing(p, cur) {
                count += 1;
            }
        }
        prev = Some(cur);
    }
    count
}

fn count_steps(w: &PathWord, step: Step, odd: bool) -> u64 {
    steps_with_height(w)
        .filter(|&(s, h)| s == step && is_odd(h) == odd)
        .count() as u64
}

pub fn ups_at_odd_height(w: &PathWord) -> u64 {
    count_steps(w, Step::Up, true)
}

pub fn ups_at_even_height(w: &PathWord) -> u64 {
    count_steps(w, Step::Up, false)
}

pub fn downs_at_odd_height(w: &PathWord) -> u64 {
    count_steps(w, Step::Down, true)
}

pub fn downs_at_even_height(w: &PathWord) -> u64 {
    count_steps(w, Step::Down, false)
}

/// All statistics of one bilateral word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub n: u64,
    pub peaks: u64,
    pub valleys: u64,
    pub contacts: u64,
    pub crossings: u64,
    pub ups_odd: u64,
    pub ups_even: u64,
    pub downs_odd: u64,
    pub downs_even: u64,
    pub max_height: i64,
    pub min_height: i64,
    pub is_prime: bool,
}

impl StatRecord {
    /// Flat `key:value` form, space separated, in field order.
    pub fn to_key_value(&self) -> String {
        Statistic::ALL
            .iter()
            .map(|s| {
                let v = if *s == Statistic::IsPrime {
                    self.is_prime.to_string()
                } else {
                    s.of(self).to_string()
                };
                format!("{}:{}", s.name(), v)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for StatRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_key_value())
    }
}

/// Computes every statistic in a single pass.
pub fn stat_record(w: &PathWord) -> Result<StatRecord> {
    let n = semilength(w)?;
    let mut r = StatRecord {
        n,
        max_height: w.max_height(),
        min_height: w.min_height(),
        ..StatRecord::default()
    };
    let mut prev: Option<(Step, i64)> = None;
    for cur @ (s, h) in steps_with_height(w) {
        match (s, is_odd(h)) {
            (Step::Up, true) => r.ups_odd += 1,
            (Step::Up, false) => r.ups_even += 1,
            (Step::Down, true) => r.downs_odd += 1,
            (Step::Down, false) => r.downs_even += 1,
        }
        if is_contact(s, h) {
            r.contacts += 1;
        }
        if let Some(p) = prev {
            match (p.0, s) {
                (Step::Up, Step::Down) => r.peaks += 1,
                (Step::Down, Step::Up) => r.valleys += 1,
                _ => {}
            }
            if is_crossing(p, cur) {
                r.crossings += 1;
            }
        }
        prev = Some(cur);
    }
    r.is_prime = w.classify() == PathClass::Dyck && r.contacts == 1;
    Ok(r)
}

/// A named field of [`StatRecord`], usable as a distribution key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    N,
    Peaks,
    Valleys,
    Contacts,
    Crossings,
    UpsOdd,
    UpsEven,
    DownsOdd,
    DownsEven,
    MaxHeight,
    MinHeight,
    IsPrime,
}

impl Statistic {
    pub const ALL: [Statistic; 12] = [
        Statistic::N,
        Statistic::Peaks,
        Statistic::Valleys,
        Statistic::Contacts,
        Statistic::Crossings,
        Statistic::UpsOdd,
        Statistic::UpsEven,
        Statistic::DownsOdd,
        Statistic::DownsEven,
        Statistic::MaxHeight,
        Statistic::MinHeight,
        Statistic::IsPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::N => "n",
            Statistic::Peaks => "peaks",
            Statistic::Valleys => "valleys",
            Statistic::Contacts => "contacts",
            Statistic::Crossings => "crossings",
            Statistic::UpsOdd => "ups_odd",
            Statistic::UpsEven => "ups_even",
            Statistic::DownsOdd => "downs_odd",
            Statistic::DownsEven => "downs_even",
            Statistic::MaxHeight => "max_height",
            Statistic::MinHeight => "min_height",
            Statistic::IsPrime => "is_prime",
        }
    }

    /// Value of this statistic as an integer key; `is_prime` maps to 0/1.
    pub fn of(self, r: &StatRecord) -> i64 {
        match self {
            Statistic::N => r.n as i64,
            Statistic::Peaks => r.peaks as i64,
            Statistic::Valleys => r.valleys as i64,
            Statistic::Contacts => r.contacts as i64,
            Statistic::Crossings => r.crossings as i64,
            Statistic::UpsOdd => r.ups_odd as i64,
            Statistic::UpsEven => r.ups_even as i64,
            Statistic::DownsOdd => r.downs_odd as i64,
            Statistic::DownsEven => r.downs_even as i64,
            Statistic::MaxHeight => r.max_height,
            Statistic::MinHeight => r.min_height,
            Statistic::IsPrime => r.is_prime as i64,
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Exact binomial coefficient; fails instead of wrapping.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (n - i) is divisible by (i + 1) at every step.
        c = c
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(c)
}

/// `N(n, k) = C(n, k) C(n, k-1) / n`, zero outside `1..=n`.
pub fn narayana(n: u64, k: i64) -> Result<u128> {
    assert!(n >= 1, "narayana is defined for n >= 1");
    if k < 1 || k as u64 > n {
        return Ok(0);
    }
    let k = k as u64;
    let prod = binomial(n, k)?
        .checked_mul(binomial(n, k - 1)?)
        .ok_or(Error::Overflow("narayana"))?;
    let n = n as u128;
    assert_eq!(prod % n, 0, "Narayana product not divisible by n");
    Ok(prod / n)
}
