//! Exhaustive generation, distribution tables and uniform sampling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{stat_record, Statistic};
use crate::word::{PathWord, Step};

/// Catalan numbers `C_0..=C_30`.
pub const CATALAN: [u64; 31] = [
    1,
    1,
    2,
    5,
    14,
    42,
    132,
    429,
    1430,
    4862,
    16796,
    58786,
    208012,
    742900,
    2674440,
    9694845,
    35357670,
    129644790,
    477638700,
    1767263190,
    6564120420,
    24466267020,
    91482563640,
    343059613650,
    1289904147324,
    4861946401452,
    18367353072152,
    69533550916004,
    263747951750360,
    1002242216651368,
    3814986502092304,
];

/// Central binomial coefficients `C(2n, n)` for `n = 0..=30`.
pub const CENTRAL_BINOMIAL: [u64; 31] = [
    1,
    2,
    6,
    20,
    70,
    252,
    924,
    3432,
    12870,
    48620,
    184756,
    705432,
    2704156,
    10400600,
    40116600,
    155117520,
    601080390,
    2333606220,
    9075135300,
    35345263800,
    137846528820,
    538257874440,
    2104098963720,
    8233430727600,
    32247603683100,
    126410606437752,
    495918532948104,
    1946939425648112,
    7648690600760440,
    30067266499541040,
    118264581564861424,
];

/// Which family of closed words to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordClass {
    /// Dyck words, including the empty word at semilength 0.
    Dyck,
    /// All words with as many `U` as `D`.
    Bilateral,
}

impl WordClass {
    pub fn name(self) -> &'static str {
        match self {
            WordClass::Dyck => "dyck",
            WordClass::Bilateral => "bilateral",
        }
    }

    /// Number of words of semilength `n`, when it fits the embedded tables.
    pub fn count(self, n: usize) -> Option<u64> {
        match self {
            WordClass::Dyck => CATALAN.get(n).copied(),
            WordClass::Bilateral => CENTRAL_BINOMIAL.get(n).copied(),
        }
    }

    pub fn contains(self, w: &PathWord) -> bool {
        match self {
            WordClass::Dyck => w.require_dyck().is_ok(),
            WordClass::Bilateral => w.final_height() == 0,
        }
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WordClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dyck" => Ok(WordClass::Dyck),
            "bilateral" => Ok(WordClass::Bilateral),
            _ => Err(format!("unknown class {s:?} (expected dyck or bilateral)")),
        }
    }
}

/// Lexicographic (`U < D`) stream of all words of one class and semilength,
/// optionally restricted to a fixed prefix.
///
/// Each successor flips the rightmost up-step that may become a down-step
/// and refills the suffix with its smallest completion `U^a D^b`.
#[derive(Debug, Clone)]
pub struct Words {
    class: WordClass,
    steps: Vec<Step>,
    fixed: usize,
    pending: bool,
}

impl Words {
    pub fn new(class: WordClass, n: usize) -> Words {
        Words::with_prefix(class, n, &[])
    }

    /// Words beginning with `prefix`; empty if no such word exists.
    pub fn with_prefix(class: WordClass, n: usize, prefix: &[Step]) -> Words {
        let mut words = Words {
            class,
            steps: Vec::with_capacity(2 * n),
            fixed: prefix.len(),
            pending: false,
        };
        if prefix_is_viable(class, n, prefix) {
            let ups = prefix.iter().filter(|s| **s == Step::Up).count();
            let downs = prefix.len() - ups;
            words.steps.extend_from_slice(prefix);
            words.steps.extend(std::iter::repeat_n(Step::Up, n - ups));
            words
                .steps
                .extend(std::iter::repeat_n(Step::Down, n - downs));
            words.pending = true;
        }
        words
    }

    fn advance(&mut self) -> bool {
        let len = self.steps.len();
        let (mut ups_after, mut downs_after) = (0usize, 0usize);
        let mut i = len;
        while i > self.fixed {
            i -= 1;
            match self.steps[i] {
                Step::Down => downs_after += 1,
                Step::Up => {
                    // Height before position i is (downs - ups) over i..len.
                    let can_flip = match self.class {
                        WordClass::Dyck => downs_after >= ups_after + 2,
                        WordClass::Bilateral => downs_after >= 1,
                    };
                    if can_flip {
                        self.steps[i] = Step::Down;
                        let ups = ups_after + 1;
                        for (k, s) in self.steps[i + 1..].iter_mut().enumerate() {
                            *s = if k < ups { Step::Up } else { Step::Down };
                        }
                        return true;
                    }
                    ups_after += 1;
                }
            }
        }
        false
    }
}

fn prefix_is_viable(class: WordClass, n: usize, prefix: &[Step]) -> bool {
    if prefix.len() > 2 * n {
        return false;
    }
    let mut h = 0i64;
    let mut ups = 0;
    for s in prefix {
        h += s.delta();
        if *s == Step::Up {
            ups += 1;
        }
        if class == WordClass::Dyck && h < 0 {
            return false;
        }
    }
    let downs = prefix.len() - ups;
    ups <= n && downs <= n
}

impl Iterator for Words {
    type Item = PathWord;

    fn next(&mut self) -> Option<PathWord> {
        if !self.pending {
            return None;
        }
        let word = PathWord::from_steps(self.steps.iter().copied());
        self.pending = self.advance();
        Some(word)
    }
}

pub fn generate_dyck(n: usize) -> Words {
    Words::new(WordClass::Dyck, n)
}

pub fn generate_bilateral(n: usize) -> Words {
    Words::new(WordClass::Bilateral, n)
}

/// All viable prefixes of length `min(len, 2n)`, in lexicographic order.
/// The [`Words::with_prefix`] streams over them partition the class.
pub fn shard_prefixes(class: WordClass, n: usize, len: usize) -> Vec<Vec<Step>> {
    let len = len.min(2 * n);
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                [Step::Up, Step::Down].into_iter().map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .filter(|p| prefix_is_viable(class, n, p))
            .collect();
    }
    out
}

/// Exact counts of words of one class and semilength, keyed by one or two
/// statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionTable {
    pub class: WordClass,
    pub n: usize,
    pub keys: Vec<Statistic>,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<Vec<i64>, u64>,
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<Vec<i64>, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row<'a> {
        key: &'a [i64],
        count: u64,
    }
    s.collect_seq(counts.iter().map(|(k, c)| Row { key: k, count: *c }))
}

impl DistributionTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts keyed by a single statistic, in key order.
    pub fn row(&self) -> Vec<(i64, u64)> {
        self.counts.iter().map(|(k, c)| (k[0], *c)).collect()
    }

    /// `key1[,key2],count` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for k in &self.keys {
            out.push_str(k.name());
            out.push(',');
        }
        out.push_str("count\n");
        for (key, count) in &self.counts {
            for v in key {
                out.push_str(&v.to_string());
                out.push(',');
            }
            out.push_str(&count.to_string());
            out.push('\n');
        }
        out
    }
}

/// Streams the class once and tallies the requested statistics.
pub fn distribution(
    class: WordClass,
    n: usize,
    stat1: Statistic,
    stat2: Option<Statistic>,
) -> Result<DistributionTable> {
    let keys: Vec<Statistic> = std::iter::once(stat1).chain(stat2).collect();
    let mut counts: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for w in Words::new(class, n) {
        let r = stat_record(&w)?;
        let key = keys.iter().map(|k| k.of(&r)).collect();
        let slot = counts.entry(key).or_insert(0);
        *slot = slot
            .checked_add(1)
            .ok_or(Error::Overflow("distribution count"))?;
    }
    Ok(DistributionTable {
        class,
        n,
        keys,
        counts,
    })
}

/// Uniform word with `n` up-steps and `n` down-steps.
pub fn sample_bilateral_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PathWord {
    let mut steps: Vec<Step> = std::iter::repeat_n(Step::Up, n)
        .chain(std::iter::repeat_n(Step::Down, n))
        .collect();
    steps.shuffle(rng);
    PathWord::from_steps(steps)
}

/// Uniform Dyck word by the cycle lemma: exactly one rotation of a uniform
/// arrangement of `n` up-steps and `n + 1` down-steps is a Dyck word
/// followed by a final down-step.
pub fn sample_dyck_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PathWord {
    let mut steps: Vec<Step> = std::iter::repeat_n(Step::Up, n)
        .chain(std::iter::repeat_n(Step::Down, n + 1))
        .collect();
    steps.shuffle(rng);
    // Rotate to start just after the first vertex of minimum height.
    let (mut h, mut min, mut at) = (0i64, 0i64, 0usize);
    for (i, s) in steps.iter().enumerate() {
        h += s.delta();
        if h < min {
            min = h;
            at = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(at % len);
    debug_assert_eq!(steps.last(), Some(&Step::Down));
    steps.pop();
    PathWord::from_steps(steps)
}

pub fn sample_bilateral(n: usize, seed: u64) -> PathWord {
    sample_bilateral_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn sample_dyck(n: usize, seed: u64) -> PathWord {
    sample_dyck_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::PathClass;

    fn strs(it: impl Iterator<Item = PathWord>) -> Vec<String> {
        it.map(|w| w.to_string()).collect()
    }

    #[test]
    fn dyck_order_and_counts() {
        let words = strs(generate_dyck(3));
        assert_eq!(
            words,
            vec!["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
        );
        assert_eq!(strs(generate_dyck(0)), vec![""]);
        assert_eq!(generate_dyck(4).count(), 14);
    }

    #[test]
    fn bilateral_order_and_counts() {
        assert_eq!(strs(generate_bilateral(1)), vec!["UD", "DU"]);
        assert_eq!(
            strs(generate_bilateral(2)),
            vec!["UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU"]
        );
        assert_eq!(strs(generate_bilateral(0)), vec![""]);
    }

    #[test]
    fn catalan_reference_matches_recurrence() {
        let mut c = vec![1u128];
        for n in 1..=30 {
            let next: u128 = (0..n).map(|i| c[i] * c[n - 1 - i]).sum();
            c.push(next);
        }
        for n in 0..=30 {
            assert_eq!(CATALAN[n] as u128, c[n]);
        }
    }

    #[test]
    fn central_binomial_reference_matches_pascal() {
        let mut row = vec![1u128];
        for m in 1..=60 {
            let mut next = vec![1u128; m + 1];
            for k in 1..m {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
            if m % 2 == 0 {
                assert_eq!(CENTRAL_BINOMIAL[m / 2] as u128, row[m / 2]);
            }
        }
    }

    #[test]
    fn shards_partition_the_class() {
        for class in [WordClass::Dyck, WordClass::Bilateral] {
            for n in 0..=6 {
                let all: Vec<PathWord> = Words::new(class, n).collect();
                for len in [0, 1, 3, 20] {
                    let sharded: Vec<PathWord> = shard_prefixes(class, n, len)
                        .iter()
                        .flat_map(|p| Words::with_prefix(class, n, p))
                        .collect();
                    assert_eq!(sharded, all, "{class} n={n} len={len}");
                }
            }
        }
    }

    #[test]
    fn unviable_prefix_is_empty() {
        assert_eq!(
            Words::with_prefix(WordClass::Dyck, 3, &[Step::Down]).count(),
            0
        );
        assert_eq!(
            Words::with_prefix(WordClass::Bilateral, 1, &[Step::Up, Step::Up]).count(),
            0
        );
    }

    #[test]
    fn distribution_examples() {
        let t = distribution(WordClass::Dyck, 3, Statistic::Peaks, None).unwrap();
        assert_eq!(t.row(), vec![(1, 1), (2, 3), (3, 1)]);
        let t = distribution(WordClass::Dyck, 3, Statistic::UpsOdd, None).unwrap();
        assert_eq!(t.row(), vec![(1, 1), (2, 3), (3, 1)]);
        let t = distribution(WordClass::Bilateral, 2, Statistic::Peaks, None).unwrap();
        assert_eq!(t.row(), vec![(0, 1), (1, 4), (2, 1)]);
        assert_eq!(t.total(), 6);
    }

    #[test]
    fn csv_form() {
        let t = distribution(WordClass::Dyck, 3, Statistic::Peaks, None).unwrap();
        assert_eq!(t.to_csv(), "peaks,count\n1,1\n2,3\n3,1\n");
        let t = distribution(
            WordClass::Dyck,
            2,
            Statistic::Contacts,
            Some(Statistic::Peaks),
        )
        .unwrap();
        assert_eq!(t.to_csv(), "contacts,peaks,count\n1,1,1\n2,2,1\n");
    }

    #[test]
    fn small_samples() {
        assert!(sample_dyck(0, 7).is_empty());
        assert!(sample_bilateral(0, 7).is_empty());
        for seed in 0..20 {
            assert_eq!(sample_dyck(1, seed).to_string(), "UD");
            let b = sample_bilateral(1, seed).to_string();
            assert!(b == "UD" || b == "DU");
        }
    }

    #[test]
    fn samples_are_deterministic_and_in_class() {
        for seed in 0..50 {
            let d = sample_dyck(40, seed);
            assert_eq!(d, sample_dyck(40, seed));
            assert!(matches!(d.classify(), PathClass::Dyck));
            assert_eq!(d.len(), 80);
            let b = sample_bilateral(40, seed);
            assert_eq!(b.final_height(), 0);
        }
    }
}
