//! Brute-force and randomized checking of the bijection theorems.
//!
//! Every check streams words in lexicographic order, semilength ascending,
//! so the first counterexample reported is the smallest one. With more than
//! one job the enumeration is sharded by word prefix; shards are merged in
//! order, which keeps reports identical to the single-threaded run.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{alpha, beta, phi, phi_ext, psi, psi_ext};
use crate::decompose::{factor_classes, first_return_split};
use crate::enumerate::{
    sample_bilateral_with, sample_dyck_with, shard_prefixes, WordClass, Words, CATALAN,
};
use crate::error::Result;
use crate::stats::{
    contacts, crossings, downs_at_even_height, narayana, peaks, stat_record, ups_at_even_height,
    ups_at_odd_height, valleys, Statistic,
};
use crate::word::PathWord;

pub type MapFn = fn(&PathWord) -> Result<PathWord>;

type CheckFn<'a> = dyn Fn(&PathWord) -> std::result::Result<(), String> + Send + Sync + 'a;

/// A per-word property; `Err` carries a description of the violation.
pub struct WordCheck<'a> {
    pub name: &'static str,
    pub test: Box<CheckFn<'a>>,
}

impl<'a> WordCheck<'a> {
    pub fn new<F>(name: &'static str, test: F) -> Self
    where
        F: Fn(&PathWord) -> std::result::Result<(), String> + Send + Sync + 'a,
    {
        WordCheck {
            name,
            test: Box::new(test),
        }
    }
}

/// Two statistic tuples that must be equidistributed at every semilength.
#[derive(Debug, Clone)]
pub struct DistributionCheck {
    pub name: &'static str,
    pub left: Vec<Statistic>,
    pub right: Vec<Statistic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub word: Option<PathWord>,
    pub detail: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) if w.is_empty() => write!(f, "\"\" ({})", self.detail),
            Some(w) => write!(f, "{w} ({})", self.detail),
            None => f.write_str(&self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub class: WordClass,
    pub n_min: usize,
    pub n_max: usize,
    pub words_tested: u64,
    pub status: Status,
    /// First violation; present exactly when the check failed.
    pub counterexample: Option<Finding>,
    /// Example found by an existence check.
    pub witness: Option<Finding>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {} [{} n={}..={}, {} words]",
            self.name, self.class, self.n_min, self.n_max, self.words_tested
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n     counterexample: {c}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n     witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn mapped(f: MapFn, w: &PathWord, name: &str) -> std::result::Result<PathWord, String> {
    f(w).map_err(|e| format!("{name} failed: {e}"))
}

/// φ and ψ as used by the Dyck checks; replaceable for mutation testing.
#[derive(Clone, Copy)]
pub struct DyckMaps {
    pub phi: MapFn,
    pub psi: MapFn,
}

impl Default for DyckMaps {
    fn default() -> Self {
        DyckMaps { phi, psi }
    }
}

/// φ′ and ψ′ as used by the bilateral checks.
#[derive(Clone, Copy)]
pub struct BilateralMaps {
    pub phi_ext: MapFn,
    pub psi_ext: MapFn,
}

impl Default for BilateralMaps {
    fn default() -> Self {
        BilateralMaps { phi_ext, psi_ext }
    }
}

pub fn dyck_bijection_checks(maps: DyckMaps) -> Vec<WordCheck<'static>> {
    vec![
        WordCheck::new("psi(phi(w)) = w", move |w| {
            let back = mapped(maps.psi, &mapped(maps.phi, w, "phi")?, "psi")?;
            expect_eq("psi(phi(w))", back, w.clone())
        }),
        WordCheck::new("phi(psi(w)) = w", move |w| {
            let back = mapped(maps.phi, &mapped(maps.psi, w, "psi")?, "phi")?;
            expect_eq("phi(psi(w))", back, w.clone())
        }),
        WordCheck::new("peaks(phi(w)) = ups_odd(w)", move |w| {
            let image = mapped(maps.phi, w, "phi")?;
            expect_eq("peaks", peaks(&image), ups_at_odd_height(w))
        }),
        WordCheck::new("contacts(phi(w)) = contacts(w)", move |w| {
            let image = mapped(maps.phi, w, "phi")?;
            expect_eq("contacts", contacts(&image), contacts(w))
        }),
    ]
}

pub fn bilateral_bijection_checks(maps: BilateralMaps) -> Vec<WordCheck<'static>> {
    vec![
        WordCheck::new("psi_ext(phi_ext(w)) = w", move |w| {
            let back = mapped(
                maps.psi_ext,
                &mapped(maps.phi_ext, w, "phi_ext")?,
                "psi_ext",
            )?;
            expect_eq("psi_ext(phi_ext(w))", back, w.clone())
        }),
        WordCheck::new("phi_ext(psi_ext(w)) = w", move |w| {
            let back = mapped(
                maps.phi_ext,
                &mapped(maps.psi_ext, w, "psi_ext")?,
                "phi_ext",
            )?;
            expect_eq("phi_ext(psi_ext(w))", back, w.clone())
        }),
        WordCheck::new("peaks(phi_ext(w)) = ups_odd(w)", move |w| {
            let image = mapped(maps.phi_ext, w, "phi_ext")?;
            expect_eq("peaks", peaks(&image), ups_at_odd_height(w))
        }),
        WordCheck::new("crossings(phi_ext(w)) = crossings(w)", move |w| {
            let image = mapped(maps.phi_ext, w, "phi_ext")?;
            expect_eq("crossings", crossings(&image), crossings(w))
        }),
        WordCheck::new("phi_ext preserves factor classes", move |w| {
            let image = mapped(maps.phi_ext, w, "phi_ext")?;
            let before = factor_classes(w).map_err(|e| e.to_string())?;
            let after = factor_classes(&image).map_err(|e| e.to_string())?;
            if before == after {
                Ok(())
            } else {
                Err(format!("factor classes {before:?} became {after:?}"))
            }
        }),
    ]
}

pub fn alpha_checks() -> Vec<WordCheck<'static>> {
    vec![
        WordCheck::new("alpha(alpha(w)) = w", |w| {
            let back = mapped(alpha, &mapped(alpha, w, "alpha")?, "alpha")?;
            expect_eq("alpha(alpha(w))", back, w.clone())
        }),
        WordCheck::new("peaks(alpha(w)) = valleys(w)", |w| {
            expect_eq("peaks", peaks(&mapped(alpha, w, "alpha")?), valleys(w))
        }),
        WordCheck::new("ups_odd(alpha(w)) = downs_even(w)", |w| {
            expect_eq(
                "ups_odd",
                ups_at_odd_height(&mapped(alpha, w, "alpha")?),
                downs_at_even_height(w),
            )
        }),
    ]
}

pub fn beta_checks() -> Vec<WordCheck<'static>> {
    vec![
        WordCheck::new("beta(beta(w)) = w", |w| {
            let back = mapped(beta, &mapped(beta, w, "beta")?, "beta")?;
            expect_eq("beta(beta(w))", back, w.clone())
        }),
        // Swapping W1 and W2 moves the bare UD peak of an empty factor.
        WordCheck::new("peaks(beta(w)) = peaks(w) + [W2 empty] - [W1 empty]", |w| {
            if w.is_empty() {
                return expect_eq("peaks", peaks(&mapped(beta, w, "beta")?), 0);
            }
            let (head, rest) = first_return_split(w).map_err(|e| e.to_string())?;
            let w1_empty = head.len() == 2;
            let predicted = peaks(w) + rest.is_empty() as u64 - w1_empty as u64;
            expect_eq("peaks", peaks(&mapped(beta, w, "beta")?), predicted)
        }),
        WordCheck::new("ups_even(beta(w)) = ups_odd(w) - 1", |w| {
            if w.is_empty() {
                return Ok(());
            }
            expect_eq(
                "ups_even",
                ups_at_even_height(&mapped(beta, w, "beta")?) + 1,
                ups_at_odd_height(w),
            )
        }),
    ]
}

type Tally = BTreeMap<(usize, Vec<i64>), u64>;

#[derive(Default)]
struct ShardResult {
    count: u64,
    failures: Vec<Option<(u64, Finding)>>,
    tallies: Vec<(Tally, Tally)>,
}

fn key_of(stats: &[Statistic], w: &PathWord) -> Vec<i64> {
    let r = stat_record(w).expect("enumerated words are bilateral");
    stats.iter().map(|s| s.of(&r)).collect()
}

/// Runs checks over every word of a class for semilengths `n_min..=n_max`.
pub struct Exhaustive<'a> {
    pub class: WordClass,
    pub n_min: usize,
    pub n_max: usize,
    pub jobs: usize,
    pub word_checks: Vec<WordCheck<'a>>,
    pub distribution_checks: Vec<DistributionCheck>,
}

impl<'a> Exhaustive<'a> {
    pub fn new(class: WordClass, n_max: usize) -> Self {
        Exhaustive {
            class,
            n_min: 0,
            n_max,
            jobs: 1,
            word_checks: Vec::new(),
            distribution_checks: Vec::new(),
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn n_min(mut self, n_min: usize) -> Self {
        self.n_min = n_min;
        self
    }

    pub fn check(mut self, c: WordCheck<'a>) -> Self {
        self.word_checks.push(c);
        self
    }

    pub fn checks(mut self, cs: Vec<WordCheck<'a>>) -> Self {
        self.word_checks.extend(cs);
        self
    }

    pub fn distribution(mut self, c: DistributionCheck) -> Self {
        self.distribution_checks.push(c);
        self
    }

    fn shards(&self) -> Vec<(usize, Vec<crate::word::Step>)> {
        let prefix_len = if self.jobs == 1 { 0 } else { 10 };
        (self.n_min..=self.n_max)
            .flat_map(|n| {
                shard_prefixes(self.class, n, prefix_len)
                    .into_iter()
                    .map(move |p| (n, p))
            })
            .collect()
    }

    fn run_shard(
        &self,
        index: usize,
        n: usize,
        prefix: &[crate::word::Step],
        earliest: &[AtomicUsize],
    ) -> ShardResult {
        let mut res = ShardResult {
            failures: vec![None; self.word_checks.len()],
            tallies: vec![Default::default(); self.distribution_checks.len()],
            ..ShardResult::default()
        };
        for w in Words::with_prefix(self.class, n, prefix) {
            for (c, check) in self.word_checks.iter().enumerate() {
                if res.failures[c].is_some() || earliest[c].load(Ordering::Relaxed) < index {
                    continue;
                }
                if let Err(detail) = (check.test)(&w) {
                    res.failures[c] = Some((
                        res.count,
                        Finding {
                            word: Some(w.clone()),
                            detail,
                        },
                    ));
                    earliest[c].fetch_min(index, Ordering::Relaxed);
                }
            }
            for (d, check) in self.distribution_checks.iter().enumerate() {
                let (l, r) = &mut res.tallies[d];
                *l.entry((n, key_of(&check.left, &w))).or_insert(0) += 1;
                *r.entry((n, key_of(&check.right, &w))).or_insert(0) += 1;
            }
            res.count += 1;
        }
        res
    }

    pub fn run(&self) -> VerificationReport {
        let shards = self.shards();
        let earliest: Vec<AtomicUsize> = self
            .word_checks
            .iter()
            .map(|_| AtomicUsize::new(usize::MAX))
            .collect();
        let results: Vec<ShardResult> = if self.jobs == 1 {
            shards
                .iter()
                .enumerate()
                .map(|(i, (n, p))| self.run_shard(i, *n, p, &earliest))
                .collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            pool.install(|| {
                shards
                    .par_iter()
                    .enumerate()
                    .map(|(i, (n, p))| self.run_shard(i, *n, p, &earliest))
                    .collect()
            })
        };

        let total: u64 = results.iter().map(|r| r.count).sum();
        let mut report = VerificationReport::default();
        for (c, check) in self.word_checks.iter().enumerate() {
            let mut seen = 0u64;
            let mut first = None;
            for r in &results {
                if let Some((pos, finding)) = &r.failures[c] {
                    first = Some((seen + pos + 1, finding.clone()));
                    break;
                }
                seen += r.count;
            }
            report.checks.push(self.outcome(check.name, total, first));
        }
        for (d, check) in self.distribution_checks.iter().enumerate() {
            let mut left = Tally::new();
            let mut right = Tally::new();
            for r in &results {
                for (k, v) in &r.tallies[d].0 {
                    *left.entry(k.clone()).or_insert(0) += v;
                }
                for (k, v) in &r.tallies[d].1 {
                    *right.entry(k.clone()).or_insert(0) += v;
                }
            }
            let first = if left == right {
                None
            } else {
                Some((total, self.distribution_witness(check, &left, &right)))
            };
            report.checks.push(self.outcome(check.name, total, first));
        }
        report
    }

    fn outcome(&self, name: &str, total: u64, first: Option<(u64, Finding)>) -> CheckOutcome {
        let (words_tested, status, counterexample) = match first {
            Some((tested, f)) => (tested, Status::Fail, Some(f)),
            None => (total, Status::Pass, None),
        };
        CheckOutcome {
            name: name.to_string(),
            class: self.class,
            n_min: self.n_min,
            n_max: self.n_max,
            words_tested,
            status,
            counterexample,
            witness: None,
        }
    }

    /// First word whose bucket count differs between the two tallies.
    fn distribution_witness(
        &self,
        check: &DistributionCheck,
        left: &Tally,
        right: &Tally,
    ) -> Finding {
        let count = |t: &Tally, n: usize, k: Vec<i64>| t.get(&(n, k)).copied().unwrap_or(0);
        for n in self.n_min..=self.n_max {
            for w in Words::new(self.class, n) {
                let lk = key_of(&check.left, &w);
                let rk = key_of(&check.right, &w);
                let (l1, r1) = (count(left, n, lk.clone()), count(right, n, lk.clone()));
                let (l2, r2) = (count(left, n, rk.clone()), count(right, n, rk.clone()));
                if l1 != r1 {
                    return Finding {
                        word: Some(w),
                        detail: format!("n={n} bucket {lk:?}: {l1} vs {r1}"),
                    };
                }
                if l2 != r2 {
                    return Finding {
                        word: Some(w),
                        detail: format!("n={n} bucket {rk:?}: {l2} vs {r2}"),
                    };
                }
            }
        }
        Finding {
            word: None,
            detail: "distributions differ".into(),
        }
    }
}

/// Existence check: passes iff some word in the range satisfies `pred`.
pub fn find_witness<F>(class: WordClass, n_max: usize, name: &str, pred: F) -> CheckOutcome
where
    F: Fn(&PathWord) -> Option<String>,
{
    let mut tested = 0;
    for n in 0..=n_max {
        for w in Words::new(class, n) {
            tested += 1;
            if let Some(detail) = pred(&w) {
                return CheckOutcome {
                    name: name.to_string(),
                    class,
                    n_min: 0,
                    n_max,
                    words_tested: tested,
                    status: Status::Pass,
                    counterexample: None,
                    witness: Some(Finding {
                        word: Some(w),
                        detail,
                    }),
                };
            }
        }
    }
    CheckOutcome {
        name: name.to_string(),
        class,
        n_min: 0,
        n_max,
        words_tested: tested,
        status: Status::Fail,
        counterexample: Some(Finding {
            word: None,
            detail: format!("no witness up to n = {n_max}"),
        }),
        witness: None,
    }
}

/// Runs the verification suites with a configurable worker count.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    pub jobs: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { jobs: 1 }
    }
}

impl Verifier {
    pub fn new(jobs: usize) -> Self {
        Verifier { jobs: jobs.max(1) }
    }

    pub fn dyck_bijection_with(&self, max_n: usize, maps: DyckMaps) -> VerificationReport {
        Exhaustive::new(WordClass::Dyck, max_n)
            .jobs(self.jobs)
            .checks(dyck_bijection_checks(maps))
            .distribution(DistributionCheck {
                name: "joint(contacts, ups_odd) = joint(contacts, peaks)",
                left: vec![Statistic::Contacts, Statistic::UpsOdd],
                right: vec![Statistic::Contacts, Statistic::Peaks],
            })
            .run()
    }

    pub fn dyck_bijection(&self, max_n: usize) -> VerificationReport {
        self.dyck_bijection_with(max_n, DyckMaps::default())
    }

    pub fn bilateral_bijection_with(
        &self,
        max_n: usize,
        maps: BilateralMaps,
    ) -> VerificationReport {
        Exhaustive::new(WordClass::Bilateral, max_n)
            .jobs(self.jobs)
            .checks(bilateral_bijection_checks(maps))
            .distribution(DistributionCheck {
                name: "dist(peaks) = dist(ups_odd)",
                left: vec![Statistic::Peaks],
                right: vec![Statistic::UpsOdd],
            })
            .run()
    }

    pub fn bilateral_bijection(&self, max_n: usize) -> VerificationReport {
        self.bilateral_bijection_with(max_n, BilateralMaps::default())
    }

    pub fn involutions_and_transport(&self, max_n: usize) -> VerificationReport {
        let mut report = Exhaustive::new(WordClass::Bilateral, max_n)
            .jobs(self.jobs)
            .checks(alpha_checks())
            .run();
        report.extend(
            Exhaustive::new(WordClass::Dyck, max_n)
                .jobs(self.jobs)
                .checks(beta_checks())
                .run(),
        );
        // Neither contacts nor peaks are preserved by beta; witnesses need n >= 2.
        if max_n >= 2 {
            report.checks.push(find_witness(
                WordClass::Dyck,
                max_n.min(3),
                "exists w: peaks(beta(w)) != peaks(w)",
                |w| {
                    let image = beta(w).ok()?;
                    let (a, b) = (peaks(w), peaks(&image));
                    (a != b).then(|| format!("beta(w) = {image}, peaks {a} -> {b}"))
                },
            ));
            report.checks.push(find_witness(
                WordClass::Dyck,
                max_n.min(3),
                "exists w: contacts(beta(w)) != contacts(w)",
                |w| {
                    let image = beta(w).ok()?;
                    let (a, b) = (contacts(w), contacts(&image));
                    (a != b).then(|| format!("beta(w) = {image}, contacts {a} -> {b}"))
                },
            ));
        }
        report
    }

    /// Peak and odd-height distributions of Dyck words against the Narayana
    /// formula, and row sums against the Catalan numbers, for `1..=max_n`.
    pub fn narayana(&self, max_n: usize) -> VerificationReport {
        let mut report = VerificationReport::default();
        for stat in [Statistic::Peaks, Statistic::UpsOdd] {
            let mut tested = 0;
            let mut failure = None;
            for n in 1..=max_n {
                let table = crate::enumerate::distribution(WordClass::Dyck, n, stat, None)
                    .expect("dyck distribution");
                tested += table.total();
                let mut mismatch = None;
                for k in 0..=n as i64 + 1 {
                    let got = table.counts.get(&vec![k]).copied().unwrap_or(0) as u128;
                    let want = narayana(n as u64, k).expect("narayana fits");
                    if got != want {
                        mismatch = Some((k, got, want));
                        break;
                    }
                }
                if let Some((k, got, want)) = mismatch {
                    let word = Words::new(WordClass::Dyck, n).find(|w| key_of(&[stat], w)[0] == k);
                    failure = Some(Finding {
                        word,
                        detail: format!("n={n}, {stat}={k}: {got} words, N({n},{k}) = {want}"),
                    });
                    break;
                }
                if table.total() != CATALAN[n] {
                    failure = Some(Finding {
                        word: None,
                        detail: format!(
                            "n={n}: row sum {} != Catalan {}",
                            table.total(),
                            CATALAN[n]
                        ),
                    });
                    break;
                }
            }
            report.checks.push(CheckOutcome {
                name: format!("dist({stat}) = Narayana row, sum = Catalan"),
                class: WordClass::Dyck,
                n_min: 1,
                n_max: max_n,
                words_tested: tested,
                status: if failure.is_some() {
                    Status::Fail
                } else {
                    Status::Pass
                },
                counterexample: failure,
                witness: None,
            });
        }
        report
    }

    /// Every suite at once: the Dyck bijection and Narayana up to `dyck_n`,
    /// the bilateral bijection and the involution checks up to `bilateral_n`.
    pub fn all(&self, dyck_n: usize, bilateral_n: usize) -> VerificationReport {
        let mut report = self.dyck_bijection(dyck_n);
        report.extend(self.narayana(dyck_n));
        report.extend(self.bilateral_bijection(bilateral_n));
        report.extend(self.involutions_and_transport(bilateral_n));
        report
    }
}

pub fn verify_dyck_bijection(max_n: usize) -> VerificationReport {
    Verifier::default().dyck_bijection(max_n)
}

pub fn verify_bilateral_bijection(max_n: usize) -> VerificationReport {
    Verifier::default().bilateral_bijection(max_n)
}

pub fn verify_involutions_and_transport(max_n: usize) -> VerificationReport {
    Verifier::default().involutions_and_transport(max_n)
}

pub fn verify_narayana(max_n: usize) -> VerificationReport {
    Verifier::default().narayana(max_n)
}

fn sampled_outcomes(
    class: WordClass,
    n: usize,
    checks: &[WordCheck<'_>],
    words: &[PathWord],
) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|check| {
            let mut outcome = CheckOutcome {
                name: check.name.to_string(),
                class,
                n_min: n,
                n_max: n,
                words_tested: words.len() as u64,
                status: Status::Pass,
                counterexample: None,
                witness: None,
            };
            for (i, w) in words.iter().enumerate() {
                if let Err(detail) = (check.test)(w) {
                    outcome.words_tested = i as u64 + 1;
                    outcome.status = Status::Fail;
                    outcome.counterexample = Some(Finding {
                        word: Some(w.clone()),
                        detail,
                    });
                    break;
                }
            }
            outcome
        })
        .collect()
}

/// Round-trip and transport checks on `trials` uniform Dyck words and
/// `trials` uniform bilateral words of semilength `n`.
pub fn verify_randomized(n: usize, trials: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dyck: Vec<PathWord> = (0..trials).map(|_| sample_dyck_with(&mut rng, n)).collect();
    let bilateral: Vec<PathWord> = (0..trials)
        .map(|_| sample_bilateral_with(&mut rng, n))
        .collect();

    let mut dyck_checks = dyck_bijection_checks(DyckMaps::default());
    dyck_checks.extend(beta_checks());
    let mut bilateral_checks = bilateral_bijection_checks(BilateralMaps::default());
    bilateral_checks.extend(alpha_checks());

    let mut report = VerificationReport::default();
    report
        .checks
        .extend(sampled_outcomes(WordClass::Dyck, n, &dyck_checks, &dyck));
    report.checks.extend(sampled_outcomes(
        WordClass::Bilateral,
        n,
        &bilateral_checks,
        &bilateral,
    ));
    report
}

/// Timing of φ then ψ over a fixed sample at semilength `n` and `2n`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScalingMeasurement {
    pub n: usize,
    pub words: usize,
    pub base: Duration,
    pub doubled: Duration,
}

impl ScalingMeasurement {
    pub fn ratio(&self) -> f64 {
        self.doubled.as_secs_f64() / self.base.as_secs_f64().max(1e-9)
    }
}

fn time_round_trips(sample: &[PathWord], repeats: usize) -> Duration {
    (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            for w in sample {
                let image = phi(w).expect("dyck sample");
                let back = psi(&image).expect("dyck image");
                assert_eq!(&back, w);
            }
            start.elapsed()
        })
        .min()
        .expect("at least one repeat")
}

/// Best of `repeats` timings at each size.
pub fn measure_scaling(n: usize, words: usize, repeats: usize, seed: u64) -> ScalingMeasurement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<PathWord> = (0..words).map(|_| sample_dyck_with(&mut rng, n)).collect();
    let doubled: Vec<PathWord> = (0..words)
        .map(|_| sample_dyck_with(&mut rng, 2 * n))
        .collect();
    // Warm up allocator and caches before timing.
    time_round_trips(&base[..1.min(base.len())], 1);
    ScalingMeasurement {
        n,
        words,
        base: time_round_trips(&base, repeats),
        doubled: time_round_trips(&doubled, repeats),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyck_bijection_small() {
        let r = verify_dyck_bijection(3);
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().all(|c| c.words_tested == 9));
        assert!(verify_dyck_bijection(1).passed());
    }

    #[test]
    fn bilateral_bijection_small() {
        let r = verify_bilateral_bijection(2);
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().all(|c| c.words_tested == 9));
    }

    #[test]
    fn involutions_small() {
        let r = verify_involutions_and_transport(3);
        assert!(r.passed(), "{r}");
        let witness = r
            .get("exists w: contacts(beta(w)) != contacts(w)")
            .and_then(|c| c.witness.as_ref())
            .and_then(|f| f.word.as_ref())
            .unwrap();
        assert_eq!(witness.to_string(), "UUDD");

        let r = verify_involutions_and_transport(0);
        assert!(r.passed());
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = Verifier::new(1).bilateral_bijection(5);
        let par = Verifier::new(4).bilateral_bijection(5);
        assert_eq!(seq, par);
    }

    #[test]
    fn randomized_small() {
        assert!(verify_randomized(0, 3, 1).passed());
        let r = verify_randomized(30, 200, 9);
        assert!(r.passed(), "{r}");
        assert_eq!(r, verify_randomized(30, 200, 9));
    }

    #[test]
    fn failing_check_reports_first_counterexample() {
        let r = Exhaustive::new(WordClass::Bilateral, 3)
            .jobs(3)
            .check(WordCheck::new("no valley", |w| {
                if valleys(w) == 0 {
                    Ok(())
                } else {
                    Err("valley".into())
                }
            }))
            .run();
        let c = &r.checks[0];
        assert_eq!(c.status, Status::Fail);
        // "", "UD", then "DU" is the first word with a valley.
        assert_eq!(c.words_tested, 3);
        assert_eq!(
            c.counterexample
                .as_ref()
                .unwrap()
                .word
                .as_ref()
                .unwrap()
                .to_string(),
            "DU"
        );
        assert!(!r.passed());
    }
}
