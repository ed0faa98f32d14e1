//! The three unique factorizations the maps are built on.
//!
//! * the first-return split `U W1 D W2` of a nonempty Dyck word,
//! * the φ-parse `U (U W1 D)(U W2 D)...(U Ws D) D T`, where `s` counts the
//!   down-steps at height 2 before the first contact,
//! * the ψ-parse `(U W1)(U W2)...(U Ws) U D^(s+1) T`, anchored on the
//!   trailing down-run of the first-return prefix,
//! * the crossing factorization of a bilateral word into alternating
//!   positive and negative Dyck factors.
//!
//! The span-level functions work on index ranges of a word together with its
//! bracket [`Matching`]; the bijection engine uses them directly so that no
//! subword is copied. The owned decompositions are built on top.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::word::{PathClass, PathWord, Step, WordBuilder};

/// Partner index of every step of a Dyck word: each up-step is paired with
/// the down-step that closes it, and vice versa.
#[derive(Debug, Clone)]
pub struct Matching {
    partner: Vec<u32>,
}

impl Matching {
    pub fn of_dyck(w: &PathWord) -> Result<Matching> {
        w.require_dyck()?;
        assert!(
            w.len() <= u32::MAX as usize,
            "word too long for a u32 matching"
        );
        let mut partner = vec![0u32; w.len()];
        let mut open: Vec<u32> = Vec::with_capacity(w.max_height().max(0) as usize);
        for (i, s) in w.steps().enumerate() {
            match s {
                Step::Up => open.push(i as u32),
                Step::Down => {
                    let j = open.pop().expect("validated Dyck word");
                    partner[j as usize] = i as u32;
                    partner[i] = j;
                }
            }
        }
        Ok(Matching { partner })
    }

    #[inline]
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }
}

/// φ-parse of the nonempty Dyck subword `range`. Pushes the ranges of
/// `W1..Ws` into `inner` (cleared first) and returns the tail range.
pub(crate) fn phi_spans(
    m: &Matching,
    range: Range<usize>,
    inner: &mut Vec<Range<usize>>,
) -> Range<usize> {
    debug_assert!(!range.is_empty());
    inner.clear();
    let first_return = m.partner(range.start);
    let mut j = range.start + 1;
    while j < first_return {
        let close = m.partner(j);
        inner.push(j + 1..close);
        j = close + 1;
    }
    first_return + 1..range.end
}

/// ψ-parse of the nonempty Dyck subword `range`. Pushes the ranges of
/// `W1..Ws` into `inner` (cleared first) and returns the tail range.
///
/// Within the first-return prefix `Q`, `s + 1` is the length of the trailing
/// down-run. The `i`-th structural up-step is the partner of the down-step
/// that leaves height `i` in that run.
pub(crate) fn psi_spans(
    w: &PathWord,
    m: &Matching,
    range: Range<usize>,
    inner: &mut Vec<Range<usize>>,
) -> Range<usize> {
    debug_assert!(!range.is_empty());
    inner.clear();
    let q_end = m.partner(range.start);
    let mut run = 0;
    while w.step(q_end - run) == Step::Down {
        run += 1;
    }
    let anchor = q_end - run;
    let s = run - 1;
    for i in 1..=s {
        let up = m.partner(q_end + 1 - i);
        let next = if i == s { anchor } else { m.partner(q_end - i) };
        inner.push(up + 1..next);
    }
    q_end + 1..range.end
}

/// `U W1 D W2` split of a nonempty Dyck word, returned as `(U W1 D, W2)`.
pub fn first_return_split(w: &PathWord) -> Result<(PathWord, PathWord)> {
    w.require_dyck()?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut h = 0;
    let mut cut = w.len();
    for (i, s) in w.steps().enumerate() {
        h += s.delta();
        if h == 0 {
            cut = i + 1;
            break;
        }
    }
    Ok((w.slice(0..cut), w.slice(cut..w.len())))
}

/// `U (∏ U Wi D) D T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiDecomposition {
    pub inner: Vec<PathWord>,
    pub tail: PathWord,
}

impl PhiDecomposition {
    pub fn s(&self) -> usize {
        self.inner.len()
    }

    pub fn recompose(&self) -> PathWord {
        let mut b = WordBuilder::new();
        b.push(Step::Up);
        for wi in &self.inner {
            b.push(Step::Up);
            b.extend_from(wi, 0..wi.len());
            b.push(Step::Down);
        }
        b.push(Step::Down);
        b.extend_from(&self.tail, 0..self.tail.len());
        b.finish()
    }
}

/// `(∏ U Wi) U D^(s+1) T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiDecomposition {
    pub inner: Vec<PathWord>,
    pub tail: PathWord,
}

impl PsiDecomposition {
    pub fn s(&self) -> usize {
        self.inner.len()
    }

    pub fn recompose(&self) -> PathWord {
        let mut b = WordBuilder::new();
        for wi in &self.inner {
            b.push(Step::Up);
            b.extend_from(wi, 0..wi.len());
        }
        b.push(Step::Up);
        b.push_n(Step::Down, self.s() + 1);
        b.extend_from(&self.tail, 0..self.tail.len());
        b.finish()
    }
}

fn nonempty_dyck(w: &PathWord) -> Result<Matching> {
    let m = Matching::of_dyck(w)?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(m)
}

pub fn phi_parse(w: &PathWord) -> Result<PhiDecomposition> {
    let m = nonempty_dyck(w)?;
    let mut spans = Vec::new();
    let tail = phi_spans(&m, 0..w.len(), &mut spans);
    Ok(PhiDecomposition {
        inner: spans.into_iter().map(|r| w.slice(r)).collect(),
        tail: w.slice(tail),
    })
}

pub fn psi_parse(w: &PathWord) -> Result<PsiDecomposition> {
    let m = nonempty_dyck(w)?;
    let mut spans = Vec::new();
    let tail = psi_spans(w, &m, 0..w.len(), &mut spans);
    Ok(PsiDecomposition {
        inner: spans.into_iter().map(|r| w.slice(r)).collect(),
        tail: w.slice(tail),
    })
}

/// Alternating Dyck / negative Dyck factors of a bilateral word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingFactorization {
    pub factors: Vec<PathWord>,
}

impl CrossingFactorization {
    /// Number of crossings, one per factor boundary.
    pub fn crossings(&self) -> usize {
        self.factors.len().saturating_sub(1)
    }

    pub fn recompose(&self) -> PathWord {
        PathWord::concat(&self.factors)
    }
}

/// Ranges of the crossing factors. Boundaries sit at the axis vertices whose
/// neighbouring steps point the same way.
pub(crate) fn crossing_spans(w: &PathWord) -> Vec<Range<usize>> {
    let mut spans = Vec::new();
    if w.is_empty() {
        return spans;
    }
    let mut start = 0;
    let mut h = 0;
    let mut prev: Option<Step> = None;
    for (i, s) in w.steps().enumerate() {
        if h == 0 && prev == Some(s) {
            spans.push(start..i);
            start = i;
        }
        h += s.delta();
        prev = Some(s);
    }
    spans.push(start..w.len());
    spans
}

pub fn crossing_factorize(w: &PathWord) -> Result<CrossingFactorization> {
    w.require_bilateral()?;
    Ok(CrossingFactorization {
        factors: crossing_spans(w).into_iter().map(|r| w.slice(r)).collect(),
    })
}

/// Class of each crossing factor, in order.
pub fn factor_classes(w: &PathWord) -> Result<Vec<(PathClass, usize)>> {
    Ok(crossing_factorize(w)?
        .factors
        .iter()
        .map(|f| (f.classify(), f.len()))
        .collect())
}
