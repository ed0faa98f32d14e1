//! Step words: storage, parsing, height bookkeeping and classification.
//!
//! A [`PathWord`] is an immutable sequence of up/down steps packed one bit per
//! step. Construction caches the final, minimum and maximum prefix heights so
//! that classification is O(1); the full vertex-height profile is computed on
//! first request and kept for later [`PathWord::step_height`] queries.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::str::FromStr;
use std::sync::OnceLock;

use bitvec::prelude::*;

use crate::error::{DyckViolation, Error, Result};

/// One lattice step: `(1,1)` or `(1,-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    /// Accepts `U`/`D`, lower case, and `(`/`)` as aliases.
    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' | 'u' | '(' => Some(Step::Up),
            'D' | 'd' | ')' => Some(Step::Down),
            _ => None,
        }
    }

    // Down is the set bit so that bit order agrees with U < D.
    #[inline]
    fn from_bit(bit: bool) -> Step {
        if bit {
            Step::Down
        } else {
            Step::Up
        }
    }

    #[inline]
    fn to_bit(self) -> bool {
        self == Step::Down
    }
}

pub(crate) type Bits = BitVec<u64, Lsb0>;

/// Classification of a step word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    Empty,
    /// Nonempty, closed, never below the axis.
    Dyck,
    /// Nonempty, closed, never above the axis.
    NegativeDyck,
    /// Closed and visits both sides of the axis.
    BilateralProper,
    /// Does not end on the axis.
    NotClosed,
}

impl PathClass {
    pub fn name(self) -> &'static str {
        match self {
            PathClass::Empty => "empty",
            PathClass::Dyck => "dyck",
            PathClass::NegativeDyck => "negative-dyck",
            PathClass::BilateralProper => "bilateral",
            PathClass::NotClosed => "not-closed",
        }
    }

    pub fn is_bilateral(self) -> bool {
        self != PathClass::NotClosed
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Vertex heights after each step; the start vertex at height 0 is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    heights: Vec<i64>,
}

impl HeightProfile {
    pub fn as_slice(&self) -> &[i64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of vertex `v`, where vertex 0 is the origin.
    pub fn vertex(&self, v: usize) -> i64 {
        if v == 0 {
            0
        } else {
            self.heights[v - 1]
        }
    }

    /// Height of the 1-based step `i`: the higher of its two endpoints.
    pub fn step_height(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.heights.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.heights.len(),
            });
        }
        Ok(self.vertex(i - 1).max(self.vertex(i)))
    }
}

/// An immutable word over `{U, D}`.
#[derive(Clone)]
pub struct PathWord {
    bits: Bits,
    final_height: i64,
    min_height: i64,
    max_height: i64,
    profile: OnceLock<HeightProfile>,
}

impl PathWord {
    pub fn empty() -> PathWord {
        WordBuilder::new().finish()
    }

    pub fn from_steps<I: IntoIterator<Item = Step>>(steps: I) -> PathWord {
        let mut b = WordBuilder::new();
        for s in steps {
            b.push(s);
        }
        b.finish()
    }

    /// Parses a word; the empty string is the empty word.
    pub fn parse(text: &str) -> Result<PathWord> {
        let mut b = WordBuilder::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match Step::from_char(c) {
                Some(s) => b.push(s),
                None => {
                    return Err(Error::InvalidCharacter {
                        position: i + 1,
                        found: c,
                    })
                }
            }
        }
        Ok(b.finish())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Number of up-steps minus number of down-steps.
    pub fn final_height(&self) -> i64 {
        self.final_height
    }

    /// Lowest prefix height, counting the origin.
    pub fn min_height(&self) -> i64 {
        self.min_height
    }

    /// Highest prefix height, counting the origin.
    pub fn max_height(&self) -> i64 {
        self.max_height
    }

    /// 0-based step access.
    #[inline]
    pub fn step(&self, i: usize) -> Step {
        Step::from_bit(self.bits[i])
    }

    pub fn get(&self, i: usize) -> Option<Step> {
        self.bits.get(i).map(|b| Step::from_bit(*b))
    }

    pub fn steps(&self) -> impl DoubleEndedIterator<Item = Step> + ExactSizeIterator + '_ {
        self.bits.iter().by_vals().map(Step::from_bit)
    }

    pub fn classify(&self) -> PathClass {
        if self.is_empty() {
            PathClass::Empty
        } else if self.final_height != 0 {
            PathClass::NotClosed
        } else if self.min_height >= 0 {
            PathClass::Dyck
        } else if self.max_height <= 0 {
            PathClass::NegativeDyck
        } else {
            PathClass::BilateralProper
        }
    }

    pub fn height_profile(&self) -> &HeightProfile {
        self.profile.get_or_init(|| {
            let mut h = 0;
            let heights = self
                .steps()
                .map(|s| {
                    h += s.delta();
                    h
                })
                .collect();
            HeightProfile { heights }
        })
    }

    /// Height of the 1-based step `i`. O(1) after the first call.
    pub fn step_height(&self, i: usize) -> Result<i64> {
        self.height_profile().step_height(i)
    }

    /// Succeeds for the empty word and for Dyck words.
    pub fn require_dyck(&self) -> Result<()> {
        if self.min_height >= 0 && self.final_height == 0 {
            return Ok(());
        }
        if self.min_height < 0 {
            let mut h = 0;
            for (i, s) in self.steps().enumerate() {
                h += s.delta();
                if h < 0 {
                    return Err(Error::NotADyckWord(DyckViolation::BelowAxis {
                        step: i + 1,
                    }));
                }
            }
        }
        Err(Error::NotADyckWord(DyckViolation::Unbalanced {
            final_height: self.final_height,
        }))
    }

    pub fn require_bilateral(&self) -> Result<()> {
        if self.final_height == 0 {
            Ok(())
        } else {
            Err(Error::NotBilateral {
                final_height: self.final_height,
            })
        }
    }

    /// Copy of the steps in `range`.
    pub fn slice(&self, range: Range<usize>) -> PathWord {
        let mut b = WordBuilder::with_capacity(range.len());
        b.extend_from(self, range);
        b.finish()
    }

    /// Every step flipped.
    pub fn reflect(&self) -> PathWord {
        let mut bits = self.bits.clone();
        bits.iter_mut().for_each(|mut b| *b = !*b);
        PathWord {
            bits,
            final_height: -self.final_height,
            min_height: -self.max_height,
            max_height: -self.min_height,
            profile: OnceLock::new(),
        }
    }

    pub fn concat<'a, I: IntoIterator<Item = &'a PathWord>>(parts: I) -> PathWord {
        let mut b = WordBuilder::new();
        for p in parts {
            b.extend_from(p, 0..p.len());
        }
        b.finish()
    }
}

impl PartialEq for PathWord {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for PathWord {}

impl Hash for PathWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

/// Lexicographic with `U < D`; a proper prefix sorts first.
impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps().map(Step::as_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathWord({self})")
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PathWord::parse(s)
    }
}

impl serde::Serialize for PathWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a word; see [`PathWord::parse`].
pub fn parse_word(text: &str) -> Result<PathWord> {
    PathWord::parse(text)
}

/// Append-only construction of a [`PathWord`], tracking heights as it goes.
#[derive(Debug, Default)]
pub struct WordBuilder {
    bits: Bits,
    height: i64,
    min: i64,
    max: i64,
}

impl WordBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(steps: usize) -> Self {
        WordBuilder {
            bits: Bits::with_capacity(steps),
            ..Self::default()
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn push(&mut self, step: Step) {
        self.bits.push(step.to_bit());
        self.height += step.delta();
        self.min = self.min.min(self.height);
        self.max = self.max.max(self.height);
    }

    pub fn push_n(&mut self, step: Step, count: usize) {
        if count == 0 {
            return;
        }
        let new_len = self.bits.len() + count;
        self.bits.resize(new_len, step.to_bit());
        let end = self.height + step.delta() * count as i64;
        self.min = self.min.min(end);
        self.max = self.max.max(end);
        self.height = end;
    }

    pub fn extend_from(&mut self, word: &PathWord, range: Range<usize>) {
        for bit in word.bits[range].iter().by_vals() {
            self.push(Step::from_bit(bit));
        }
    }

    pub fn finish(self) -> PathWord {
        PathWord {
            bits: self.bits,
            final_height: self.height,
            min_height: self.min,
            max_height: self.max,
            profile: OnceLock::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_caches_extremes() {
        let word = w("UUDD");
        assert_eq!(word.len(), 4);
        assert_eq!(word.final_height(), 0);
        assert_eq!(word.min_height(), 0);
        assert_eq!(word.max_height(), 2);
    }

    #[test]
    fn parse_empty_and_aliases() {
        assert!(w("").is_empty());
        assert_eq!(w("(())").to_string(), "UUDD");
        assert_eq!(w("udDU").to_string(), "UDDU");
    }

    #[test]
    fn parse_reports_position() {
        assert_eq!(
            PathWord::parse("UXD"),
            Err(Error::InvalidCharacter {
                position: 2,
                found: 'X'
            })
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(w("").classify(), PathClass::Empty);
        assert_eq!(w("UUDD").classify(), PathClass::Dyck);
        assert_eq!(w("DDUU").classify(), PathClass::NegativeDyck);
        assert_eq!(w("UDDU").classify(), PathClass::BilateralProper);
        assert_eq!(w("UDU").classify(), PathClass::NotClosed);
    }

    #[test]
    fn profiles() {
        assert_eq!(w("UUDD").height_profile().as_slice(), &[1, 2, 1, 0]);
        assert_eq!(w("DDUU").height_profile().as_slice(), &[-1, -2, -1, 0]);
        assert_eq!(w("UDDU").height_profile().as_slice(), &[1, 0, -1, 0]);
        assert_eq!(
            w("UUUUDDDUUUUDDUDDDD").height_profile().as_slice(),
            &[1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 5, 4, 3, 4, 3, 2, 1, 0]
        );
    }

    #[test]
    fn step_heights() {
        assert_eq!(w("UUDD").step_height(3), Ok(2));
        assert_eq!(w("DDUU").step_height(3), Ok(-1));
        assert_eq!(w("UD").step_height(1), Ok(1));
        assert_eq!(
            w("UD").step_height(0),
            Err(Error::IndexOutOfRange { index: 0, len: 2 })
        );
        assert_eq!(
            w("UD").step_height(3),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        );
    }

    #[test]
    fn require_dyck_reports_first_dip() {
        assert_eq!(w("UUDD").require_dyck(), Ok(()));
        assert_eq!(w("").require_dyck(), Ok(()));
        assert_eq!(
            w("UDDU").require_dyck(),
            Err(Error::NotADyckWord(DyckViolation::BelowAxis { step: 3 }))
        );
        assert_eq!(
            w("UUD").require_dyck(),
            Err(Error::NotADyckWord(DyckViolation::Unbalanced {
                final_height: 1
            }))
        );
    }

    #[test]
    fn reflect_swaps_extremes() {
        let r = w("UUDDDU").reflect();
        assert_eq!(r.to_string(), "DDUUUD");
        assert_eq!((r.min_height(), r.max_height()), (-2, 1));
    }

    #[test]
    fn ordering_is_u_before_d() {
        assert!(w("UUDD") < w("UDUD"));
        assert!(w("UD") < w("UDUD"));
        assert!(w("UDUD") < w("DU"));
    }

    #[test]
    fn builder_push_n() {
        let mut b = WordBuilder::new();
        b.push(Step::Up);
        b.push_n(Step::Up, 3);
        b.push_n(Step::Down, 5);
        let word = b.finish();
        assert_eq!(word.to_string(), "UUUUDDDDD");
        assert_eq!(
            (word.min_height(), word.max_height(), word.final_height()),
            (-1, 4, -1)
        );
    }
}
