//! The maps φ, ψ, α, β and their bilateral extensions φ′, ψ′.
//!
//! φ and ψ are evaluated with an explicit work stack over index ranges of the
//! input, appending into a preallocated output. Each input step is visited a
//! constant number of times, so both maps run in linear time and their
//! memory use does not depend on the call stack, whatever the path height.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::decompose::{crossing_spans, first_return_split, phi_spans, psi_spans, Matching};
use crate::error::Result;
use crate::word::{PathClass, PathWord, Step, WordBuilder};

enum Task {
    Map(Range<usize>),
    Emit(Step, usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Phi,
    Psi,
}

fn run(w: &PathWord, dir: Direction) -> Result<PathWord> {
    let m = Matching::of_dyck(w)?;
    let mut out = WordBuilder::with_capacity(w.len());
    let mut stack = vec![Task::Map(0..w.len())];
    let mut inner = Vec::new();
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(step, count) => out.push_n(step, count),
            Task::Map(r) if r.is_empty() => {}
            Task::Map(r) => match dir {
                // (∏ U φ(Wi)) U D D^s φ(T)
                Direction::Phi => {
                    let tail = phi_spans(&m, r, &mut inner);
                    let s = inner.len();
                    stack.push(Task::Map(tail));
                    stack.push(Task::Emit(Step::Down, s + 1));
                    stack.push(Task::Emit(Step::Up, 1));
                    for wi in inner.drain(..).rev() {
                        stack.push(Task::Map(wi));
                        stack.push(Task::Emit(Step::Up, 1));
                    }
                }
                // U (∏ U ψ(Wi) D) D ψ(T)
                Direction::Psi => {
                    let tail = psi_spans(w, &m, r, &mut inner);
                    stack.push(Task::Map(tail));
                    stack.push(Task::Emit(Step::Down, 1));
                    for wi in inner.drain(..).rev() {
                        stack.push(Task::Emit(Step::Down, 1));
                        stack.push(Task::Map(wi));
                        stack.push(Task::Emit(Step::Up, 1));
                    }
                    stack.push(Task::Emit(Step::Up, 1));
                }
            },
        }
    }
    debug_assert_eq!(out.len(), w.len());
    Ok(out.finish())
}

/// Sends up-steps at odd height to peaks, keeping contacts. Defined on Dyck
/// words and the empty word.
pub fn phi(w: &PathWord) -> Result<PathWord> {
    run(w, Direction::Phi)
}

/// Inverse of [`phi`].
pub fn psi(w: &PathWord) -> Result<PathWord> {
    run(w, Direction::Psi)
}

/// Reflection in the x-axis.
pub fn alpha(w: &PathWord) -> Result<PathWord> {
    w.require_bilateral()?;
    Ok(w.reflect())
}

/// `U W1 D W2 -> U W2 D W1`, with `β(ε) = ε`.
pub fn beta(w: &PathWord) -> Result<PathWord> {
    w.require_dyck()?;
    if w.is_empty() {
        return Ok(PathWord::empty());
    }
    let (head, rest) = first_return_split(w)?;
    let mut b = WordBuilder::with_capacity(w.len());
    b.push(Step::Up);
    b.extend_from(&rest, 0..rest.len());
    b.push(Step::Down);
    b.extend_from(&head, 1..head.len() - 1);
    Ok(b.finish())
}

fn map_factors(
    w: &PathWord,
    positive: fn(&PathWord) -> Result<PathWord>,
    negative: fn(&PathWord) -> Result<PathWord>,
) -> Result<PathWord> {
    w.require_bilateral()?;
    match w.classify() {
        PathClass::Empty => Ok(PathWord::empty()),
        PathClass::Dyck => positive(w),
        PathClass::NegativeDyck => negative(w),
        _ => {
            let mut b = WordBuilder::with_capacity(w.len());
            for span in crossing_spans(w) {
                let factor = w.slice(span);
                let image = match factor.classify() {
                    PathClass::Dyck => positive(&factor)?,
                    _ => negative(&factor)?,
                };
                b.extend_from(&image, 0..image.len());
            }
            Ok(b.finish())
        }
    }
}

fn phi_negative(w: &PathWord) -> Result<PathWord> {
    alpha(&phi(&beta(&alpha(w)?)?)?)
}

fn psi_negative(w: &PathWord) -> Result<PathWord> {
    alpha(&beta(&psi(&alpha(w)?)?)?)
}

/// φ′: sends up-steps at odd height to peaks on all bilateral words.
pub fn phi_ext(w: &PathWord) -> Result<PathWord> {
    map_factors(w, phi, phi_negative)
}

/// ψ′, the inverse of [`phi_ext`].
pub fn psi_ext(w: &PathWord) -> Result<PathWord> {
    map_factors(w, psi, psi_negative)
}

/// Selector over the six maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Phi,
    Psi,
    Alpha,
    Beta,
    PhiExt,
    PsiExt,
}

impl Bijection {
    pub const ALL: [Bijection; 6] = [
        Bijection::Phi,
        Bijection::Psi,
        Bijection::Alpha,
        Bijection::Beta,
        Bijection::PhiExt,
        Bijection::PsiExt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Phi => "phi",
            Bijection::Psi => "psi",
            Bijection::Alpha => "alpha",
            Bijection::Beta => "beta",
            Bijection::PhiExt => "phi-ext",
            Bijection::PsiExt => "psi-ext",
        }
    }

    pub fn apply(self, w: &PathWord) -> Result<PathWord> {
        match self {
            Bijection::Phi => phi(w),
            Bijection::Psi => psi(w),
            Bijection::Alpha => alpha(w),
            Bijection::Beta => beta(w),
            Bijection::PhiExt => phi_ext(w),
            Bijection::PsiExt => psi_ext(w),
        }
    }

    /// Whether the domain is Dyck words only (otherwise all bilateral words).
    pub fn dyck_only(self) -> bool {
        matches!(self, Bijection::Phi | Bijection::Psi | Bijection::Beta)
    }

    pub fn inverse(self) -> Bijection {
        match self {
            Bijection::Phi => Bijection::Psi,
            Bijection::Psi => Bijection::Phi,
            Bijection::PhiExt => Bijection::PsiExt,
            Bijection::PsiExt => Bijection::PhiExt,
            other => other,
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown map {s:?}"))
    }
}
