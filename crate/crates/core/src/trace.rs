//! Bracketed intermediate stages of the recursive maps.
//!
//! Stage `k` shows the word after the recursion has been applied to every
//! node of depth below `k`. Pending arguments are written inside parentheses
//! and in turn show their own decomposition, so `()` marks an empty
//! argument. An empty tail at the end of a bracket is left implicit since its
//! position is already determined. For the worked 18-step example, φ yields
//!
//! ```text
//! UU(UU()DD)DU(UU(UD)DU()DD)DD
//! U(UU()DD)U(UU(UD)DU()DD)UDDD
//! U(U()UDD)U(U(UD)U()UDDD)UDDD
//! U(U()UDD)U(U(UD)U()UDDD)UDDD
//! ```

use crate::bijection::{alpha, beta, phi, psi, Bijection};
use crate::decompose::{crossing_factorize, first_return_split, phi_spans, psi_spans, Matching};
use crate::error::Result;
use crate::word::{PathClass, PathWord};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Layout {
    /// `U (U c D)* D`
    Nested,
    /// `(U c)* U D^(s+1)`
    Staircase,
}

struct Node {
    depth: usize,
    empty: bool,
    children: Vec<usize>,
    tail: usize,
}

struct Tree {
    nodes: Vec<Node>,
    /// Layout of a node before and after the map is applied to it.
    before: Layout,
    after: Layout,
}

enum Piece {
    Node(usize),
    Text(&'static str),
    Downs(usize),
}

impl Tree {
    fn build(w: &PathWord, map: Bijection) -> Result<Tree> {
        let m = Matching::of_dyck(w)?;
        let (before, after) = match map {
            Bijection::Psi => (Layout::Staircase, Layout::Nested),
            _ => (Layout::Nested, Layout::Staircase),
        };
        let mut nodes = vec![Node {
            depth: 0,
            empty: w.is_empty(),
            children: Vec::new(),
            tail: 0,
        }];
        let mut work = vec![(0usize, 0..w.len())];
        let mut inner = Vec::new();
        while let Some((id, range)) = work.pop() {
            if range.is_empty() {
                continue;
            }
            let tail = match map {
                Bijection::Psi => psi_spans(w, &m, range, &mut inner),
                _ => phi_spans(&m, range, &mut inner),
            };
            let depth = nodes[id].depth + 1;
            let mut children = Vec::with_capacity(inner.len());
            for r in inner.drain(..).chain(std::iter::once(tail)) {
                let child = nodes.len();
                nodes.push(Node {
                    depth,
                    empty: r.is_empty(),
                    children: Vec::new(),
                    tail: 0,
                });
                children.push(child);
                work.push((child, r));
            }
            nodes[id].tail = children.pop().expect("tail node");
            nodes[id].children = children;
        }
        Ok(Tree {
            nodes,
            before,
            after,
        })
    }

    fn stage_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| !n.empty)
            .map(|n| n.depth + 2)
            .max()
            .unwrap_or(1)
    }

    fn render(&self, stage: usize) -> String {
        let mut out = String::new();
        let mut stack = vec![Piece::Node(0)];
        while let Some(piece) = stack.pop() {
            match piece {
                Piece::Text(t) => out.push_str(t),
                Piece::Downs(k) => out.extend(std::iter::repeat_n('D', k)),
                Piece::Node(id) => {
                    let node = &self.nodes[id];
                    if node.empty {
                        continue;
                    }
                    let layout = if node.depth < stage {
                        self.after
                    } else {
                        self.before
                    };
                    // Pushed in reverse order of appearance.
                    if !self.nodes[node.tail].empty {
                        stack.push(Piece::Text(")"));
                        stack.push(Piece::Node(node.tail));
                        stack.push(Piece::Text("("));
                    }
                    match layout {
                        Layout::Nested => {
                            stack.push(Piece::Text("D"));
                            for &c in node.children.iter().rev() {
                                stack.push(Piece::Text(")D"));
                                stack.push(Piece::Node(c));
                                stack.push(Piece::Text("U("));
                            }
                            stack.push(Piece::Text("U"));
                        }
                        Layout::Staircase => {
                            stack.push(Piece::Downs(node.children.len() + 1));
                            stack.push(Piece::Text("U"));
                            for &c in node.children.iter().rev() {
                                stack.push(Piece::Text(")"));
                                stack.push(Piece::Node(c));
                                stack.push(Piece::Text("U("));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Stage lines of φ or ψ on a Dyck word; the first line is the bracketed
/// input and the last is the bracketed image.
pub fn stages(w: &PathWord, map: Bijection) -> Result<Vec<String>> {
    assert!(
        matches!(map, Bijection::Phi | Bijection::Psi),
        "stages are defined for phi and psi"
    );
    let tree = Tree::build(w, map)?;
    Ok((0..tree.stage_count()).map(|k| tree.render(k)).collect())
}

fn bracket_beta(w: &PathWord) -> Result<String> {
    if w.is_empty() {
        return Ok(String::new());
    }
    let (head, rest) = first_return_split(w)?;
    Ok(format!("U({})D({})", head.slice(1..head.len() - 1), rest))
}

/// Human-readable derivation lines for any of the six maps.
pub fn trace(w: &PathWord, map: Bijection) -> Result<Vec<String>> {
    match map {
        Bijection::Phi | Bijection::Psi => stages(w, map),
        Bijection::Alpha => Ok(vec![w.to_string(), alpha(w)?.to_string()]),
        Bijection::Beta => Ok(vec![bracket_beta(w)?, bracket_beta(&beta(w)?)?]),
        Bijection::PhiExt | Bijection::PsiExt => {
            w.require_bilateral()?;
            let fact = crossing_factorize(w)?;
            let mut lines = vec![format!(
                "factors: {}",
                fact.factors
                    .iter()
                    .map(|f| format!("({f})"))
                    .collect::<String>()
            )];
            for (i, f) in fact.factors.iter().enumerate() {
                if f.classify() == PathClass::Dyck {
                    let inner = if map == Bijection::PhiExt {
                        Bijection::Phi
                    } else {
                        Bijection::Psi
                    };
                    lines.push(format!("factor {} dyck: {}", i + 1, inner));
                    lines.extend(stages(f, inner)?.into_iter().map(|s| format!("  {s}")));
                } else if map == Bijection::PhiExt {
                    let a = alpha(f)?;
                    let b = beta(&a)?;
                    let p = phi(&b)?;
                    let r = alpha(&p)?;
                    lines.push(format!(
                        "factor {} negative: alpha {a} -> beta {b} -> phi {p} -> alpha {r}",
                        i + 1
                    ));
                } else {
                    let a = alpha(f)?;
                    let p = psi(&a)?;
                    let b = beta(&p)?;
                    let r = alpha(&b)?;
                    lines.push(format!(
                        "factor {} negative: alpha {a} -> psi {p} -> beta {b} -> alpha {r}",
                        i + 1
                    ));
                }
            }
            Ok(lines)
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
    fn worked_example_phi() {
        let lines = stages(&w("UUUUDDDUUUUDDUDDDD"), Bijection::Phi).unwrap();
        assert_eq!(
            lines,
            vec![
                "UU(UU()DD)DU(UU(UD)DU()DD)DD",
                "U(UU()DD)U(UU(UD)DU()DD)UDDD",
                "U(U()UDD)U(U(UD)U()UDDD)UDDD",
                "U(U()UDD)U(U(UD)U()UDDD)UDDD",
            ]
        );
    }

    #[test]
    fn worked_example_psi() {
        let lines = stages(&w("UUUDDUUUDUUDDDUDDD"), Bijection::Psi).unwrap();
        assert_eq!(
            lines,
            vec![
                "U(U()UDD)U(U(UD)U()UDDD)UDDD",
                "UU(U()UDD)DU(U(UD)U()UDDD)DD",
                "UU(UU()DD)DU(UU(UD)DU()DD)DD",
                "UU(UU()DD)DU(UU(UD)DU()DD)DD",
            ]
        );
    }

    #[test]
    fn stripping_brackets_gives_the_words() {
        for (input, map) in [
            ("UUDDUDUUUDDD", Bijection::Phi),
            ("UDUUDDUUUDDD", Bijection::Psi),
        ] {
            let word = w(input);
            let lines = stages(&word, map).unwrap();
            let strip = |s: &String| {
                s.chars()
                    .filter(|c| *c == 'U' || *c == 'D')
                    .collect::<String>()
            };
            assert_eq!(strip(&lines[0]), input);
            assert_eq!(
                strip(lines.last().unwrap()),
                map.apply(&word).unwrap().to_string()
            );
        }
    }

    #[test]
    fn nonempty_tails_are_bracketed() {
        let lines = stages(&w("UDUD"), Bijection::Phi).unwrap();
        assert_eq!(lines, vec!["UD(UD)", "UD(UD)", "UD(UD)"]);
    }

    #[test]
    fn empty_word_has_one_stage() {
        assert_eq!(stages(&w(""), Bijection::Phi).unwrap(), vec![String::new()]);
    }

    #[test]
    fn extension_trace() {
        let lines = trace(&w("UDDDUU"), Bijection::PhiExt).unwrap();
        assert_eq!(lines[0], "factors: (UD)(DDUU)");
        assert_eq!(lines[1], "factor 1 dyck: phi");
        assert_eq!(
            lines.last().unwrap(),
            "factor 2 negative: alpha UUDD -> beta UDUD -> phi UDUD -> alpha DUDU"
        );
        let lines = trace(&w("UUDD"), Bijection::Beta).unwrap();
        assert_eq!(lines, vec!["U(UD)D()", "U()D(UD)"]);
    }
}
