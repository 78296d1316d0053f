//! Braid words, their permutations, and closure-preserving moves.
//!
//! A word is read left to right from the bottom of the braid upwards, so the
//! first letter acts first. Letter `i > 0` is the positive crossing `σ_i`
//! between strands `i` and `i + 1`; `-i` is its inverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} at index {index} out of range for {strands} strands")]
    LetterOutOfRange {
        index: usize,
        letter: i32,
        strands: usize,
    },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("move not applicable: {0}")]
    InapplicableMove(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some((index, &letter)) = letters
            .iter()
            .enumerate()
            .find(|(_, &e)| e == 0 || e.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::LetterOutOfRange {
                index,
                letter,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn trivial(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.letters.iter().filter(|&&e| e < 0).count()
    }

    pub fn compose(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|e| -e).collect(),
        }
    }

    /// Repeatedly cancels adjacent `e, -e` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        // pos[s] = current position of the strand that started at s
        let mut at: Vec<usize> = (0..self.strands).collect();
        // at[p] = strand currently at position p
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
            pos[at[i]] = i;
            pos[at[i + 1]] = i + 1;
        }
        Permutation { images: pos }
    }

    /// Number of link components of the closure.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|e| e.signum() as i64).sum()
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|e| -e).collect(),
        }
    }

    /// Letter `±i` becomes `±(n - i)`.
    pub fn flip(&self) -> Self {
        let n = self.strands as i32;
        Self {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|&e| e.signum() * (n - e.abs()))
                .collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn apply_move(&self, m: &Move) -> Result<Self, BraidError> {
        let bad = |msg: String| Err(BraidError::InapplicableMove(msg));
        let w = &self.letters;
        match *m {
            Move::FreeCancel { pos } => {
                if pos + 1 >= w.len() || w[pos] != -w[pos + 1] {
                    return bad(format!("no cancelling pair at {pos}"));
                }
                let mut letters = w.clone();
                letters.drain(pos..pos + 2);
                Ok(self.with_letters(letters))
            }
            Move::FreeInsert { pos, letter } => {
                if pos > w.len() || letter == 0 || letter.unsigned_abs() as usize >= self.strands {
                    return bad(format!("cannot insert {letter} at {pos}"));
                }
                let mut letters = w.clone();
                letters.splice(pos..pos, [letter, -letter]);
                Ok(self.with_letters(letters))
            }
            Move::BraidRelationFar { pos } => {
                if pos + 1 >= w.len() || (w[pos].abs() - w[pos + 1].abs()).abs() < 2 {
                    return bad(format!("letters at {pos} are not distant"));
                }
                let mut letters = w.clone();
                letters.swap(pos, pos + 1);
                Ok(self.with_letters(letters))
            }
            Move::BraidRelationNear { pos } => {
                if pos + 2 >= w.len() {
                    return bad(format!("no letter triple at {pos}"));
                }
                let (a, b, c) = (w[pos], w[pos + 1], w[pos + 2]);
                if a != c || (a.abs() - b.abs()).abs() != 1 || a.signum() != b.signum() {
                    return bad(format!("{a} {b} {c} is not a braid-relation triple"));
                }
                let mut letters = w.clone();
                letters[pos..pos + 3].copy_from_slice(&[b, a, b]);
                Ok(self.with_letters(letters))
            }
            Move::ConjugateCyclic { shift } => {
                if w.is_empty() {
                    return Ok(self.clone());
                }
                let mut letters = w.clone();
                letters.rotate_left(shift % w.len());
                Ok(self.with_letters(letters))
            }
            Move::Stabilize { positive } => {
                let n = self.strands as i32;
                let mut letters = w.clone();
                letters.push(if positive { n } else { -n });
                Ok(Self {
                    strands: self.strands + 1,
                    letters,
                })
            }
            Move::Destabilize => {
                let top = self.strands as i32 - 1;
                if top < 1 || w.last().map(|e| e.abs()) != Some(top) {
                    return bad(format!("last letter is not ±{top}"));
                }
                if w.iter().filter(|e| e.abs() == top).count() != 1 {
                    return bad(format!("generator {top} occurs more than once"));
                }
                Ok(Self {
                    strands: self.strands - 1,
                    letters: w[..w.len() - 1].to_vec(),
                })
            }
            Move::Flip => Ok(self.flip()),
            Move::Mirror => Ok(self.mirror()),
            Move::Reverse => Ok(self.reverse()),
        }
    }

    fn with_letters(&self, letters: Vec<i32>) -> Self {
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Parses the text format `n: e1 e2 ...`.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(input);
        let Some(first) = tokens.first() else {
            return Err(ParseError {
                line: 1,
                column: 1,
                message: "empty input".into(),
            });
        };
        let err = |tok: &Token, message: String| ParseError {
            line: tok.line,
            column: tok.column,
            message,
        };
        let Some(head) = first.text.strip_suffix(':') else {
            return Err(err(first, "expected header `n:`".into()));
        };
        let strands: usize = head
            .parse()
            .map_err(|_| err(first, format!("invalid strand count `{head}`")))?;
        if strands == 0 {
            return Err(err(first, "strand count must be positive".into()));
        }
        let mut letters = Vec::with_capacity(tokens.len() - 1);
        for (k, tok) in tokens[1..].iter().enumerate() {
            let e: i32 = tok.text.parse().map_err(|_| {
                err(
                    tok,
                    format!("token {} `{}` is not an integer", k + 1, tok.text),
                )
            })?;
            if e == 0 || e.unsigned_abs() as usize >= strands {
                return Err(err(
                    tok,
                    format!(
                        "token {}: letter {e} out of range for {strands} strands",
                        k + 1
                    ),
                ));
            }
            letters.push(e);
        }
        Ok(Self { strands, letters })
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(input: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (ln, line) in input.lines().enumerate() {
        let mut start: Option<usize> = None;
        for (i, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    out.push(Token {
                        text: &line[s..i],
                        line: ln + 1,
                        column: line[..s].chars().count() + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// A permutation of strand positions, 0-based internally.
///
/// `images[j]` is the top position reached by the strand that starts at
/// bottom position `j`. With the bottom-first reading order this gives
/// `perm(a·b) = perm(b) ∘ perm(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// `true` for even permutations.
    pub fn is_even(&self) -> bool {
        (self.images.len() - self.cycle_count()).is_multiple_of(2)
    }
}

/// Rewrites that keep the closure's link type, except `Mirror`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Move {
    /// Delete `e, -e` at `pos, pos + 1`.
    FreeCancel {
        pos: usize,
    },
    /// Insert `letter, -letter` before `pos`.
    FreeInsert {
        pos: usize,
        letter: i32,
    },
    /// Swap commuting letters at `pos, pos + 1`.
    BraidRelationFar {
        pos: usize,
    },
    /// `a b a -> b a b` for adjacent generators of equal sign.
    BraidRelationNear {
        pos: usize,
    },
    /// Rotate left by `shift`, i.e. conjugate.
    ConjugateCyclic {
        shift: usize,
    },
    /// Add a strand and a crossing `±n` with it.
    Stabilize {
        positive: bool,
    },
    /// Drop the last letter `±(n-1)` and the last strand.
    Destabilize,
    Flip,
    Mirror,
    Reverse,
}

impl Move {
    pub fn preserves_link_type(&self) -> bool {
        !matches!(self, Move::Mirror)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(b(2, &[1, 1, 1]).len(), 3);
        assert!(b(1, &[]).is_empty());
        assert_eq!(
            BraidWord::new(3, vec![2, -3]),
            Err(BraidError::LetterOutOfRange {
                index: 1,
                letter: -3,
                strands: 3
            })
        );
        assert_eq!(BraidWord::new(0, vec![]), Err(BraidError::NoStrands));
    }

    #[test]
    fn compose_inverse() {
        let s1 = b(2, &[1]);
        assert_eq!(s1.compose(&s1).unwrap(), b(2, &[1, 1]));
        assert_eq!(s1.compose(&b(2, &[])).unwrap(), s1);
        assert!(s1.compose(&b(3, &[1])).is_err());
        assert_eq!(b(3, &[1, 2]).inverse(), b(3, &[-2, -1]));
        assert_eq!(b(3, &[]).inverse(), b(3, &[]));
        assert_eq!(b(2, &[-1]).inverse(), b(2, &[1]));
        let w = b(4, &[1, -3, 2, 2]);
        assert!(w.compose(&w.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn permutations_and_components() {
        assert_eq!(b(2, &[1]).permutation().images(), &[1, 0]);
        assert_eq!(b(3, &[]).permutation(), Permutation::identity(3));
        let t42 = b(4, &[1, 2, 3, 1, 2, 3]);
        assert_eq!(t42.permutation().cycle_count(), 2);
        assert_eq!(t42.component_count(), 2);
        assert_eq!(b(5, &[]).component_count(), 5);
        assert_eq!(b(2, &[1, 1, 1]).component_count(), 1);
        // σ1 then σ2: strand at 0 moves to 1 then to 2
        assert_eq!(b(3, &[1, 2]).permutation().images(), &[2, 0, 1]);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(b(2, &[1, 1, 1]).exponent_sum(), 3);
        assert_eq!(b(3, &[1, -2]).exponent_sum(), 0);
        let mut l: Vec<i32> = (0..4).flat_map(|_| 1..5).collect();
        l.extend([1, 1]);
        assert_eq!(b(5, &l).exponent_sum(), 18);
    }

    #[test]
    fn moves() {
        assert_eq!(
            b(2, &[1, -1])
                .apply_move(&Move::FreeCancel { pos: 0 })
                .unwrap(),
            b(2, &[])
        );
        assert_eq!(
            b(3, &[1, 2, 1])
                .apply_move(&Move::BraidRelationNear { pos: 0 })
                .unwrap(),
            b(3, &[2, 1, 2])
        );
        assert_eq!(
            b(2, &[1]).apply_move(&Move::Destabilize).unwrap(),
            b(1, &[])
        );
        assert!(b(3, &[2, 1, 2]).apply_move(&Move::Destabilize).is_err());
        assert!(b(3, &[1, 2])
            .apply_move(&Move::BraidRelationFar { pos: 0 })
            .is_err());
        assert!(b(3, &[1, 1])
            .apply_move(&Move::FreeCancel { pos: 0 })
            .is_err());
        assert_eq!(b(4, &[1, -3]).flip(), b(4, &[3, -1]));
        assert_eq!(
            b(3, &[1, 2])
                .apply_move(&Move::Stabilize { positive: false })
                .unwrap(),
            b(4, &[1, 2, -3])
        );
    }

    #[test]
    fn text_format() {
        assert_eq!("2: 1 1 1".parse::<BraidWord>().unwrap(), b(2, &[1, 1, 1]));
        assert_eq!("3:".parse::<BraidWord>().unwrap(), b(3, &[]));
        let e = "3: 5".parse::<BraidWord>().unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(e.message.contains("token 1"));
        let e = "3 1 2".parse::<BraidWord>().unwrap_err();
        assert_eq!(e.column, 1);
        let e = "3: 1\n  x".parse::<BraidWord>().unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(b(4, &[1, -3, 2]).to_string(), "4: 1 -3 2");
        assert_eq!(b(3, &[]).to_string(), "3:");
    }
}
