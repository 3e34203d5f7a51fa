//! Generator alphabet and formal word constructions.
//!
//! A [`MonoidWord`] is a finite sequence of generator letters together with
//! its ambient strand count `n`. Letters are read left to right and stacked
//! top to bottom as diagrams: in `e1 s1` the first strand is deleted, then
//! the surviving strand at position 2 crosses over to position 1.
//!
//! Textual syntax (whitespace separated):
//!
//! | token      | letter              |
//! |------------|---------------------|
//! | `s3`       | σ₃                  |
//! | `s3^-1`    | σ₃⁻¹                |
//! | `s3'`      | σ₃⁻¹                |
//! | `e2`       | ε₂                  |
//! | `e`, `E`   | ε₁                  |
//! | `t1`       | ξ₁ (permutation)    |
//!
//! The empty string is the identity.

pub mod relations;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One generator of the inverse braid monoid (or of the braid-permutation
/// monoid, for [`Letter::Xi`]). Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Positive crossing of positions `i` and `i + 1`.
    Sigma(usize),
    /// Negative crossing of positions `i` and `i + 1`.
    SigmaInv(usize),
    /// Trivial braid with the strand at position `i` deleted.
    Epsilon(usize),
    /// Permutation (welded) crossing of positions `i` and `i + 1`.
    Xi(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Epsilon(i) | Letter::Xi(i) => i,
        }
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        match self {
            Letter::Epsilon(i) => (1..=n).contains(&i),
            other => other.index() >= 1 && other.index() < n,
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Letter::Sigma(_) | Letter::SigmaInv(_))
    }

    /// Letter of the mirror-inverse word: σ and σ⁻¹ swap, ε and ξ are fixed.
    pub fn mirror(self) -> Letter {
        match self {
            Letter::Sigma(i) => Letter::SigmaInv(i),
            Letter::SigmaInv(i) => Letter::Sigma(i),
            other => other,
        }
    }

    pub fn with_index(self, index: usize) -> Letter {
        match self {
            Letter::Sigma(_) => Letter::Sigma(index),
            Letter::SigmaInv(_) => Letter::SigmaInv(index),
            Letter::Epsilon(_) => Letter::Epsilon(index),
            Letter::Xi(_) => Letter::Xi(index),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "s{i}^-1"),
            Letter::Epsilon(i) => write!(f, "e{i}"),
            Letter::Xi(i) => write!(f, "t{i}"),
        }
    }
}

/// A word over the generator alphabet with a fixed ambient strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl MonoidWord {
    /// Builds a word, checking every letter against `n`.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !l.is_valid_for(n)) {
            return Err(Error::IndexOutOfRange {
                letter: bad.to_string(),
                n,
            });
        }
        Ok(MonoidWord { n, letters })
    }

    /// Crate-internal constructor for letter sequences already known to be in range.
    pub(crate) fn from_valid(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.is_valid_for(n)));
        MonoidWord { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        MonoidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        parse_word(text, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Word `self · other`.
    pub fn concat(&self, other: &MonoidWord) -> Result<MonoidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(MonoidWord { n: self.n, letters })
    }

    /// Concatenates a sequence of words sharing the same strand count.
    pub fn product<'a, I>(n: usize, parts: I) -> Result<MonoidWord>
    where
        I: IntoIterator<Item = &'a MonoidWord>,
    {
        let mut out = MonoidWord::identity(n);
        for part in parts {
            if part.n != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: part.n,
                });
            }
            out.letters.extend_from_slice(&part.letters);
        }
        Ok(out)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if !letter.is_valid_for(self.n) {
            return Err(Error::IndexOutOfRange {
                letter: letter.to_string(),
                n: self.n,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Same letters viewed in a larger (or equal) ambient strand count.
    pub fn embed(&self, new_n: usize) -> Result<MonoidWord> {
        MonoidWord::new(new_n, self.letters.clone())
    }

    /// `self` raised to a non-negative power.
    pub fn pow(&self, exp: usize) -> MonoidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * exp);
        for _ in 0..exp {
            letters.extend_from_slice(&self.letters);
        }
        MonoidWord { n: self.n, letters }
    }

    pub fn contains_xi(&self) -> bool {
        self.letters.iter().any(|l| matches!(l, Letter::Xi(_)))
    }

    pub fn contains_epsilon(&self) -> bool {
        self.letters.iter().any(|l| matches!(l, Letter::Epsilon(_)))
    }

    /// True when the word uses only σ and σ⁻¹.
    pub fn is_braid_word(&self) -> bool {
        self.letters.iter().all(|l| l.is_crossing())
    }

    pub fn is_positive_braid_word(&self) -> bool {
        self.letters.iter().all(|l| matches!(l, Letter::Sigma(_)))
    }

    /// Sum of σ exponents (ε and ξ contribute nothing).
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Sigma(_) => 1,
                Letter::SigmaInv(_) => -1,
                _ => 0,
            })
            .sum()
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses a single token; `offset`/`token` locate it for error reporting.
fn parse_token(tok: &str, offset: usize, token: usize) -> Result<Letter> {
    let syntax = |message: String| Error::Syntax {
        offset,
        token,
        message,
    };
    if tok == "E" || tok == "e" {
        return Ok(Letter::Epsilon(1));
    }
    let mut chars = tok.chars();
    let head = chars.next().ok_or_else(|| syntax("empty token".into()))?;
    let rest = chars.as_str();
    let digits_end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let (digits, suffix) = rest.split_at(digits_end);
    if digits.is_empty() {
        return Err(syntax(format!("expected an index after `{head}` in `{tok}`")));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| syntax(format!("index too large in `{tok}`")))?;
    if index == 0 {
        return Err(syntax(format!("indices start at 1 (`{tok}`)")));
    }
    match (head, suffix) {
        ('s', "") => Ok(Letter::Sigma(index)),
        ('s', "^-1") | ('s', "'") => Ok(Letter::SigmaInv(index)),
        ('e', "") => Ok(Letter::Epsilon(index)),
        ('t', "") => Ok(Letter::Xi(index)),
        ('s' | 'e' | 't', _) => Err(syntax(format!("unexpected suffix `{suffix}` in `{tok}`"))),
        _ => Err(syntax(format!("unknown generator `{head}` in `{tok}`"))),
    }
}

/// Parses a whitespace-separated token string into a word on `n` strands.
pub fn parse_word(text: &str, n: usize) -> Result<MonoidWord> {
    let mut letters = Vec::new();
    let mut start = None;
    let mut token = 0;
    // Trailing sentinel space flushes the last token.
    for (offset, ch) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(offset),
            (true, Some(s)) => {
                let letter = parse_token(&text[s..offset], s, token)?;
                if !letter.is_valid_for(n) {
                    return Err(Error::IndexOutOfRange {
                        letter: letter.to_string(),
                        n,
                    });
                }
                letters.push(letter);
                token += 1;
                start = None;
            }
            _ => {}
        }
    }
    Ok(MonoidWord { n, letters })
}

/// Formats a word in the token syntax accepted by [`parse_word`].
pub fn format_word(w: &MonoidWord) -> String {
    w.to_string()
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_token(s.trim(), 0, 0)
    }
}

/// Reverses the word and inverts each σ; ε and ξ letters are fixed.
///
/// On ξ-free words this is the inverse-monoid inverse `w*`, i.e.
/// `w·w*·w = w` and `w*·w·w* = w*`.
pub fn mirror_inverse(w: &MonoidWord) -> MonoidWord {
    MonoidWord {
        n: w.n,
        letters: w.letters.iter().rev().map(|l| l.mirror()).collect(),
    }
}

/// ε_{k+1} ε_{k+2} … ε_n: keeps the first `k` strands and deletes the rest.
pub fn epsilon_block(k: usize, n: usize) -> Result<MonoidWord> {
    if k > n {
        return Err(Error::Domain(format!("epsilon block needs k <= n, got k={k}, n={n}")));
    }
    Ok(MonoidWord {
        n,
        letters: (k + 1..=n).map(Letter::Epsilon).collect(),
    })
}

/// The fundamental braid Δ_k = (σ₁…σ_{k−1})(σ₁…σ_{k−2})…(σ₁) on `k` strands.
pub fn delta_word(k: usize) -> MonoidWord {
    let mut letters = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for top in (1..k).rev() {
        letters.extend((1..=top).map(Letter::Sigma));
    }
    MonoidWord { n: k, letters }
}

/// The braiding c_{m,n2} on `m + n2` strands: `n2` descending runs, run `j`
/// being σ_{m+j−1} … σ_j. It carries the right block of `n2` strands across
/// the left block of `m`.
pub fn braiding_word(m: usize, n2: usize) -> MonoidWord {
    let mut letters = Vec::with_capacity(m * n2);
    for j in 1..=n2 {
        letters.extend((j..m + j).rev().map(Letter::Sigma));
    }
    MonoidWord { n: m + n2, letters }
}

/// Adds `offset` to every letter index and re-homes the word on `new_n` strands.
pub fn shift_word(w: &MonoidWord, offset: usize, new_n: usize) -> Result<MonoidWord> {
    let letters = w
        .letters
        .iter()
        .map(|l| l.with_index(l.index() + offset))
        .collect();
    MonoidWord::new(new_n, letters)
}
