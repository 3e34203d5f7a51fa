//! Reduced words in the free group F_n and substitution endomorphisms.
//!
//! Letters are stored as signed integers: `+i` is x_i and `-i` is x_i⁻¹
//! (i ≥ 1). Every value handed out by this module is freely reduced, so
//! equality of elements is sequence equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on the length of any free word produced by substitution.
pub const DEFAULT_MAX_LETTERS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

/// `w⁻¹ x_core w`, with `w` the shortest possible conjugator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateDecomposition {
    pub core: usize,
    pub conjugator: FreeWord,
}

impl ConjugateDecomposition {
    pub fn recompose(&self) -> FreeWord {
        let inv = invert(&self.conjugator);
        multiply(&multiply(&inv, &FreeWord::generator(self.core)), &self.conjugator)
    }
}

fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "free generators are 1-based");
        FreeWord(vec![i as i32])
    }

    /// Freely reduces an arbitrary sequence of (index, ±1) letters.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = (usize, i8)>,
    {
        let mut out = Vec::new();
        for (index, exp) in letters {
            assert!(index >= 1 && (exp == 1 || exp == -1), "invalid free letter");
            push_reduced(&mut out, index as i32 * exp as i32);
        }
        FreeWord(out)
    }

    /// Signed letters: `+i` for x_i, `-i` for x_i⁻¹.
    pub fn as_signed(&self) -> &[i32] {
        &self.0
    }

    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.0
            .iter()
            .map(|&l| (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 }))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index occurring in the word (0 when empty).
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Sends every x_j with `!keep(j)` to the identity.
    pub fn kill<F: Fn(usize) -> bool>(&self, keep: F) -> FreeWord {
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if keep(l.unsigned_abs() as usize) {
                push_reduced(&mut out, l);
            }
        }
        FreeWord(out)
    }
}

pub fn multiply(a: &FreeWord, b: &FreeWord) -> FreeWord {
    let mut out = a.0.clone();
    for &l in &b.0 {
        push_reduced(&mut out, l);
    }
    FreeWord(out)
}

pub fn invert(a: &FreeWord) -> FreeWord {
    FreeWord(a.0.iter().rev().map(|&l| -l).collect())
}

/// Appends `image^{sign}` to `out`, reducing at the seam.
fn append_image(out: &mut Vec<i32>, image: &[i32], positive: bool) {
    if positive {
        for &l in image {
            push_reduced(out, l);
        }
    } else {
        for &l in image.iter().rev() {
            push_reduced(out, -l);
        }
    }
}

/// Replaces each x_i by `images[i-1]`. Undefined if any occurring generator
/// has no image (or lies beyond `images`).
pub fn substitute(a: &FreeWord, images: &[Option<FreeWord>]) -> Option<FreeWord> {
    substitute_with_cap(a, images, usize::MAX).expect("uncapped substitution")
}

/// [`substitute`] with a bound on the intermediate and final word length.
pub fn substitute_with_cap(
    a: &FreeWord,
    images: &[Option<FreeWord>],
    cap: usize,
) -> Result<Option<FreeWord>> {
    let mut out = Vec::new();
    for &l in &a.0 {
        let idx = l.unsigned_abs() as usize;
        let Some(Some(image)) = images.get(idx - 1) else {
            return Ok(None);
        };
        append_image(&mut out, &image.0, l > 0);
        if out.len() > cap {
            return Err(Error::ResourceLimit { cap });
        }
    }
    Ok(Some(FreeWord(out)))
}

/// Substitution in which generators without an image are sent to the
/// identity, as when punctures are filled in. `keep` then discards any
/// remaining generator outside the target subgroup.
pub(crate) fn substitute_filling<F: Fn(usize) -> bool>(
    a: &FreeWord,
    images: &[Option<FreeWord>],
    keep: F,
    cap: usize,
) -> Result<FreeWord> {
    let mut out = Vec::new();
    for &l in &a.0 {
        let idx = l.unsigned_abs() as usize;
        if let Some(Some(image)) = images.get(idx - 1) {
            if l > 0 {
                for &m in &image.0 {
                    if keep(m.unsigned_abs() as usize) {
                        push_reduced(&mut out, m);
                    }
                }
            } else {
                for &m in image.0.iter().rev() {
                    if keep(m.unsigned_abs() as usize) {
                        push_reduced(&mut out, -m);
                    }
                }
            }
            if out.len() > cap {
                return Err(Error::ResourceLimit { cap });
            }
        }
    }
    Ok(FreeWord(out))
}

/// Writes `a` as `w⁻¹ x_j w` with the shortest conjugator, if possible.
///
/// A reduced conjugate of a positive generator has odd length, a positive
/// middle letter, and mirrored inverse letters around it.
pub fn conjugate_decompose(a: &FreeWord) -> Option<ConjugateDecomposition> {
    let len = a.0.len();
    if len.is_multiple_of(2) {
        return None;
    }
    let mid = len / 2;
    let core = a.0[mid];
    if core <= 0 {
        return None;
    }
    let symmetric = (1..=mid).all(|t| a.0[mid - t] == -a.0[mid + t]);
    symmetric.then(|| ConjugateDecomposition {
        core: core as usize,
        conjugator: FreeWord(a.0[mid + 1..].to_vec()),
    })
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `x1 x2^-1 x1`; `1` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (token, tok) in s.split_whitespace().enumerate() {
            if tok == "1" {
                continue;
            }
            let syntax = || Error::Syntax {
                offset: 0,
                token,
                message: format!("bad free-group token `{tok}`"),
            };
            let body = tok.strip_prefix('x').ok_or_else(syntax)?;
            let (digits, exp) = match body.strip_suffix("^-1") {
                Some(d) => (d, -1),
                None => (body, 1),
            };
            let index: usize = digits.parse().map_err(|_| syntax())?;
            if index == 0 {
                return Err(syntax());
            }
            letters.push((index, exp));
        }
        Ok(FreeWord::from_letters(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert!(multiply(&fw("x1"), &fw("x1^-1")).is_empty());
        assert_eq!(multiply(&fw("x1 x2"), &fw("x2^-1 x3")), fw("x1 x3"));
        assert_eq!(multiply(&FreeWord::empty(), &fw("x2 x1")), fw("x2 x1"));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&fw("x1 x2")), fw("x2^-1 x1^-1"));
        assert!(invert(&FreeWord::empty()).is_empty());
        assert_eq!(invert(&fw("x1^-1")), fw("x1"));
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(fw("x1 x2 x2^-1 x3"), fw("x1 x3"));
        assert_eq!(fw("1"), FreeWord::empty());
        assert_eq!(fw("x2^-1 x1 x2").to_string(), "x2^-1 x1 x2");
        assert!("y1".parse::<FreeWord>().is_err());
        assert!("x0".parse::<FreeWord>().is_err());
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(substitute(&fw("x1"), &[Some(fw("x2"))]), Some(fw("x2")));
        assert_eq!(substitute(&fw("x1 x2"), &[Some(fw("x2")), None]), None);
        let sigma = [Some(fw("x2")), Some(fw("x2^-1 x1 x2"))];
        assert_eq!(substitute(&fw("x2"), &sigma), Some(fw("x2^-1 x1 x2")));
        // Generators past the end of the table are undefined.
        assert_eq!(substitute(&fw("x3"), &sigma), None);
    }

    #[test]
    fn substitution_cap() {
        let doubling = [Some(fw("x1 x2")), Some(fw("x2 x1"))];
        let mut w = fw("x1");
        let mut hit = false;
        for _ in 0..20 {
            match substitute_with_cap(&w, &doubling, 1000) {
                Ok(Some(next)) => w = next,
                Err(Error::ResourceLimit { cap }) => {
                    assert_eq!(cap, 1000);
                    hit = true;
                    break;
                }
                other => panic!("unexpected {other:?}"),
            }
        }
        assert!(hit);
    }

    #[test]
    fn filling_substitution_kills_missing_generators() {
        let images = [None, Some(fw("x2^-1 x1 x2")), Some(fw("x3"))];
        let out = substitute_filling(&fw("x1 x2 x1^-1 x3"), &images, |_| true, 100).unwrap();
        assert_eq!(out, fw("x2^-1 x1 x2 x3"));
        let out = substitute_filling(&fw("x2 x3"), &images, |j| j != 2, 100).unwrap();
        assert_eq!(out, fw("x1 x3"));
    }

    #[test]
    fn decompose_examples() {
        let d = conjugate_decompose(&fw("x2^-1 x1 x2")).unwrap();
        assert_eq!((d.core, d.conjugator.clone()), (1, fw("x2")));
        let d = conjugate_decompose(&fw("x3")).unwrap();
        assert_eq!((d.core, d.conjugator), (3, FreeWord::empty()));
        assert!(conjugate_decompose(&fw("x1 x2")).is_none());
        assert!(conjugate_decompose(&fw("x1^-1")).is_none());
        assert!(conjugate_decompose(&fw("x2 x1 x2")).is_none());
        assert!(conjugate_decompose(&FreeWord::empty()).is_none());
    }

    fn free_word(max_gen: i32, max_len: usize) -> impl Strategy<Value = FreeWord> {
        proptest::collection::vec((1..=max_gen, proptest::bool::ANY), 0..max_len).prop_map(|v| {
            FreeWord::from_letters(v.into_iter().map(|(i, neg)| (i as usize, if neg { -1 } else { 1 })))
        })
    }

    proptest! {
        #[test]
        fn group_laws(a in free_word(4, 12), b in free_word(4, 12), c in free_word(4, 12)) {
            prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
            prop_assert_eq!(invert(&invert(&a)), a.clone());
            prop_assert!(multiply(&a, &invert(&a)).is_empty());
        }

        #[test]
        fn substitution_is_a_homomorphism(
            a in free_word(3, 10),
            b in free_word(3, 10),
            imgs in proptest::collection::vec(proptest::option::of(free_word(3, 5)), 3),
        ) {
            let lhs = substitute(&multiply(&a, &b), &imgs);
            let (sa, sb) = (substitute(&a, &imgs), substitute(&b, &imgs));
            if let (Some(l), Some(x), Some(y)) = (lhs, sa, sb) {
                prop_assert_eq!(l, multiply(&x, &y));
            }
        }

        #[test]
        fn decomposition_recomposes(w in free_word(5, 10), j in 1usize..=5) {
            let a = multiply(&multiply(&invert(&w), &FreeWord::generator(j)), &w);
            let d = conjugate_decompose(&a).expect("conjugate of a generator");
            prop_assert_eq!(d.core, j);
            prop_assert!(d.conjugator.len() <= w.len());
            prop_assert_eq!(d.recompose(), a);
        }
    }
}
