use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, MonoidWord};

/// A permutation of k strands, stored 0-based as top position ↦ bottom
/// position. Positive permutation braids (simple elements) correspond
/// one-to-one with these.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The permutation of Δ_k: p ↦ k-1-p.
    pub fn delta(k: usize) -> Self {
        Permutation {
            images: (0..k).rev().collect(),
        }
    }

    /// Adjacent transposition of positions `i` and `i + 1` (0-based).
    pub fn transposition(k: usize, i: usize) -> Self {
        let mut p = Self::identity(k);
        p.images.swap(i, i + 1);
        p
    }

    /// From 1-based images, e.g. `[2, 1]` for σ₁.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &t in images {
            if !(1..=k).contains(&t) || std::mem::replace(&mut seen[t - 1], true) {
                return Err(Error::Domain(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|t| t - 1).collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based position `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    /// 1-based images.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|t| t + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.k()];
        for (p, &t) in self.images.iter().enumerate() {
            images[t] = p;
        }
        Permutation { images }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation {
            images: self.images.iter().map(|&t| other.images[t]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &t)| p == t)
    }

    pub fn is_delta(&self) -> bool {
        let k = self.k();
        self.images.iter().enumerate().all(|(p, &t)| t == k - 1 - p)
    }

    /// Number of crossings, i.e. the length of the permutation braid.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for a in 0..self.k() {
            for b in a + 1..self.k() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Conjugation by Δ: the same braid turned upside down and mirrored left to right.
    pub fn flip(&self) -> Self {
        let k = self.k();
        Permutation {
            images: (0..k).map(|p| k - 1 - self.images[k - 1 - p]).collect(),
        }
    }

    /// Complement `Δ`-quotient: the simple `x` with `self · x = Δ`.
    pub fn right_complement(&self) -> Self {
        self.inverse().then(&Permutation::delta(self.k()))
    }

    /// Generators σ_{i+1} that can start a positive word for this simple.
    pub fn starts_with(&self, i: usize) -> bool {
        self.images[i] > self.images[i + 1]
    }

    /// Generators σ_{i+1} that can end a positive word for this simple.
    pub fn finishes_with(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i] > inv.images[i + 1]
    }

    /// Start set S(p) as 0-based generator indices.
    pub fn start_set(&self) -> Vec<usize> {
        (0..self.k().saturating_sub(1)).filter(|&i| self.starts_with(i)).collect()
    }

    /// Finish set F(p) as 0-based generator indices.
    pub fn finish_set(&self) -> Vec<usize> {
        self.inverse().start_set()
    }

    pub(crate) fn swap_values(&mut self, a: usize, b: usize) {
        for t in &mut self.images {
            if *t == a {
                *t = b;
            } else if *t == b {
                *t = a;
            }
        }
    }

    pub(crate) fn swap_positions(&mut self, a: usize, b: usize) {
        self.images.swap(a, b);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|t| (t + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Strand permutation of any braid word, ignoring crossing signs.
pub fn strand_permutation(w: &MonoidWord) -> Permutation {
    let k = w.n();
    // Strand (by top position) sitting at each position.
    let mut at: Vec<usize> = (0..k).collect();
    for letter in w.letters() {
        if let Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Xi(i) = *letter {
            at.swap(i - 1, i);
        }
    }
    Permutation { images: at }.inverse()
}

/// A positive word for the permutation braid of `p`, on `p.k()` strands.
pub fn perm_to_word(p: &Permutation) -> MonoidWord {
    let mut rest = p.clone();
    let mut letters = Vec::with_capacity(p.length());
    while let Some(i) = (0..rest.k().saturating_sub(1)).find(|&i| rest.starts_with(i)) {
        letters.push(Letter::Sigma(i + 1));
        rest.swap_positions(i, i + 1);
    }
    MonoidWord::from_valid(p.k(), letters)
}

/// Permutation of a positive braid word.
pub fn word_to_perm(w: &MonoidWord) -> Result<Permutation> {
    if !w.is_positive_braid_word() {
        return Err(Error::Domain("expected a positive braid word".into()));
    }
    Ok(strand_permutation(w))
}

/// A positive word is a permutation braid iff no two strands cross twice,
/// i.e. its length equals the length of its permutation.
pub fn is_permutation_braid(w: &MonoidWord) -> Result<bool> {
    Ok(word_to_perm(w)?.length() == w.len())
}
