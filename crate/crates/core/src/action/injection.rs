use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, MonoidWord};

/// A partial injection of {1..n}, i.e. an element of the symmetric inverse
/// monoid I_n. `mapping[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    n: usize,
    mapping: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn new(n: usize, mapping: Vec<Option<usize>>) -> Result<Self> {
        if mapping.len() != n {
            return Err(Error::StrandMismatch {
                left: n,
                right: mapping.len(),
            });
        }
        let mut seen = vec![false; n];
        for &t in mapping.iter().flatten() {
            if !(1..=n).contains(&t) || std::mem::replace(&mut seen[t - 1], true) {
                return Err(Error::Domain(format!("not a partial injection: {mapping:?}")));
            }
        }
        Ok(PartialInjection { n, mapping })
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            n,
            mapping: (1..=n).map(Some).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mapping(&self) -> &[Option<usize>] {
        &self.mapping
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.mapping.get(i.wrapping_sub(1)).copied().flatten()
    }

    /// Sorted domain.
    pub fn domain(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.get(i).is_some()).collect()
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.mapping.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn rank(&self) -> usize {
        self.mapping.iter().flatten().count()
    }

    pub fn is_total(&self) -> bool {
        self.rank() == self.n
    }

    /// `self` followed by `other`: i ↦ other(self(i)).
    pub fn then(&self, other: &PartialInjection) -> Result<PartialInjection> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mapping = self
            .mapping
            .iter()
            .map(|t| t.and_then(|t| other.get(t)))
            .collect();
        Ok(PartialInjection { n: self.n, mapping })
    }

    pub fn inverse(&self) -> PartialInjection {
        let mut mapping = vec![None; self.n];
        for (i, t) in self.mapping.iter().enumerate() {
            if let Some(t) = t {
                mapping[t - 1] = Some(i + 1);
            }
        }
        PartialInjection { n: self.n, mapping }
    }

    /// Image of a single generator in I_n: crossings become transpositions.
    pub fn of_letter(letter: Letter, n: usize) -> Result<PartialInjection> {
        if !letter.is_valid_for(n) {
            return Err(Error::IndexOutOfRange {
                letter: letter.to_string(),
                n,
            });
        }
        let mut p = PartialInjection::identity(n);
        match letter {
            Letter::Epsilon(i) => p.mapping[i - 1] = None,
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Xi(i) => p.mapping.swap(i - 1, i),
        }
        Ok(p)
    }

    /// Evaluates a word directly in I_n, letter by letter.
    pub fn of_word(w: &MonoidWord) -> PartialInjection {
        let n = w.n();
        // Track which original point sits at each position.
        let mut at: Vec<Option<usize>> = (1..=n).map(Some).collect();
        for &letter in w.letters() {
            match letter {
                Letter::Epsilon(i) => at[i - 1] = None,
                Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Xi(i) => at.swap(i - 1, i),
            }
        }
        let mut mapping = vec![None; n];
        for (pos, origin) in at.iter().enumerate() {
            if let Some(o) = origin {
                mapping[o - 1] = Some(pos + 1);
            }
        }
        PartialInjection { n, mapping }
    }

    /// Every element of I_n, in lexicographic order of `mapping`.
    pub fn all(n: usize) -> Vec<PartialInjection> {
        fn extend(
            n: usize,
            prefix: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            out: &mut Vec<PartialInjection>,
        ) {
            if prefix.len() == n {
                out.push(PartialInjection {
                    n,
                    mapping: prefix.clone(),
                });
                return;
            }
            prefix.push(None);
            extend(n, prefix, used, out);
            prefix.pop();
            for t in 1..=n {
                if !used[t - 1] {
                    used[t - 1] = true;
                    prefix.push(Some(t));
                    extend(n, prefix, used, out);
                    prefix.pop();
                    used[t - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (i, t) in self.mapping.iter().enumerate() {
            if let Some(t) = t {
                if !first {
                    f.write_str(", ")?;
                }
                write!(f, "{}->{}", i + 1, t)?;
                first = false;
            }
        }
        f.write_str("}")
    }
}

/// Composite in word order: `p` then `q`.
pub fn compose_injection(p: &PartialInjection, q: &PartialInjection) -> Result<PartialInjection> {
    p.then(q)
}
