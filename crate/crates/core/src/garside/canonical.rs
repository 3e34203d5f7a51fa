use std::fmt;

use super::nf::{left_greedy_nf, GarsideNF};
use crate::diagram::{evaluate_skeleton, format_set};
use crate::error::{Error, Result};
use crate::words::{epsilon_block, Letter, MonoidWord};

/// Unique representative of a partial braid: endpoint sets plus the
/// normal form of the braid formed by the surviving strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub domain: Vec<usize>,
    pub codomain: Vec<usize>,
    pub nf: GarsideNF,
}

impl CanonicalForm {
    pub fn rank(&self) -> usize {
        self.domain.len()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={} J={} {}",
            format_set(&self.domain),
            format_set(&self.codomain),
            self.nf
        )
    }
}

pub fn canonical_form(w: &MonoidWord) -> Result<CanonicalForm> {
    let skeleton = evaluate_skeleton(w)?;
    let nf = left_greedy_nf(&skeleton.braid)?;
    Ok(CanonicalForm {
        n: skeleton.n,
        domain: skeleton.domain,
        codomain: skeleton.codomain,
        nf,
    })
}

/// Spells out the form as
/// `(σ_{i_1}…σ_1)…(σ_{i_k}…σ_k) ε_{k+1,n} x ε_{k+1,n} (σ_k…σ_{j_k})…(σ_1…σ_{j_1})`
/// where `i_t = I_t − 1`, `j_t = J_t − 1` and `x` is the normal-form word on
/// the first k strands. The prefix gathers the strands starting at `I` onto
/// positions 1..k; the suffix spreads them out to `J`.
pub fn reconstruct_word(c: &CanonicalForm) -> Result<MonoidWord> {
    let (n, k) = (c.n, c.rank());
    if c.codomain.len() != k || c.nf.k != k {
        return Err(Error::Domain(format!("inconsistent canonical form {c}")));
    }
    let mut letters = Vec::new();
    for (t, &start) in (1..).zip(&c.domain) {
        letters.extend((t..start).rev().map(Letter::Sigma));
    }
    let marker = epsilon_block(k, n)?.into_letters();
    letters.extend_from_slice(&marker);
    letters.extend_from_slice(c.nf.to_word().letters());
    letters.extend_from_slice(&marker);
    for (t, &end) in c.codomain.iter().enumerate().rev().map(|(t, e)| (t + 1, e)) {
        letters.extend((t..end).map(Letter::Sigma));
    }
    MonoidWord::new(n, letters)
}

/// Word problem via normal forms.
pub fn equal_nf(w1: &MonoidWord, w2: &MonoidWord) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::StrandMismatch {
            left: w1.n(),
            right: w2.n(),
        });
    }
    Ok(canonical_form(w1)? == canonical_form(w2)?)
}
