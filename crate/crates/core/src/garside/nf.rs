use std::fmt;

use super::perm::{perm_to_word, Permutation};
use crate::error::{Error, Result};
use crate::words::{delta_word, mirror_inverse, Letter, MonoidWord};

/// Left-greedy normal form Δ^inf · A_1 ⋯ A_r of a braid on k strands.
///
/// Every A_j is a proper simple element (neither trivial nor Δ) and each
/// pair A_j A_{j+1} is left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    pub k: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNF {
    pub fn identity(k: usize) -> Self {
        GarsideNF {
            k,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn to_word(&self) -> MonoidWord {
        let k = self.k;
        let delta = delta_word(k);
        let mut out = if self.inf >= 0 {
            delta.pow(self.inf as usize)
        } else {
            mirror_inverse(&delta).pow(self.inf.unsigned_abs() as usize)
        };
        for factor in &self.factors {
            out = out.concat(&perm_to_word(factor)).expect("same strand count");
        }
        out
    }

    /// Checks the defining conditions of the normal form.
    pub fn is_normal(&self) -> bool {
        self.factors
            .iter()
            .all(|p| p.k() == self.k && !p.is_identity() && !p.is_delta())
            && self.factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.factors.iter().map(Permutation::to_string).collect();
        write!(f, "inf={} factors=[{}]", self.inf, factors.join(";"))
    }
}

/// A·B is left-weighted when nothing can slide from B into A: S(B) ⊆ F(A).
pub fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let inv_a = a.inverse();
    (0..a.k().saturating_sub(1))
        .all(|i| !b.starts_with(i) || inv_a.starts_with(i))
}

/// Moves crossings from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn slide(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let inv_a = a.inverse();
        let next = (0..a.k().saturating_sub(1)).find(|&i| b.starts_with(i) && !inv_a.starts_with(i));
        match next {
            Some(i) => {
                a.swap_values(i, i + 1);
                b.swap_positions(i, i + 1);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Restores left-weightedness after a factor is appended.
fn settle(factors: &mut Vec<Permutation>) {
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(j + 1);
            changed |= slide(&mut left[j], &mut right[0]);
        }
        factors.retain(|p| !p.is_identity());
        if !changed {
            return;
        }
    }
}

/// Normalizes Δ^inf · s_1 ⋯ s_m for arbitrary simple elements s_j.
pub fn normalize_simples(k: usize, inf: i64, simples: impl IntoIterator<Item = Permutation>) -> GarsideNF {
    let mut factors: Vec<Permutation> = Vec::new();
    for s in simples {
        debug_assert_eq!(s.k(), k);
        if s.is_identity() {
            continue;
        }
        factors.push(s);
        settle(&mut factors);
    }
    // Left-weighted sequences carry all their Δ factors at the front.
    let deltas = factors.iter().take_while(|p| p.is_delta()).count();
    factors.drain(..deltas);
    GarsideNF {
        k,
        inf: inf + deltas as i64,
        factors,
    }
}

/// Left-greedy normal form of a braid word.
///
/// Each σ_i⁻¹ is rewritten as Δ⁻¹ · (Δσ_i⁻¹); the Δ⁻¹ are collected at the
/// front by conjugating the simples passed over.
pub fn left_greedy_nf(b: &MonoidWord) -> Result<GarsideNF> {
    if !b.is_braid_word() {
        return Err(Error::Domain("Garside normal form expects a braid word".into()));
    }
    let k = b.n();
    let mut simples = Vec::with_capacity(b.len());
    let mut negatives = 0usize;
    for letter in b.letters() {
        match *letter {
            Letter::Sigma(i) => simples.push((Permutation::transposition(k, i - 1), negatives)),
            Letter::SigmaInv(i) => {
                negatives += 1;
                let s = Permutation::transposition(k, i - 1);
                simples.push((Permutation::delta(k).then(&s), negatives));
            }
            _ => unreachable!("braid word"),
        }
    }
    let simples = simples.into_iter().map(|(p, seen)| {
        if (negatives - seen) % 2 == 1 {
            p.flip()
        } else {
            p
        }
    });
    Ok(normalize_simples(k, -(negatives as i64), simples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::equal_action;

    fn w(text: &str, n: usize) -> MonoidWord {
        MonoidWord::parse(text, n).unwrap()
    }

    fn nf(text: &str, n: usize) -> GarsideNF {
        left_greedy_nf(&w(text, n)).unwrap()
    }

    #[test]
    fn examples() {
        assert!(nf("s1 s1^-1", 2).is_identity());
        assert_eq!(nf("s1 s2 s1", 3), nf("s2 s1 s2", 3));
        assert_eq!(nf("s1 s2 s1", 3).inf, 1);
        assert!(nf("s1 s2 s1", 3).factors.is_empty());
        let inv = nf("s1^-1", 3);
        assert_eq!(inv.inf, -1);
        assert_eq!(inv.factors, vec![super::super::word_to_perm(&w("s1 s2", 3)).unwrap()]);
        assert_eq!(inv.to_string(), "inf=-1 factors=[3,1,2]");
        assert!(left_greedy_nf(&w("e1", 2)).is_err());
    }

    #[test]
    fn positive_square_splits_into_two_factors() {
        let x = nf("s1 s1", 3);
        assert_eq!(x.inf, 0);
        assert_eq!(x.factors.len(), 2);
        assert!(x.is_normal());
        // σ₁σ₂σ₂σ₁ is left-weighted as (σ₁σ₂)(σ₂σ₁).
        let y = nf("s1 s2 s2 s1", 3);
        assert_eq!(y.factors.len(), 2);
    }

    #[test]
    fn to_word_represents_the_same_braid() {
        for (text, n) in [
            ("s1 s2^-1 s1 s3 s2^-1", 4),
            ("s2^-1 s1^-1 s2^-1", 3),
            ("s1 s2 s1 s2 s1 s2", 3),
            ("s3^-1 s1 s2 s1^-1 s3 s3", 4),
        ] {
            let word = w(text, n);
            let form = left_greedy_nf(&word).unwrap();
            assert!(form.is_normal());
            assert!(equal_action(&form.to_word(), &word).unwrap(), "{text}");
            assert_eq!(left_greedy_nf(&form.to_word()).unwrap(), form);
        }
    }

    #[test]
    fn full_twist_is_delta_squared() {
        let twist = w("s1 s2 s1 s2 s1 s2", 3);
        let form = left_greedy_nf(&twist).unwrap();
        assert_eq!((form.inf, form.factors.len()), (2, 0));
        assert_eq!(form.sup(), 2);
    }
}
