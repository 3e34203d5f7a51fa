//! Geometric skeleton of a partial braid.
//!
//! Every partial braid is determined by its set of starting points `I`, its
//! set of ending points `J`, and the ordinary braid the surviving strands
//! form once the deleted ones are erased. [`evaluate_skeleton`] computes
//! this triple by sweeping the word top to bottom.

use std::fmt;

use crate::action::PartialInjection;
use crate::error::{Error, Result};
use crate::garside::{canonical_form, left_greedy_nf, strand_permutation};
use crate::words::{Letter, MonoidWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Skeleton {
    pub n: usize,
    /// Sorted starting points of the surviving strands.
    pub domain: Vec<usize>,
    /// Sorted ending points of the surviving strands.
    pub codomain: Vec<usize>,
    /// Braid on `domain.len()` strands, strands numbered by rank.
    pub braid: MonoidWord,
}

impl Skeleton {
    pub fn rank(&self) -> usize {
        self.domain.len()
    }

    /// Partial injection induced on the strand endpoints.
    pub fn injection(&self) -> PartialInjection {
        let perm = strand_permutation(&self.braid);
        let mut mapping = vec![None; self.n];
        for (r, &start) in self.domain.iter().enumerate() {
            mapping[start - 1] = Some(self.codomain[perm.image(r)]);
        }
        PartialInjection::new(self.n, mapping).expect("skeleton endpoints are distinct")
    }
}

pub(crate) fn format_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={} J={} braid={}",
            format_set(&self.domain),
            format_set(&self.codomain),
            self.braid
        )
    }
}

/// Sweeps `w` through the n positions, recording crossings between live
/// strands and erasing strands as ε letters delete them.
pub fn evaluate_skeleton(w: &MonoidWord) -> Result<Skeleton> {
    if w.contains_xi() {
        return Err(Error::Unsupported(
            "permutation letters have no braid diagram; use the action engine".into(),
        ));
    }
    let n = w.n();
    // Strand (named by its starting point, 0-based) occupying each position.
    let mut at: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut alive = vec![true; n];
    let mut braid: Vec<Letter> = Vec::new();
    let mut k = n;
    for &letter in w.letters() {
        match letter {
            Letter::Sigma(i) | Letter::SigmaInv(i) => {
                let (p, q) = (i - 1, i);
                if at[p].is_some() && at[q].is_some() {
                    let rank = at[..p].iter().filter(|s| s.is_some()).count() + 1;
                    braid.push(letter.with_index(rank));
                }
                at.swap(p, q);
            }
            Letter::Epsilon(i) => {
                if let Some(strand) = at[i - 1].take() {
                    let start_rank = alive[..strand].iter().filter(|&&a| a).count() + 1;
                    let word = MonoidWord::from_valid(k, std::mem::take(&mut braid));
                    braid = delete_strand(&word, start_rank)?.into_letters();
                    alive[strand] = false;
                    k -= 1;
                }
            }
            Letter::Xi(_) => unreachable!("rejected above"),
        }
    }
    let domain = (1..=n).filter(|&s| alive[s - 1]).collect();
    let codomain = (1..=n).filter(|&p| at[p - 1].is_some()).collect();
    Ok(Skeleton {
        n,
        domain,
        codomain,
        braid: MonoidWord::from_valid(k, braid),
    })
}

/// Erases the strand starting at position `start_pos` from a braid on `m`
/// strands, giving a braid on `m - 1` strands.
pub fn delete_strand(b: &MonoidWord, start_pos: usize) -> Result<MonoidWord> {
    let m = b.n();
    if !b.is_braid_word() {
        return Err(Error::Domain("strand deletion expects a braid word".into()));
    }
    if !(1..=m).contains(&start_pos) {
        return Err(Error::Domain(format!(
            "strand {start_pos} does not exist on {m} strands"
        )));
    }
    let mut pos = start_pos;
    let mut out = Vec::with_capacity(b.len());
    for &letter in b.letters() {
        let j = letter.index();
        if j == pos {
            pos += 1;
        } else if j + 1 == pos {
            pos -= 1;
        } else if j > pos {
            out.push(letter.with_index(j - 1));
        } else {
            out.push(letter);
        }
    }
    Ok(MonoidWord::from_valid(m - 1, out))
}

/// ε_i · w = ε_i: deleting the strand starting at `i` leaves a trivial braid.
///
/// Defined for full braids and for the element ε_i itself.
pub fn is_i_makanin(w: &MonoidWord, i: usize) -> Result<bool> {
    let n = w.n();
    if !(1..=n).contains(&i) {
        return Err(Error::Domain(format!("no strand {i} on {n} strands")));
    }
    let eps = MonoidWord::from_valid(n, vec![Letter::Epsilon(i)]);
    let whole = evaluate_skeleton(w)?;
    if whole.rank() != n {
        if canonical_form(w)? == canonical_form(&eps)? {
            return Ok(true);
        }
        return Err(Error::Domain(
            "Makanin tests apply to full braids (plus the idempotent e_i itself)".into(),
        ));
    }
    let cut = evaluate_skeleton(&eps.concat(w)?)?;
    Ok(cut.domain == cut.codomain && left_greedy_nf(&cut.braid)?.is_identity())
}

/// Trivial after deleting any single strand.
pub fn is_makanin(w: &MonoidWord) -> Result<bool> {
    let n = w.n();
    if evaluate_skeleton(w)?.rank() != n {
        return Err(Error::Domain("Makanin braids are full braids".into()));
    }
    for i in 1..=n {
        if !is_i_makanin(w, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{equal_action, tau};
    use crate::words::{delta_word, epsilon_block};

    fn w(text: &str, n: usize) -> MonoidWord {
        MonoidWord::parse(text, n).unwrap()
    }

    #[test]
    fn skeleton_examples() {
        let s = evaluate_skeleton(&w("s1", 2)).unwrap();
        assert_eq!((s.domain.clone(), s.codomain.clone()), (vec![1, 2], vec![1, 2]));
        assert_eq!(s.braid, w("s1", 2));

        let s = evaluate_skeleton(&w("e1 s1", 2)).unwrap();
        assert_eq!((s.domain.clone(), s.codomain.clone()), (vec![2], vec![1]));
        assert!(s.braid.is_empty());
        assert_eq!(s.injection(), tau(&w("e1 s1", 2)).unwrap());
        assert_eq!(s.to_string(), "I={2} J={1} braid=");

        let s = evaluate_skeleton(&w("e1 e2", 2)).unwrap();
        assert!(s.domain.is_empty() && s.codomain.is_empty() && s.braid.is_empty());
        assert!(evaluate_skeleton(&w("t1", 2)).is_err());
    }

    #[test]
    fn crossing_past_an_empty_position_is_a_move() {
        // Strand 3 slides left over the hole left by strand 2, then crosses 1.
        let s = evaluate_skeleton(&w("e2 s2 s1", 3)).unwrap();
        assert_eq!(s.domain, vec![1, 3]);
        assert_eq!(s.codomain, vec![1, 2]);
        assert_eq!(s.braid, w("s1", 2));
    }

    #[test]
    fn deletion_examples() {
        assert!(delete_strand(&w("s1 s1", 2), 1).unwrap().is_empty());
        assert_eq!(delete_strand(&w("s1 s1", 2), 1).unwrap().n(), 1);
        assert_eq!(delete_strand(&w("s1 s2 s1", 3), 2).unwrap(), w("s1", 2));
        assert!(delete_strand(&MonoidWord::identity(4), 3).unwrap().is_empty());
        assert!(delete_strand(&w("s1", 2), 3).is_err());
        assert!(delete_strand(&w("e1", 2), 1).is_err());
    }

    #[test]
    fn deleting_from_delta_matches_action() {
        // ε₂·Δ₃ = (deletion result on strands 1,3 of the target) as partial braids.
        let lhs = w("e2", 3).concat(&delta_word(3)).unwrap();
        let sk = evaluate_skeleton(&lhs).unwrap();
        assert_eq!(sk.braid, delete_strand(&delta_word(3), 2).unwrap());
        assert!(equal_action(&lhs, &w("e2 s1 s2 s1", 3)).unwrap());
    }

    #[test]
    fn makanin_examples() {
        assert!(is_i_makanin(&w("s1 s1", 2), 1).unwrap());
        assert!(!is_i_makanin(&w("s1", 2), 1).unwrap());
        for i in 1..=3 {
            assert!(is_i_makanin(&MonoidWord::identity(3), i).unwrap());
        }
        assert!(is_makanin(&w("s1 s1", 2)).unwrap());
        assert!(!is_makanin(&w("s1 s2", 3)).unwrap());
        assert!(!is_makanin(&delta_word(3).pow(2)).unwrap());
        // ε_i itself is i-Makanin; other partial braids are out of domain.
        assert!(is_i_makanin(&w("e2 e2", 3), 2).unwrap());
        assert!(is_i_makanin(&w("e1", 3), 2).is_err());
        assert!(is_makanin(&epsilon_block(1, 3).unwrap()).is_err());
    }

    #[test]
    fn brunnian_commutator_is_makanin() {
        // [σ₁², σ₂²]: deleting strand 2 kills both factors, deleting 1 or 3
        // kills one and the rest cancels.
        let a12 = w("s1 s1", 3);
        let a23 = w("s2 s2", 3);
        let inv = |x: &MonoidWord| crate::words::mirror_inverse(x);
        let c = MonoidWord::product(3, [&a12, &a23, &inv(&a12), &inv(&a23)]).unwrap();
        assert!(!equal_action(&c, &MonoidWord::identity(3)).unwrap());
        assert!(is_i_makanin(&c, 2).unwrap());
        assert!(is_i_makanin(&c, 1).unwrap());
        assert!(is_i_makanin(&c, 3).unwrap());
        assert!(is_makanin(&c).unwrap());
    }
}
