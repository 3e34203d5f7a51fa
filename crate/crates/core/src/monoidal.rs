//! Monoidal structure on the family IB_0, IB_1, …: side-by-side pairing,
//! the braiding, and the factorization of a partial braid as an idempotent
//! times a full braid.

use crate::action::{equal_action, equal_action_with_cap, PartialInjection};
use crate::diagram::evaluate_skeleton;
use crate::error::{Error, Result};
use crate::freegroup::DEFAULT_MAX_LETTERS;
use crate::garside::{perm_to_word, Permutation};
use crate::words::{braiding_word, mirror_inverse, shift_word, Letter, MonoidWord};

/// `left` and `right` placed side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedWord {
    pub left: MonoidWord,
    pub right: MonoidWord,
    pub combined: MonoidWord,
}

impl PairedWord {
    pub fn new(left: MonoidWord, right: MonoidWord) -> Self {
        let combined = mu(&left, &right);
        PairedWord {
            left,
            right,
            combined,
        }
    }
}

/// μ(a, b): `a` on the first k strands, `b` on the next l.
pub fn mu(a: &MonoidWord, b: &MonoidWord) -> MonoidWord {
    let (k, l) = (a.n(), b.n());
    let left = a.embed(k + l).expect("embedding into more strands");
    let right = shift_word(b, k, k + l).expect("shifted letters stay in range");
    left.concat(&right).expect("same strand count")
}

/// Naturality of the braiding c_{m,n}, which carries the right block
/// across the left one: μ(bm, bn) · c = c · μ(bn, bm) in diagram order.
pub fn check_naturality(bm: &MonoidWord, bn: &MonoidWord) -> Result<bool> {
    let (m, n) = (bm.n(), bn.n());
    let c = braiding_word(m, n);
    let lhs = mu(bm, bn).concat(&c)?;
    let rhs = c.concat(&mu(bn, bm))?;
    equal_action(&lhs, &rhs)
}

/// c · ε_i · c⁻¹ = ε_{i+m} for i ≤ n and ε_{i−n} for i > n, for all i.
pub fn epsilon_conjugation_holds(m: usize, n: usize) -> Result<bool> {
    let total = m + n;
    let c = braiding_word(m, n);
    let c_inv = mirror_inverse(&c);
    for i in 1..=total {
        let eps = MonoidWord::new(total, vec![Letter::Epsilon(i)])?;
        let target = if i <= n { i + m } else { i - n };
        let expected = MonoidWord::new(total, vec![Letter::Epsilon(target)])?;
        let conj = MonoidWord::product(total, [&c, &eps, &c_inv])?;
        if !equal_action(&conj, &expected)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation of n points extending the partial matching `pairs`
/// (1-based), sending unmatched points to unmatched targets in increasing
/// order.
fn extend_matching(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Permutation {
    let mut images = vec![0; n];
    let mut used = vec![false; n];
    for (from, to) in pairs {
        images[from - 1] = to;
        used[to - 1] = true;
    }
    let mut free = (1..=n).filter(|&t| !used[t - 1]);
    for image in images.iter_mut().filter(|t| **t == 0) {
        *image = free.next().expect("as many free targets as free points");
    }
    Permutation::from_images(&images).expect("a bijection")
}

fn idempotent(n: usize, domain: &[usize]) -> MonoidWord {
    let letters = (1..=n)
        .filter(|i| domain.binary_search(i).is_err())
        .map(Letter::Epsilon)
        .collect();
    MonoidWord::new(n, letters).expect("indices in range")
}

/// A positive word whose partial permutation is `s`: the strands outside
/// the domain are deleted, then the minimal extension of `s` is realized
/// by a permutation braid.
pub fn partial_permutation_braid(s: &PartialInjection) -> MonoidWord {
    let n = s.n();
    let e = idempotent(n, &s.domain());
    let pi = extend_matching(n, (1..=n).filter_map(|i| s.get(i).map(|t| (i, t))));
    e.concat(&perm_to_word(&pi)).expect("same strand count")
}

/// Writes `w = e · g` with `e` a product of distinct ε_i and `g` a full braid.
pub fn factorize(w: &MonoidWord) -> Result<(MonoidWord, MonoidWord)> {
    if w.contains_xi() {
        return Err(Error::Unsupported("factorization is defined for IB_n words".into()));
    }
    let n = w.n();
    let sk = evaluate_skeleton(w)?;
    let e = idempotent(n, &sk.domain);

    // The surviving braid, run along the positions in I. Crossings of
    // non-adjacent live strands are conjugated past the dead positions
    // between them, which the idempotent makes irrelevant.
    let mut g = Vec::new();
    for &letter in sk.braid.letters() {
        let r = letter.index();
        let (lo, hi) = (sk.domain[r - 1], sk.domain[r]);
        g.extend((lo + 1..hi).rev().map(Letter::Sigma));
        g.push(letter.with_index(lo));
        g.extend((lo + 1..hi).map(Letter::Sigma));
    }
    let pairs = sk.domain.iter().zip(&sk.codomain).map(|(&i, &j)| (i, j));
    g.extend(perm_to_word(&extend_matching(n, pairs)).into_letters());
    Ok((e, MonoidWord::new(n, g)?))
}

/// Commutes with every generator σ_i and ε_i.
pub fn is_central(w: &MonoidWord) -> Result<bool> {
    is_central_with_cap(w, DEFAULT_MAX_LETTERS)
}

pub fn is_central_with_cap(w: &MonoidWord, cap: usize) -> Result<bool> {
    let n = w.n();
    let generators = (1..n).map(Letter::Sigma).chain((1..=n).map(Letter::Epsilon));
    for g in generators {
        let g = MonoidWord::new(n, vec![g])?;
        if !equal_action_with_cap(&w.concat(&g)?, &g.concat(w)?, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}
