#![allow(dead_code)]

use invbraid::words::relations::{relation_suite, Presentation, RelationPair};
use invbraid::{Letter, MonoidWord};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    Positive,
    Braid,
    /// σ^{±1} and ε.
    Mixed,
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut impl Rng, n: usize, alphabet: Alphabet) -> Letter {
    let crossing = n >= 2;
    // ε letters are rarer than crossings so that strands survive long enough
    // for the braid parts to be interesting.
    let pick = match alphabet {
        Alphabet::Positive => 0,
        Alphabet::Braid => rng.gen_range(0..2),
        Alphabet::Mixed if !crossing => 2,
        Alphabet::Mixed => [0, 0, 0, 1, 1, 1, 2][rng.gen_range(0..7)],
    };
    match pick {
        0 => Letter::Sigma(rng.gen_range(1..n)),
        1 => Letter::SigmaInv(rng.gen_range(1..n)),
        _ => Letter::Epsilon(rng.gen_range(1..=n)),
    }
}

pub fn random_word(rng: &mut impl Rng, n: usize, len: usize, alphabet: Alphabet) -> MonoidWord {
    if n < 2 && alphabet != Alphabet::Mixed {
        return MonoidWord::identity(n);
    }
    let letters = (0..len).map(|_| random_letter(rng, n, alphabet)).collect();
    MonoidWord::new(n, letters).unwrap()
}

/// Product of random pure-braid generators A_ij^{±1}.
pub fn random_pure_braid(rng: &mut impl Rng, n: usize, factors: usize) -> MonoidWord {
    let mut letters = Vec::new();
    for _ in 0..factors {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let a = pure_generator(n, i, j);
        let a = if rng.gen_bool(0.5) {
            a
        } else {
            invbraid::words::mirror_inverse(&a)
        };
        letters.extend_from_slice(a.letters());
    }
    MonoidWord::new(n, letters).unwrap()
}

/// A_ij = σ_{j−1}…σ_{i+1} σ_i² σ_{i+1}⁻¹…σ_{j−1}⁻¹.
pub fn pure_generator(n: usize, i: usize, j: usize) -> MonoidWord {
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(Letter::Sigma).collect();
    letters.extend([Letter::Sigma(i), Letter::Sigma(i)]);
    letters.extend((i + 1..j).map(Letter::SigmaInv));
    MonoidWord::new(n, letters).unwrap()
}

fn find(haystack: &[Letter], needle: &[Letter], rng: &mut impl Rng) -> Option<usize> {
    if needle.is_empty() || needle.len() > haystack.len() {
        return None;
    }
    let hits: Vec<usize> = (0..=haystack.len() - needle.len())
        .filter(|&p| &haystack[p..p + needle.len()] == needle)
        .collect();
    hits.choose(rng).copied()
}

/// Applies `steps` random defining-relation rewrites (either direction),
/// plus insertions of cancelling pairs σσ⁻¹. The result is equal to `w` in
/// IB_n by construction.
pub fn rewrite(rng: &mut impl Rng, w: &MonoidWord, steps: usize, rules: &[RelationPair]) -> MonoidWord {
    let n = w.n();
    let mut letters = w.letters().to_vec();
    for _ in 0..steps {
        if n >= 2 && rng.gen_bool(0.25) {
            let i = rng.gen_range(1..n);
            let at = rng.gen_range(0..=letters.len());
            let pair = if rng.gen_bool(0.5) {
                [Letter::Sigma(i), Letter::SigmaInv(i)]
            } else {
                [Letter::SigmaInv(i), Letter::Sigma(i)]
            };
            letters.splice(at..at, pair);
            continue;
        }
        let Some(rule) = rules.choose(rng) else { continue };
        let (from, to) = if rng.gen_bool(0.5) {
            (&rule.left, &rule.right)
        } else {
            (&rule.right, &rule.left)
        };
        if let Some(p) = find(&letters, from.letters(), rng) {
            letters.splice(p..p + from.len(), to.letters().iter().copied());
        }
    }
    MonoidWord::new(n, letters).unwrap()
}

/// u · l · v against a rewritten u · r · v for a random defining relation.
pub fn equal_pair(rng: &mut impl Rng, n: usize, max_len: usize) -> (MonoidWord, MonoidWord) {
    let rules = rules_for(n);
    let rule = rules.choose(rng).unwrap();
    let budget = max_len.saturating_sub(rule.left.len().max(rule.right.len())) / 2;
    let (lu, lv) = (rng.gen_range(0..=budget), rng.gen_range(0..=budget));
    let u = random_word(rng, n, lu, Alphabet::Mixed);
    let v = random_word(rng, n, lv, Alphabet::Mixed);
    let lhs = MonoidWord::product(n, [&u, &rule.left, &v]).unwrap();
    let rhs = MonoidWord::product(n, [&u, &rule.right, &v]).unwrap();
    let rhs = rewrite(rng, &rhs, 3, &rules);
    (lhs, rhs)
}

pub fn rules_for(n: usize) -> Vec<RelationPair> {
    let mut rules = relation_suite(Presentation::IbnBalanced, n).unwrap();
    rules.extend(relation_suite(Presentation::IbnEps, n).unwrap());
    rules
}
