//! Faithful action of partial braids on the free group F_n.
//!
//! Each word is sent to a [`PartialEndo`]: for every generator x_i whose
//! strand survives, an image `w⁻¹ x_a(i) w` where `a` is the underlying
//! partial injection and `w` is written in the surviving target
//! generators only. Two words are equal in IB_n exactly when their images
//! agree, which gives the first of the two word-problem solvers.
//!
//! Composition follows the word (diagram) order: in `f · g` the
//! substitution of `g` is applied to the images of `f`, so the underlying
//! partial injection of `e1 s1` is `{2 -> 1}`. Generators whose strands are
//! deleted are filled in, i.e. sent to the identity inside images, and an
//! image is undefined exactly when its own strand dies.

mod injection;

use std::fmt;

pub use injection::{compose_injection, PartialInjection};

use crate::error::{Error, Result};
use crate::freegroup::{conjugate_decompose, substitute_filling, FreeWord, DEFAULT_MAX_LETTERS};
use crate::words::{Letter, MonoidWord};

/// An element of the partial-endomorphism monoid EF_n (or, with ξ letters,
/// of the braid-permutation monoid inside End F_n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialEndo {
    n: usize,
    images: Vec<Option<FreeWord>>,
}

/// Index of the conjugated generator; images are always odd-length conjugates.
fn core_of(image: &FreeWord) -> usize {
    let s = image.as_signed();
    s[s.len() / 2].unsigned_abs() as usize
}

impl PartialEndo {
    pub fn identity(n: usize) -> Self {
        PartialEndo {
            n,
            images: (1..=n).map(|i| Some(FreeWord::generator(i))).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[Option<FreeWord>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> Option<&FreeWord> {
        self.images.get(i.wrapping_sub(1)).and_then(|x| x.as_ref())
    }

    /// Total number of free letters across all images.
    pub fn weight(&self) -> usize {
        self.images.iter().flatten().map(FreeWord::len).sum()
    }

    /// The action of a single generator.
    pub fn of_letter(letter: Letter, n: usize) -> Result<Self> {
        if !letter.is_valid_for(n) {
            return Err(Error::IndexOutOfRange {
                letter: letter.to_string(),
                n,
            });
        }
        let mut e = PartialEndo::identity(n);
        let x = |j: usize| FreeWord::generator(j);
        let conj = |by: usize, j: usize| {
            FreeWord::from_letters([(by, -1), (j, 1), (by, 1)])
        };
        match letter {
            Letter::Sigma(i) => {
                e.images[i - 1] = Some(x(i + 1));
                e.images[i] = Some(conj(i + 1, i));
            }
            Letter::SigmaInv(i) => {
                e.images[i - 1] = Some(FreeWord::from_letters([(i, 1), (i + 1, 1), (i, -1)]));
                e.images[i] = Some(x(i));
            }
            Letter::Epsilon(i) => e.images[i - 1] = None,
            Letter::Xi(i) => {
                e.images[i - 1] = Some(x(i + 1));
                e.images[i] = Some(x(i));
            }
        }
        Ok(e)
    }

    /// `self` followed by `next` in word order.
    pub fn compose(&self, next: &PartialEndo) -> Result<PartialEndo> {
        self.compose_with_cap(next, DEFAULT_MAX_LETTERS)
    }

    pub fn compose_with_cap(&self, next: &PartialEndo, cap: usize) -> Result<PartialEndo> {
        if self.n != next.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: next.n,
            });
        }
        // First pass: which strands survive, and where they end.
        let mut survives = vec![false; self.n];
        let mut codomain = vec![false; self.n];
        for (i, image) in self.images.iter().enumerate() {
            if let Some(image) = image {
                if let Some(target) = next.image(core_of(image)) {
                    survives[i] = true;
                    codomain[core_of(target) - 1] = true;
                }
            }
        }
        let mut images = vec![None; self.n];
        for (i, image) in self.images.iter().enumerate() {
            if survives[i] {
                let image = image.as_ref().expect("surviving image");
                let out = substitute_filling(image, &next.images, |j| codomain[j - 1], cap)?;
                images[i] = Some(out);
            }
        }
        Ok(PartialEndo { n: self.n, images })
    }

    /// The partial injection i ↦ a(i) read from the image cores.
    pub fn index_map(&self) -> PartialInjection {
        let mapping = self.images.iter().map(|im| im.as_ref().map(core_of)).collect();
        PartialInjection::new(self.n, mapping).expect("images have distinct cores")
    }

    /// Checks the structural invariants of EF_n: conjugate form, injective
    /// index map, and images written in codomain generators only.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.images.len() != self.n {
            return Err("image table has wrong length".into());
        }
        let mut cores = Vec::new();
        for (i, image) in self.images.iter().enumerate() {
            if let Some(image) = image {
                let d = conjugate_decompose(image)
                    .ok_or_else(|| format!("x{} -> {image} is not a conjugate of a generator", i + 1))?;
                if d.core > self.n {
                    return Err(format!("x{} maps beyond F_{}", i + 1, self.n));
                }
                cores.push(d.core);
            }
        }
        let mut sorted = cores.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cores.len() {
            return Err("index map is not injective".into());
        }
        for image in self.images.iter().flatten() {
            if let Some((j, _)) = image.letters().find(|(j, _)| sorted.binary_search(j).is_err()) {
                return Err(format!("image {image} uses x{j} outside the codomain"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for PartialEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, image) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            match image {
                Some(image) => write!(f, "x{} -> {image}", i + 1)?,
                None => write!(f, "x{} -> _", i + 1)?,
            }
        }
        Ok(())
    }
}

pub fn letter_endo(letter: Letter, n: usize) -> Result<PartialEndo> {
    PartialEndo::of_letter(letter, n)
}

pub fn compose(first: &PartialEndo, second: &PartialEndo) -> Result<PartialEndo> {
    first.compose(second)
}

/// Image of `w` under the free-group action, with the default letter cap.
pub fn evaluate(w: &MonoidWord) -> Result<PartialEndo> {
    evaluate_with_cap(w, DEFAULT_MAX_LETTERS)
}

pub fn evaluate_with_cap(w: &MonoidWord, cap: usize) -> Result<PartialEndo> {
    let n = w.n();
    w.letters()
        .iter()
        .try_fold(PartialEndo::identity(n), |acc, &letter| {
            acc.compose_with_cap(&PartialEndo::of_letter(letter, n)?, cap)
        })
}

pub fn equal_action(w1: &MonoidWord, w2: &MonoidWord) -> Result<bool> {
    equal_action_with_cap(w1, w2, DEFAULT_MAX_LETTERS)
}

pub fn equal_action_with_cap(w1: &MonoidWord, w2: &MonoidWord, cap: usize) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::StrandMismatch {
            left: w1.n(),
            right: w2.n(),
        });
    }
    Ok(evaluate_with_cap(w1, cap)? == evaluate_with_cap(w2, cap)?)
}

/// The canonical map τ_n: IB_n → I_n, read off the action.
pub fn tau(w: &MonoidWord) -> Result<PartialInjection> {
    Ok(evaluate(w)?.index_map())
}

/// Class of a word in the commutative quotient of IB_n.
///
/// In any commutative quotient `εσ₁ε = σ₁εσ₁ε` and `ε = εσ₁²` give
/// `εσ₁ = ε`, so every element with a deleted strand lands on the single
/// absorbing class; full braids are classified by their exponent sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbelianClass {
    Group(i64),
    Epsilon,
}

impl fmt::Display for AbelianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianClass::Group(e) => write!(f, "group({e})"),
            AbelianClass::Epsilon => f.write_str("epsilon"),
        }
    }
}

pub fn abelian_invariant(w: &MonoidWord) -> Result<AbelianClass> {
    if w.contains_xi() {
        return Err(Error::Unsupported("abelian invariant is defined for IB_n words only".into()));
    }
    // A strand deleted by some ε never comes back, so the domain is total
    // exactly when no ε occurs.
    Ok(if w.contains_epsilon() {
        AbelianClass::Epsilon
    } else {
        AbelianClass::Group(w.exponent_sum())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{delta_word, epsilon_block, mirror_inverse};

    fn w(text: &str, n: usize) -> MonoidWord {
        MonoidWord::parse(text, n).unwrap()
    }

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn letter_images() {
        let e = letter_endo(Letter::Epsilon(1), 2).unwrap();
        assert_eq!(e.images(), &[None, Some(fw("x2"))]);
        let s = letter_endo(Letter::Sigma(1), 2).unwrap();
        assert_eq!(s.images(), &[Some(fw("x2")), Some(fw("x2^-1 x1 x2"))]);
        let t = letter_endo(Letter::Xi(1), 2).unwrap();
        assert_eq!(t.images(), &[Some(fw("x2")), Some(fw("x1"))]);
        assert!(letter_endo(Letter::Sigma(2), 2).is_err());
    }

    #[test]
    fn sigma_inverse_letter_undoes_sigma() {
        for n in 2..5 {
            for i in 1..n {
                let s = letter_endo(Letter::Sigma(i), n).unwrap();
                let si = letter_endo(Letter::SigmaInv(i), n).unwrap();
                assert_eq!(s.compose(&si).unwrap(), PartialEndo::identity(n));
                assert_eq!(si.compose(&s).unwrap(), PartialEndo::identity(n));
            }
        }
    }

    #[test]
    fn composition_examples() {
        let id = PartialEndo::identity(2);
        let s = letter_endo(Letter::Sigma(1), 2).unwrap();
        assert_eq!(id.compose(&s).unwrap(), s);
        let e1 = letter_endo(Letter::Epsilon(1), 2).unwrap();
        assert_eq!(evaluate(&w("e1 s1", 2)).unwrap(), compose(&e1, &s).unwrap());
        assert!(equal_action(&w("e1 s1", 2), &w("s1 e2", 2)).unwrap());
        assert!(compose(&id, &PartialEndo::identity(3)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&w("s1 s1^-1", 2)).unwrap(), PartialEndo::identity(2));
        assert_eq!(
            evaluate(&w("e1 s1 e1", 2)).unwrap(),
            evaluate(&w("s1 e1 s1 e1", 2)).unwrap()
        );
        let empty = evaluate(&w("e1 e2", 2)).unwrap();
        assert!(empty.images().iter().all(Option::is_none));
        assert_eq!(empty.to_string(), "x1 -> _\nx2 -> _");
    }

    #[test]
    fn equality_examples() {
        assert!(equal_action(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
        assert!(!equal_action(&w("e1", 2), &w("e2", 2)).unwrap());
        assert!(!equal_action(&w("s1", 2), &w("s1^-1", 2)).unwrap());
        assert!(equal_action(&w("s1", 2), &w("s1", 3)).is_err());
    }

    #[test]
    fn tau_examples() {
        let t = |text: &str, n| tau(&w(text, n)).unwrap();
        assert_eq!(t("s1", 2).mapping(), &[Some(2), Some(1)]);
        assert_eq!(t("e1", 2).mapping(), &[None, Some(2)]);
        assert_eq!(t("e1 s1", 2).mapping(), &[None, Some(1)]);
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian_invariant(&w("s1 s2^-1 s1", 3)).unwrap(), AbelianClass::Group(1));
        assert_eq!(
            abelian_invariant(&w("e1 s1 s1", 2)).unwrap(),
            abelian_invariant(&w("e1", 2)).unwrap()
        );
        assert_eq!(abelian_invariant(&MonoidWord::identity(4)).unwrap(), AbelianClass::Group(0));
        assert!(abelian_invariant(&w("t1", 2)).is_err());
    }

    #[test]
    fn mirror_inverse_axioms_small() {
        let a = w("e1 s1", 2);
        let m = mirror_inverse(&a);
        let ama = MonoidWord::product(2, [&a, &m, &a]).unwrap();
        assert!(equal_action(&ama, &a).unwrap());
        let mam = MonoidWord::product(2, [&m, &a, &m]).unwrap();
        assert!(equal_action(&mam, &m).unwrap());
    }

    #[test]
    fn delta_commutes_with_epsilons() {
        for n in 1..=7 {
            let delta = delta_word(n);
            for i in 1..=n {
                let left = w(&format!("e{i}"), n).concat(&delta).unwrap();
                let right = delta.concat(&w(&format!("e{}", n + 1 - i), n)).unwrap();
                assert!(equal_action(&left, &right).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn full_twist_and_empty_braid_are_central() {
        for n in 1..=6 {
            let twist = delta_word(n).pow(2);
            let empty = epsilon_block(0, n).unwrap();
            for z in [&twist, &empty] {
                for g in (1..n).map(Letter::Sigma).chain((1..=n).map(Letter::Epsilon)) {
                    let g = MonoidWord::new(n, vec![g]).unwrap();
                    assert!(equal_action(&z.concat(&g).unwrap(), &g.concat(z).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn images_satisfy_invariants() {
        let word = w("s1 s2^-1 e3 s1 s3 t2 e1 s2", 4);
        let mut acc = PartialEndo::identity(4);
        for &l in word.letters() {
            acc = acc.compose(&letter_endo(l, 4).unwrap()).unwrap();
            acc.validate().unwrap();
        }
    }

    #[test]
    fn resource_limit_is_reported() {
        let long = w(&"s1 s2^-1 ".repeat(40), 3);
        assert!(matches!(
            evaluate_with_cap(&long, 1000),
            Err(Error::ResourceLimit { cap: 1000 })
        ));
    }
}
