//! Relation suites of the presentations handled by the engines, expanded
//! over all index ranges for a given strand count.
//!
//! A chained relation `A = B = C` is emitted as every pair `(A,B)`, `(A,C)`,
//! `(B,C)`.

use std::fmt;
use std::str::FromStr;

use super::{mirror_inverse, Letter, MonoidWord};
use crate::action::{equal_action_with_cap, PartialInjection};
use crate::error::{Error, Result};
use crate::freegroup::DEFAULT_MAX_LETTERS;
use crate::garside::equal_nf;

/// Which evaluator a presentation is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteEngine {
    /// Inverse braid monoid relations: both the free-group action and the
    /// Garside canonical form apply.
    InverseBraid,
    /// Symmetric inverse monoid: only the partial-injection image is expected
    /// to satisfy the relations (σ_i² = 1 fails in IB_n).
    PartialInjection,
    /// Braid-permutation relations with ξ letters: free-group action only.
    Action,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Artin braid relations.
    Artin,
    /// Artin's two-generator presentation in σ₁ and σ = σ₁…σ_{n−1}.
    Artin2Gen,
    /// Braid relations plus the single idempotent ε = ε₁.
    IbnEps,
    /// Braid relations plus all ε_i.
    IbnBalanced,
    /// Two-generator group part σ₁, σ plus ε.
    Ibn2Gen,
    /// Symmetric inverse monoid I_n.
    SymInverse,
    /// Braid-permutation monoid IBP_n (σ, ξ and ε_i).
    IbpMixed,
}

impl Presentation {
    pub const ALL: [Presentation; 7] = [
        Presentation::Artin,
        Presentation::Artin2Gen,
        Presentation::IbnEps,
        Presentation::IbnBalanced,
        Presentation::Ibn2Gen,
        Presentation::SymInverse,
        Presentation::IbpMixed,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Presentation::Artin => "artin",
            Presentation::Artin2Gen => "artin-2gen",
            Presentation::IbnEps => "ibn-eps",
            Presentation::IbnBalanced => "ibn-balanced",
            Presentation::Ibn2Gen => "ibn-2gen",
            Presentation::SymInverse => "sym-inverse",
            Presentation::IbpMixed => "ibp-mixed",
        }
    }

    pub fn engine(self) -> SuiteEngine {
        match self {
            Presentation::SymInverse => SuiteEngine::PartialInjection,
            Presentation::IbpMixed => SuiteEngine::Action,
            _ => SuiteEngine::InverseBraid,
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Presentation::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownPresentation(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPair {
    pub left: MonoidWord,
    pub right: MonoidWord,
    pub presentation: Presentation,
    /// Short name of the relation family, e.g. `braid` or `eps-shift`.
    pub rule: &'static str,
}

impl RelationPair {
    /// Compares both sides in the engines the presentation is meant for;
    /// inverse braid relations must hold in both solvers.
    pub fn holds(&self) -> Result<bool> {
        self.holds_with_cap(DEFAULT_MAX_LETTERS)
    }

    pub fn holds_with_cap(&self, cap: usize) -> Result<bool> {
        let (l, r) = (&self.left, &self.right);
        Ok(match self.presentation.engine() {
            SuiteEngine::InverseBraid => equal_action_with_cap(l, r, cap)? && equal_nf(l, r)?,
            SuiteEngine::PartialInjection => PartialInjection::of_word(l) == PartialInjection::of_word(r),
            SuiteEngine::Action => equal_action_with_cap(l, r, cap)?,
        })
    }
}

impl fmt::Display for RelationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &MonoidWord| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        };
        write!(f, "[{}] {} = {}", self.rule, side(&self.left), side(&self.right))
    }
}

struct Suite {
    n: usize,
    presentation: Presentation,
    pairs: Vec<RelationPair>,
}

use Letter::{Epsilon as E, Sigma as S, SigmaInv as Si, Xi as X};

impl Suite {
    fn word(&self, parts: &[&[Letter]]) -> MonoidWord {
        MonoidWord::from_valid(self.n, parts.concat())
    }

    fn rel(&mut self, rule: &'static str, left: &[&[Letter]], right: &[&[Letter]]) {
        let pair = RelationPair {
            left: self.word(left),
            right: self.word(right),
            presentation: self.presentation,
            rule,
        };
        self.pairs.push(pair);
    }

    fn chain(&mut self, rule: &'static str, sides: &[&[&[Letter]]]) {
        for (a, left) in sides.iter().enumerate() {
            for right in &sides[a + 1..] {
                self.rel(rule, left, right);
            }
        }
    }

    fn inverses(&mut self) {
        for i in 1..self.n {
            self.rel("inverse", &[&[S(i), Si(i)]], &[]);
            self.rel("inverse", &[&[Si(i), S(i)]], &[]);
        }
    }

    fn artin(&mut self) {
        self.coxeter(S, "far-commute", "braid");
    }

    /// Far commutation and braid relations for one kind of crossing letter.
    fn coxeter(&mut self, g: fn(usize) -> Letter, far: &'static str, braid: &'static str) {
        let n = self.n;
        for i in 1..n {
            for j in i + 2..n {
                self.rel(far, &[&[g(i), g(j)]], &[&[g(j), g(i)]]);
            }
        }
        for i in 1..n.saturating_sub(1) {
            self.rel(braid, &[&[g(i), g(i + 1), g(i)]], &[&[g(i + 1), g(i), g(i + 1)]]);
        }
    }

    /// The relations tying ε = ε₁ to σ₁ (n ≥ 2), together with idempotence.
    fn single_epsilon(&mut self, with_square: bool) {
        if self.n >= 2 {
            self.chain("eps-sigma", &[
                &[&[E(1), S(1), E(1)]],
                &[&[S(1), E(1), S(1), E(1)]],
                &[&[E(1), S(1), E(1), S(1)]],
            ]);
        }
        if with_square && self.n >= 2 {
            self.chain("eps-idem", &[
                &[&[E(1)]],
                &[&[E(1), E(1)]],
                &[&[E(1), S(1), S(1)]],
                &[&[S(1), S(1), E(1)]],
            ]);
        } else {
            self.rel("eps-idem", &[&[E(1)]], &[&[E(1), E(1)]]);
        }
    }

    /// ε_i relations against a crossing letter family (σ or ξ).
    fn balanced(&mut self, g: fn(usize) -> Letter, prefix: Rules) {
        let n = self.n;
        for i in 1..n {
            for j in 1..=n {
                if j.abs_diff(i) > 1 {
                    self.rel(prefix.far, &[&[E(j), g(i)]], &[&[g(i), E(j)]]);
                }
            }
            self.rel(prefix.shift, &[&[E(i), g(i)]], &[&[g(i), E(i + 1)]]);
            self.rel(prefix.shift, &[&[E(i + 1), g(i)]], &[&[g(i), E(i)]]);
            self.chain(prefix.square, &[
                &[&[E(i + 1), g(i), g(i)]],
                &[&[g(i), g(i), E(i + 1)]],
                &[&[E(i + 1)]],
            ]);
            self.chain(prefix.absorb, &[
                &[&[E(i), E(i + 1), g(i)]],
                &[&[g(i), E(i), E(i + 1)]],
                &[&[E(i), E(i + 1)]],
            ]);
        }
    }

    fn idempotents(&mut self) {
        for j in 1..=self.n {
            self.rel("eps-idem", &[&[E(j)]], &[&[E(j), E(j)]]);
        }
    }

    /// Relations of Artin's two-generator presentation, with σ expanded.
    fn two_generator(&mut self) {
        let n = self.n;
        if n < 2 {
            return;
        }
        let sigma: Vec<Letter> = (1..n).map(S).collect();
        let sigma_inv = mirror_inverse(&MonoidWord::from_valid(n, sigma.clone())).into_letters();
        let power = |letters: &[Letter], e: usize| letters.repeat(e);
        for i in 2..=n / 2 {
            let conj = [power(&sigma, i), vec![S(1)], power(&sigma_inv, i)].concat();
            self.rel("2gen-commute", &[&[S(1)], &conj], &[&conj, &[S(1)]]);
        }
        let twist = [sigma.clone(), vec![S(1)]].concat();
        self.rel("2gen-power", &[&power(&sigma, n)], &[&power(&twist, n - 1)]);
        self.rel("inverse", &[&[S(1), Si(1)]], &[]);
        self.rel("inverse", &[&[Si(1), S(1)]], &[]);
        self.rel("inverse", &[&sigma, &sigma_inv], &[]);
        self.rel("inverse", &[&sigma_inv, &sigma], &[]);
    }

    fn two_generator_epsilon(&mut self) {
        let n = self.n;
        let sigma: Vec<Letter> = (1..n).map(S).collect();
        let sigma_inv = mirror_inverse(&MonoidWord::from_valid(n, sigma.clone())).into_letters();
        for i in 1..n.saturating_sub(1) {
            let conj = [sigma.repeat(i), vec![S(1)], sigma_inv.repeat(i)].concat();
            self.rel("eps-commute", &[&[E(1)], &conj], &[&conj, &[E(1)]]);
        }
        self.single_epsilon(true);
    }
}

#[derive(Clone, Copy)]
struct Rules {
    far: &'static str,
    shift: &'static str,
    square: &'static str,
    absorb: &'static str,
}

const SIGMA_RULES: Rules = Rules {
    far: "eps-far",
    shift: "eps-shift",
    square: "eps-square",
    absorb: "eps-absorb",
};

const XI_RULES: Rules = Rules {
    far: "eps-xi-far",
    shift: "eps-xi-shift",
    square: "eps-xi-square",
    absorb: "eps-xi-absorb",
};

/// All relation instances of `presentation` on `n` strands.
pub fn relation_suite(presentation: Presentation, n: usize) -> Result<Vec<RelationPair>> {
    if n == 0 {
        return Err(Error::Domain("relation suites need n >= 1".into()));
    }
    let mut suite = Suite {
        n,
        presentation,
        pairs: Vec::new(),
    };
    match presentation {
        Presentation::Artin => suite.artin(),
        Presentation::Artin2Gen => suite.two_generator(),
        Presentation::IbnEps => {
            suite.inverses();
            suite.artin();
            for i in 2..n {
                suite.rel("eps-commute", &[&[E(1), S(i)]], &[&[S(i), E(1)]]);
            }
            suite.single_epsilon(true);
        }
        Presentation::IbnBalanced => {
            suite.inverses();
            suite.artin();
            suite.balanced(S, SIGMA_RULES);
            suite.idempotents();
        }
        Presentation::Ibn2Gen => {
            suite.two_generator();
            suite.two_generator_epsilon();
        }
        Presentation::SymInverse => {
            suite.artin();
            for i in 1..n {
                suite.rel("involution", &[&[S(i), S(i)]], &[]);
            }
            for i in 2..n {
                suite.rel("eps-commute", &[&[E(1), S(i)]], &[&[S(i), E(1)]]);
            }
            suite.single_epsilon(false);
        }
        Presentation::IbpMixed => {
            for i in 1..n {
                suite.rel("xi-involution", &[&[X(i), X(i)]], &[]);
            }
            suite.coxeter(X, "xi-far-commute", "xi-braid");
            suite.inverses();
            suite.artin();
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) > 1 {
                        suite.rel("mixed-far", &[&[S(i), X(j)]], &[&[X(j), S(i)]]);
                    }
                }
            }
            for i in 1..n.saturating_sub(1) {
                suite.rel(
                    "mixed-xxs",
                    &[&[X(i), X(i + 1), S(i)]],
                    &[&[S(i + 1), X(i), X(i + 1)]],
                );
                suite.rel(
                    "mixed-ssx",
                    &[&[S(i), S(i + 1), X(i)]],
                    &[&[X(i + 1), S(i), S(i + 1)]],
                );
            }
            suite.balanced(S, SIGMA_RULES);
            suite.balanced(X, XI_RULES);
            suite.idempotents();
        }
    }
    Ok(suite.pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(pairs: &[RelationPair], l: &str, r: &str, n: usize) -> bool {
        let l = MonoidWord::parse(l, n).unwrap();
        let r = MonoidWord::parse(r, n).unwrap();
        pairs
            .iter()
            .any(|p| (p.left == l && p.right == r) || (p.left == r && p.right == l))
    }

    #[test]
    fn artin_three_strands_is_one_braid_relation() {
        let pairs = relation_suite(Presentation::Artin, 3).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(contains(&pairs, "s1 s2 s1", "s2 s1 s2", 3));
    }

    #[test]
    fn artin_counts() {
        // n = 5: far pairs (1,3), (1,4), (2,4) and braid relations for i = 1..3.
        assert_eq!(relation_suite(Presentation::Artin, 5).unwrap().len(), 6);
        assert!(relation_suite(Presentation::Artin, 1).unwrap().is_empty());
    }

    #[test]
    fn eps_suite_examples() {
        let pairs = relation_suite(Presentation::IbnEps, 2).unwrap();
        assert!(contains(&pairs, "e1 s1 e1", "s1 e1 s1 e1", 2));
        assert!(contains(&pairs, "e1", "e1 s1 s1", 2));
    }

    #[test]
    fn balanced_suite_examples() {
        let pairs = relation_suite(Presentation::IbnBalanced, 3).unwrap();
        assert!(contains(&pairs, "e1 s1", "s1 e2", 3));
        assert!(contains(&pairs, "e1 e2 s1", "e1 e2", 3));
        assert!(contains(&pairs, "e3 s1", "s1 e3", 3));
    }

    #[test]
    fn two_generator_suite_expands_sigma() {
        let pairs = relation_suite(Presentation::Ibn2Gen, 4).unwrap();
        assert!(pairs.iter().all(|p| !p.left.contains_xi()));
        // σ⁴ = (σσ₁)³ with σ = σ₁σ₂σ₃.
        assert!(contains(
            &pairs,
            "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3",
            "s1 s2 s3 s1 s1 s2 s3 s1 s1 s2 s3 s1",
            4
        ));
    }

    #[test]
    fn one_strand_suites_are_idempotence_only() {
        for p in Presentation::ALL {
            for rel in relation_suite(p, 1).unwrap() {
                assert!(rel.left.letters().iter().all(|l| matches!(l, Letter::Epsilon(1))));
            }
        }
    }

    #[test]
    fn every_suite_holds_in_its_engine() {
        for p in Presentation::ALL {
            for n in 1..=4 {
                for rel in relation_suite(p, n).unwrap() {
                    assert!(rel.holds().unwrap(), "n={n} {p}: {rel}");
                }
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for p in Presentation::ALL {
            assert_eq!(p.id().parse::<Presentation>().unwrap(), p);
        }
        assert!(matches!(
            "nope".parse::<Presentation>(),
            Err(Error::UnknownPresentation(_))
        ));
        assert!(relation_suite(Presentation::Artin, 0).is_err());
    }
}
