//! Exact computation in the inverse braid monoid IB_n.
//!
//! Words over σ_i^{±1}, ε_i (and the permutation letters ξ_i of the
//! braid-permutation monoid) are compared by two independent solvers: the
//! partial action on the free group ([`action`]) and Garside canonical forms
//! ([`garside`]), built on the strand skeleton of [`diagram`].

pub mod action;
pub mod diagram;
pub mod error;
pub mod freegroup;
pub mod garside;
pub mod monoidal;
pub mod words;

pub use action::{
    abelian_invariant, equal_action, evaluate, tau, AbelianClass, PartialEndo, PartialInjection,
};
pub use diagram::{delete_strand, evaluate_skeleton, is_i_makanin, is_makanin, Skeleton};
pub use error::{Error, Result};
pub use freegroup::FreeWord;
pub use garside::{canonical_form, equal_nf, reconstruct_word, CanonicalForm, GarsideNF, Permutation};
pub use monoidal::{factorize, is_central, mu};
pub use words::relations::{relation_suite, Presentation, RelationPair};
pub use words::{Letter, MonoidWord};
