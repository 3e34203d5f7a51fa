//! Garside theory on the braid parts: simple elements as permutations,
//! left-greedy normal forms, and canonical forms of partial braids.

mod canonical;
mod nf;
mod perm;

pub use canonical::{canonical_form, equal_nf, reconstruct_word, CanonicalForm};
pub use nf::{is_left_weighted, left_greedy_nf, normalize_simples, GarsideNF};
pub use perm::{is_permutation_braid, perm_to_word, strand_permutation, word_to_perm, Permutation};
