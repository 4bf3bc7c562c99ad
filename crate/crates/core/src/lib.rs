//! Braid groups and braid monodromy factorizations of plane cuspidal curves.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`braid`]: braid words, left-greedy Garside normal forms, the word
//!   problem, permutation images, positivity and budgeted conjugacy testing;
//! * [`factorization`]: factorizations of the full twist into conjugates of
//!   powers of the first generator, Hurwitz moves, simultaneous conjugation
//!   and a brute-force witness search;
//! * [`equivalence`]: fingerprints and bounded orbit search deciding
//!   "same braid factorization type" as far as a budget allows;
//! * [`group`]: Zariski–van Kampen presentations, Tietze simplification,
//!   homomorphisms to symmetric groups and coset enumeration;
//! * [`geometry`]: exact arithmetic in `Q(μ)`, `μ = e^{iπ/3}`, the dual Hesse
//!   line arrangement and the branch-curve invariants of the `m`-canonical
//!   generic projections.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod equivalence;
pub mod error;
pub mod factorization;
pub mod geometry;
pub mod group;

pub use braid::{
    canonical_form, conjugacy_test, equals, exponent_sum, full_twist, is_positive, permutation_of, BraidWord,
    CanonicalForm, ConjugacyOutcome, Permutation,
};
pub use equivalence::{decide_equivalence, fingerprint, EquivalenceVerdict, Fingerprint};
pub use error::{Error, Result};
pub use factorization::{CuspidalFactor, Direction, Factorization, SingularityCounts};
