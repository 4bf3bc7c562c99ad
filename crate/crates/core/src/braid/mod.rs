//! Exact algebra in the braid group `B_d`.

mod conjugacy;
mod garside;
mod perm;
mod word;

pub use conjugacy::{conjugacy_test, summit_key, ConjugacyOutcome, NonConjugacyReason};
pub use garside::{canonical_form, equals, is_positive, CanonicalForm};
pub use perm::Permutation;
pub use word::{exponent_sum, full_twist, permutation_of, BraidWord};
