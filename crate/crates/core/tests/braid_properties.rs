mod common;

use braidmon_core::braid::{canonical_form, equals, is_positive, CanonicalForm};
use braidmon_core::group::artin_images;
use braidmon_core::{full_twist, BraidWord};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word() -> impl Strategy<Value = BraidWord> {
    (2usize..=6).prop_flat_map(|d| {
        let g = d as i32 - 1;
        prop::collection::vec((1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 0..24)
            .prop_map(move |l| BraidWord::new(d, l).unwrap())
    })
}

fn pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    word().prop_flat_map(|u| {
        let d = u.strands();
        let g = d as i32 - 1;
        let v = prop::collection::vec((1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 0..24)
            .prop_map(move |l| BraidWord::new(d, l).unwrap());
        (Just(u), v)
    })
}

proptest! {
    #[test]
    fn word_problem_agrees_with_artin_action((u, v) in pair()) {
        // The Artin representation is faithful, so it is an independent oracle.
        let same = artin_images(&u) == artin_images(&v);
        prop_assert_eq!(equals(&u, &v).unwrap(), same);
    }

    #[test]
    fn rewrites_preserve_the_normal_form(u in word(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = common::scramble(&mut rng, &u, 40, 60);
        prop_assert_eq!(artin_images(&u), artin_images(&v));
        prop_assert_eq!(canonical_form(&u), canonical_form(&v));
        prop_assert_eq!(u.exponent_sum(), v.exponent_sum());
        prop_assert_eq!(u.permutation(), v.permutation());
    }

    #[test]
    fn normal_form_is_a_fixed_point(u in word()) {
        let nf = canonical_form(&u);
        prop_assert_eq!(canonical_form(&nf.to_word()), nf.clone());
        prop_assert!(equals(&nf.to_word(), &u).unwrap());
        let rebuilt = CanonicalForm::from_parts(u.strands(), nf.inf(), nf.factors().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, nf);
    }

    #[test]
    fn multiplication_is_compatible((u, v) in pair()) {
        let uv = u.compose(&v).unwrap();
        let mut nf = canonical_form(&u);
        nf.mul_word(&v).unwrap();
        prop_assert_eq!(nf, canonical_form(&uv));
        prop_assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
        prop_assert!(equals(&uv.compose(&uv.inverse()).unwrap(), &BraidWord::identity(u.strands()).unwrap()).unwrap());
    }

    #[test]
    fn positivity(u in word()) {
        let pos = BraidWord::new(u.strands(), u.letters().iter().map(|l| l.abs()).collect()).unwrap();
        prop_assert!(is_positive(&pos));
        if !pos.is_empty() {
            prop_assert!(!is_positive(&pos.inverse()));
        }
        let nf = canonical_form(&u);
        prop_assert_eq!(is_positive(&u), nf.inf() >= 0);
    }

    #[test]
    fn full_twist_is_central(u in word()) {
        let t = full_twist(u.strands()).unwrap();
        prop_assert!(equals(&t.compose(&u).unwrap(), &u.compose(&t).unwrap()).unwrap());
    }
}
