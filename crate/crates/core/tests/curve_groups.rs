mod common;

use braidmon_core::group::{group_order, simplify, zvk_presentation, FinitePresentation};
use braidmon_core::{Factorization, SingularityCounts};
use common::cf;

fn group(f: &Factorization) -> FinitePresentation {
    assert!(f.validate().is_valid());
    simplify(&zvk_presentation(f).unwrap(), 100)
}

#[test]
fn conic() {
    let p = group(&common::conic());
    assert_eq!(p.generators(), 1);
    assert_eq!(group_order(&p, 1_000), Some(2));
}

#[test]
fn cubics_have_cyclic_groups() {
    for f in [common::standard(3), common::searched(3, &[2, 1, 1, 1, 1]), common::cuspidal_cubic()] {
        let p = group(&f);
        assert_eq!(p.generators(), 1, "{p}");
        assert_eq!(group_order(&p, 1_000), Some(3));
    }
}

#[test]
fn conic_plus_line_is_infinite_cyclic() {
    let p = group(&common::conic_and_line());
    assert_eq!(p.generators(), 1);
    assert!(p.relators().iter().all(|r| r.is_empty()));
    assert_eq!(group_order(&p, 1_000), None);
}

/// A factorization with three cusps and three branch points on four strands,
/// found by exhaustive search over conjugators of length at most 2.
#[test]
fn three_cuspidal_quartic_has_order_twelve() {
    let f = Factorization::cuspidal(
        4,
        vec![
            cf(4, &[2, 1], 1),
            cf(4, &[2, 3], 1),
            cf(4, &[], 3),
            cf(4, &[-2], 3),
            cf(4, &[-2, -2], 3),
            cf(4, &[-2, -3], 1),
        ],
    )
    .unwrap();
    assert_eq!(f.counts(), Some(SingularityCounts { n1: 3, n2: 0, n3: 3 }));
    let p = group(&f);
    assert_eq!(group_order(&p, 10_000), Some(12));
}
