//! Budgeted conjugacy testing through super summit sets.
//!
//! Both braids are pushed into their super summit sets by cycling (raises
//! `inf`) and decycling (lowers `sup`). The super summit set is connected
//! under conjugation by permutation braids, so a breadth-first search from
//! one summit representative either meets the other, exhausts the set, or
//! runs out of budget.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::garside::{delta, flip, simple_letters, CanonicalForm};
use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonConjugacyReason {
    ExponentSum {
        left: i64,
        right: i64,
    },
    CycleType {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// `(inf, sup)` of the two super summit sets.
    SummitBounds {
        left: (i64, i64),
        right: (i64, i64),
    },
    /// The summit set of the left braid was enumerated completely.
    SummitSetExhausted {
        size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyOutcome {
    /// `z⁻¹ u z = v` for the witness `z`.
    Conjugate {
        witness: BraidWord,
    },
    NotConjugate {
        reason: NonConjugacyReason,
    },
    /// The budget ran out; `work` counts normal-form computations spent.
    Unknown {
        work: usize,
    },
}

struct Meter {
    left: usize,
    spent: usize,
}

impl Meter {
    fn tick(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        self.spent += 1;
        true
    }
}

fn simple_word(n: usize, p: &Permutation) -> BraidWord {
    BraidWord::from_letters_unchecked(n, simple_letters(p))
}

fn conjugate_form(x: &CanonicalForm, z: &BraidWord) -> CanonicalForm {
    let mut letters = z.inverse().letters().to_vec();
    letters.extend_from_slice(x.to_word().letters());
    letters.extend_from_slice(z.letters());
    CanonicalForm::from_word(&BraidWord::from_letters_unchecked(x.strands(), letters))
}

/// Moves `w` into its super summit set; returns the representative and a
/// conjugator `c` with `c⁻¹ w c` equal to it.
fn to_summit(w: &BraidWord, meter: &mut Meter) -> Option<(CanonicalForm, BraidWord)> {
    let n = w.strands();
    let mut x = CanonicalForm::from_word(w);
    let mut conj: Vec<i32> = Vec::new();
    let bound = n * n.saturating_sub(1) / 2;

    let mut stale = 0;
    while stale < bound.max(1) && x.canonical_length() > 0 {
        if !meter.tick() {
            return None;
        }
        let first = &x.factors()[0];
        let z = if x.inf().rem_euclid(2) == 1 { flip(first) } else { first.clone() };
        let z = simple_word(n, &z);
        let y = conjugate_form(&x, &z);
        conj.extend_from_slice(z.letters());
        stale = if y.inf() > x.inf() { 0 } else { stale + 1 };
        x = y;
    }

    stale = 0;
    while stale < bound.max(1) && x.canonical_length() > 0 {
        if !meter.tick() {
            return None;
        }
        let last = x.factors().last().unwrap();
        let z = simple_word(n, last).inverse();
        let y = conjugate_form(&x, &z);
        conj.extend_from_slice(z.letters());
        stale = if y.sup() < x.sup() { 0 } else { stale + 1 };
        x = y;
    }
    Some((x, BraidWord::from_letters_unchecked(n, conj)))
}

/// All permutation braids other than the identity, `Δ` first and the rest
/// in lexicographic order of their images.
fn conjugators(n: usize) -> Vec<Permutation> {
    let mut out = alloc::vec![delta(n)];
    let mut images: Vec<usize> = (0..n).collect();
    // next lexicographic permutation
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
        let p = Permutation::from_images_unchecked(images.clone());
        if p != out[0] {
            out.push(p);
        }
    }
    out
}

struct SummitSearch {
    /// state -> (parent, conjugating simple)
    visited: BTreeMap<CanonicalForm, Option<(CanonicalForm, Permutation)>>,
    complete: bool,
}

/// Breadth-first enumeration of the summit set of `start`, stopping early
/// when `goal` is met.
fn explore(start: &CanonicalForm, goal: Option<&CanonicalForm>, meter: &mut Meter) -> SummitSearch {
    let n = start.strands();
    let (inf, sup) = (start.inf(), start.sup());
    let mut visited = BTreeMap::new();
    visited.insert(start.clone(), None);
    if goal == Some(start) || n < 2 {
        return SummitSearch { visited, complete: true };
    }
    let simples = conjugators(n);
    let mut frontier = alloc::vec![start.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for y in &frontier {
            for s in &simples {
                if !meter.tick() {
                    return SummitSearch { visited, complete: false };
                }
                let y2 = conjugate_form(y, &simple_word(n, s));
                if y2.inf() != inf || y2.sup() != sup || visited.contains_key(&y2) {
                    continue;
                }
                visited.insert(y2.clone(), Some((y.clone(), s.clone())));
                if goal == Some(&y2) {
                    return SummitSearch { visited, complete: false };
                }
                next.push(y2);
            }
        }
        frontier = next;
    }
    SummitSearch { visited, complete: true }
}

fn path_to(search: &SummitSearch, target: &CanonicalForm) -> Vec<i32> {
    let n = target.strands();
    let mut steps = Vec::new();
    let mut cur = target.clone();
    while let Some(Some((parent, s))) = search.visited.get(&cur) {
        steps.push(s.clone());
        cur = parent.clone();
    }
    steps.reverse();
    steps.iter().flat_map(|s| simple_word(n, s).letters().to_vec()).collect()
}

/// Decides whether `u` and `v` are conjugate, spending at most `budget`
/// normal-form computations.
pub fn conjugacy_test(u: &BraidWord, v: &BraidWord, budget: usize) -> Result<ConjugacyOutcome> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let (eu, ev) = (u.exponent_sum(), v.exponent_sum());
    if eu != ev {
        let reason = NonConjugacyReason::ExponentSum { left: eu, right: ev };
        return Ok(ConjugacyOutcome::NotConjugate { reason });
    }
    let (tu, tv) = (u.permutation().cycle_type(), v.permutation().cycle_type());
    if tu != tv {
        let reason = NonConjugacyReason::CycleType { left: tu, right: tv };
        return Ok(ConjugacyOutcome::NotConjugate { reason });
    }

    let mut meter = Meter { left: budget, spent: 0 };
    let Some((su, cu)) = to_summit(u, &mut meter) else {
        return Ok(ConjugacyOutcome::Unknown { work: meter.spent });
    };
    let Some((sv, cv)) = to_summit(v, &mut meter) else {
        return Ok(ConjugacyOutcome::Unknown { work: meter.spent });
    };
    if (su.inf(), su.sup()) != (sv.inf(), sv.sup()) {
        let reason = NonConjugacyReason::SummitBounds { left: (su.inf(), su.sup()), right: (sv.inf(), sv.sup()) };
        return Ok(ConjugacyOutcome::NotConjugate { reason });
    }

    let search = explore(&su, Some(&sv), &mut meter);
    if search.visited.contains_key(&sv) {
        let mut letters = cu.letters().to_vec();
        letters.extend(path_to(&search, &sv));
        letters.extend_from_slice(cv.inverse().letters());
        let witness = BraidWord::from_letters_unchecked(u.strands(), letters).free_reduce();
        // A witness is only reported after it has been checked.
        let check = CanonicalForm::from_word(&u.conjugate(&witness)?);
        if check == CanonicalForm::from_word(v) {
            return Ok(ConjugacyOutcome::Conjugate { witness });
        }
        return Ok(ConjugacyOutcome::Unknown { work: meter.spent });
    }
    if search.complete {
        let reason = NonConjugacyReason::SummitSetExhausted { size: search.visited.len() };
        return Ok(ConjugacyOutcome::NotConjugate { reason });
    }
    Ok(ConjugacyOutcome::Unknown { work: meter.spent })
}

/// The least element of the super summit set of `w`, a complete invariant
/// of its conjugacy class. `None` when the budget does not cover the whole set.
pub fn summit_key(w: &BraidWord, budget: usize) -> Option<CanonicalForm> {
    let mut meter = Meter { left: budget, spent: 0 };
    let (s, _) = to_summit(w, &mut meter)?;
    let search = explore(&s, None, &mut meter);
    if !search.complete {
        return None;
    }
    search.visited.into_keys().next()
}
