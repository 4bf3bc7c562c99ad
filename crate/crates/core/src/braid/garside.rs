//! Left-greedy Garside normal form.
//!
//! A braid is written `Δ^inf · A_1 ⋯ A_k` with every `A_j` a permutation
//! braid (a positive braid in which each pair of strands crosses at most
//! once), none equal to the identity or to `Δ`, and every adjacent pair
//! `(A_j, A_{j+1})` left-weighted: the starting set of `A_{j+1}` is contained
//! in the finishing set of `A_j`.
//!
//! Permutation braids are identified with their permutations (see
//! [`BraidWord::permutation`]). With that convention:
//!
//! * `i ∈ S(A)` (A can start with `X_i`) iff `A(i) > A(i+1)`;
//! * `i ∈ F(A)` (A can end with `X_i`) iff `A⁻¹(i) > A⁻¹(i+1)`;
//! * `A·X_i` swaps the values `i`, `i+1`; `X_i⁻¹·A` swaps the entries at `i`, `i+1`.

use alloc::vec::Vec;

use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{Error, Result};

pub(crate) fn delta(n: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).rev().collect())
}

fn starts_with(a: &Permutation, i: usize) -> bool {
    a.apply(i) > a.apply(i + 1)
}

fn ends_with(a_inv: &[usize], i: usize) -> bool {
    a_inv[i] > a_inv[i + 1]
}

/// `A · X_i` for `i ∉ F(A)`.
fn mul_generator(a: &Permutation, i: usize) -> Permutation {
    let images = a
        .images()
        .iter()
        .map(|&v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `X_i⁻¹ · B` for `i ∈ S(B)`.
fn strip_generator(b: &Permutation, i: usize) -> Permutation {
    let mut images = b.images().to_vec();
    images.swap(i, i + 1);
    Permutation::from_images_unchecked(images)
}

/// `Δ⁻¹ A Δ`, which sends `X_i` to `X_{n-i}`.
pub(crate) fn flip(a: &Permutation) -> Permutation {
    let n = a.degree();
    let images = (0..n).map(|p| n - 1 - a.apply(n - 1 - p)).collect();
    Permutation::from_images_unchecked(images)
}

/// The simple element `A*` with `A · A* = Δ`.
pub(crate) fn right_complement(a: &Permutation) -> Permutation {
    let n = a.degree();
    let inv = a.inverse();
    Permutation::from_images_unchecked((0..n).map(|q| n - 1 - inv.apply(q)).collect())
}

/// A positive word (one-based letters) for a permutation braid.
pub(crate) fn simple_letters(a: &Permutation) -> Vec<i32> {
    let mut images = a.images().to_vec();
    let mut out = Vec::new();
    let mut i = 0;
    while i + 1 < images.len() {
        if images[i] > images[i + 1] {
            images.swap(i, i + 1);
            out.push(i as i32 + 1);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    out
}

/// Rewrites `(a, b)` into the left-weighted pair with the same product.
/// Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut moved = false;
    let mut a_inv = a.inverse();
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if starts_with(b, i) && !ends_with(a_inv.images(), i) {
                *a = mul_generator(a, i);
                *b = strip_generator(b, i);
                a_inv = a.inverse();
                moved = true;
                continue 'outer;
            }
        }
        return moved;
    }
}

fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let a_inv = a.inverse();
    (0..a.degree().saturating_sub(1)).all(|i| !starts_with(b, i) || ends_with(a_inv.images(), i))
}

/// Left-greedy normal form `Δ^inf · A_1 ⋯ A_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Self {
        Self { strands, inf: 0, factors: Vec::new() }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let mut nf = Self::identity(w.strands());
        nf.mul_letters(w.letters());
        nf
    }

    /// Assembles a form from parts, checking left-weightedness and the
    /// absence of identity or `Δ` factors.
    pub fn from_parts(strands: usize, inf: i64, factors: Vec<Permutation>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        let d = delta(strands);
        let ok = factors.iter().all(|f| f.degree() == strands && !f.is_identity() && *f != d)
            && factors.windows(2).all(|p| is_left_weighted(&p[0], &p[1]));
        if !ok {
            return Err(Error::Parse {
                what: "canonical form",
                detail: alloc::string::String::from("factors are not a left-weighted sequence"),
            });
        }
        Ok(Self { strands, inf: if strands == 1 { 0 } else { inf }, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the half twist `Δ`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// The permutation braids `A_1, …, A_k`.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Length of the word returned by [`to_word`](Self::to_word).
    pub fn word_len(&self) -> usize {
        let n = self.strands;
        let delta_len = n * n.saturating_sub(1) / 2;
        self.inf.unsigned_abs() as usize * delta_len
            + self.factors.iter().map(|f| simple_letters(f).len()).sum::<usize>()
    }

    /// Each permutation-braid factor as a positive word.
    pub fn factor_words(&self) -> Vec<BraidWord> {
        self.factors.iter().map(|f| BraidWord::from_letters_unchecked(self.strands, simple_letters(f))).collect()
    }

    /// Flattens back to a braid word: `Δ^inf` followed by each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n > 1 && self.inf != 0 {
            let mut d = simple_letters(&delta(n));
            if self.inf < 0 {
                d = d.iter().rev().map(|l| -l).collect();
            }
            for _ in 0..self.inf.unsigned_abs() {
                letters.extend_from_slice(&d);
            }
        }
        for f in &self.factors {
            letters.extend(simple_letters(f));
        }
        BraidWord::from_letters_unchecked(n, letters)
    }

    pub fn mul_word(&mut self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: w.strands() });
        }
        self.mul_letters(w.letters());
        Ok(())
    }

    pub(crate) fn mul_letters(&mut self, letters: &[i32]) {
        if self.strands < 2 {
            return;
        }
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            let gen = Permutation::transposition(self.strands, i, i + 1);
            if l > 0 {
                self.mul_simple(gen);
            } else {
                // X_i⁻¹ = X_i* · Δ⁻¹, and A · Δ⁻¹ = Δ⁻¹ · flip(A).
                self.mul_simple(right_complement(&gen));
                self.inf -= 1;
                for f in &mut self.factors {
                    *f = flip(f);
                }
            }
        }
    }

    /// Right multiplication by a permutation braid.
    pub fn mul_simple(&mut self, b: Permutation) {
        debug_assert_eq!(b.degree(), self.strands);
        if b.is_identity() {
            return;
        }
        self.factors.push(b);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        self.factors.retain(|f| !f.is_identity());
        let d = delta(self.strands);
        let lead = self.factors.iter().take_while(|f| **f == d).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
        if !self.factors.windows(2).all(|p| is_left_weighted(&p[0], &p[1])) {
            self.repair();
        }
    }

    fn repair(&mut self) {
        loop {
            let mut changed = false;
            for j in 1..self.factors.len() {
                let (left, right) = self.factors.split_at_mut(j);
                changed |= left_weight(&mut left[j - 1], &mut right[0]);
            }
            self.factors.retain(|f| !f.is_identity());
            let d = delta(self.strands);
            let lead = self.factors.iter().take_while(|f| **f == d).count();
            if lead > 0 {
                self.factors.drain(..lead);
                self.inf += lead as i64;
                changed = true;
            }
            if !changed {
                return;
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }
}

/// Normal form of a braid word.
pub fn canonical_form(w: &BraidWord) -> CanonicalForm {
    CanonicalForm::from_word(w)
}

/// Whether two words represent the same braid.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    Ok(canonical_form(u) == canonical_form(v))
}

/// Membership in the positive monoid.
pub fn is_positive(w: &BraidWord) -> bool {
    canonical_form(w).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::full_twist;

    fn w(d: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(d, l.to_vec()).unwrap()
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation::from_images(prefix.clone()).unwrap());
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    go(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut alloc::vec![false; n], &mut out);
        out
    }

    #[test]
    fn simple_words_realize_their_permutations() {
        for n in 1..=5 {
            for p in all_perms(n) {
                let letters = simple_letters(&p);
                let word = BraidWord::from_letters_unchecked(n, letters.clone());
                assert_eq!(word.permutation(), p);
                // length equals the inversion count, so each strand pair crosses at most once
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p.apply(i) > p.apply(j))
                    .count();
                assert_eq!(letters.len(), inversions);
            }
        }
    }

    #[test]
    fn starting_and_finishing_sets_match_words() {
        // i ∈ S(A) iff some positive word for A starts with X_i, checked via the
        // generic bubble word after forcing the first swap.
        for n in 2..=4 {
            for p in all_perms(n) {
                for i in 0..n - 1 {
                    let s = starts_with(&p, i);
                    let by_length = simple_letters(&strip_generator(&p, i)).len() + 1 == simple_letters(&p).len();
                    assert_eq!(s, by_length);
                    let f = ends_with(p.inverse().images(), i);
                    let q = p.then(&Permutation::transposition(n, i, i + 1));
                    assert_eq!(f, simple_letters(&q).len() + 1 == simple_letters(&p).len());
                }
            }
        }
    }

    #[test]
    fn complement_and_flip() {
        for n in 2..=5 {
            let d = delta(n);
            for p in all_perms(n) {
                assert_eq!(p.then(&right_complement(&p)), d);
                assert_eq!(flip(&flip(&p)), p);
            }
            for i in 0..n - 1 {
                assert_eq!(
                    flip(&Permutation::transposition(n, i, i + 1)),
                    Permutation::transposition(n, n - 2 - i, n - 1 - i)
                );
            }
        }
    }

    #[test]
    fn braid_relation_and_cancellation() {
        assert_eq!(canonical_form(&w(3, &[1, 2, 1])), canonical_form(&w(3, &[2, 1, 2])));
        let c = canonical_form(&w(3, &[1, -1]));
        assert_eq!((c.inf(), c.canonical_length()), (0, 0));
        let t = canonical_form(&full_twist(3).unwrap());
        assert_eq!((t.inf(), t.canonical_length()), (2, 0));
    }

    #[test]
    fn full_twist_normal_forms() {
        for d in 2..=8 {
            let t = canonical_form(&full_twist(d).unwrap());
            assert_eq!(t.inf(), 2);
            assert!(t.factors().is_empty());
        }
        let t1 = canonical_form(&full_twist(1).unwrap());
        assert!(t1.is_identity());
    }

    #[test]
    fn full_twist_is_central() {
        for d in 2..=8 {
            let t = full_twist(d).unwrap();
            for g in 1..d as i32 {
                for s in [g, -g] {
                    let x = BraidWord::generator(d, s).unwrap();
                    assert!(equals(&x.compose(&t).unwrap(), &t.compose(&x).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn distinct_generators_differ() {
        assert!(!equals(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(equals(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn positivity() {
        assert!(is_positive(&w(3, &[1, 2])));
        assert!(!is_positive(&w(3, &[-1])));
        assert!(!is_positive(&w(3, &[-1, 2, 1])));
        assert!(is_positive(&w(3, &[-1, 1, 2, 1, -1])));
        // Δ X_1⁻¹ is positive: X_1 X_2 X_1 X_1⁻¹ = X_1 X_2.
        assert!(is_positive(&w(3, &[1, 2, 1, -1])));
    }

    #[test]
    fn flattened_form_is_a_fixed_point() {
        let u = w(5, &[1, -3, 2, -4, -1, 3, 3, 2, -2, 4, -1]);
        let c = canonical_form(&u);
        assert!(equals(&c.to_word(), &u).unwrap());
        assert_eq!(canonical_form(&c.to_word()), c);
        assert_eq!(c.word_len(), c.to_word().len());
    }

    #[test]
    fn from_parts_rejects_unweighted_sequences() {
        let x1 = Permutation::transposition(3, 0, 1);
        assert!(CanonicalForm::from_parts(3, 0, alloc::vec![x1.clone(), x1.clone()]).is_ok());
        let x2 = Permutation::transposition(3, 1, 2);
        // S(X_1) ⊄ F(X_2)
        assert!(CanonicalForm::from_parts(3, 0, alloc::vec![x2, x1]).is_err());
        assert!(CanonicalForm::from_parts(3, 0, alloc::vec![delta(3)]).is_err());
    }
}
