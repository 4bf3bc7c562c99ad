//! Brute-force search for cuspidal factorizations of the full twist with a
//! prescribed multiset of exponents.
//!
//! Conjugators are enumerated as freely reduced words in shortlex order
//! (length first, then letters ordered `1, -1, 2, -2, …`); conjugators giving
//! the same factor braid are merged, keeping the first. The depth-first
//! search tries exponents in increasing order at each position and
//! candidates in enumeration order, so the returned witness is the least
//! one under that ordering. The last factor is not enumerated: it is
//! determined by the prefix and looked up.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{CuspidalFactor, Factorization};
use crate::braid::{full_twist, BraidWord, CanonicalForm, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_conjugator_length: usize,
    /// Candidate factors tried before giving up.
    pub max_nodes: usize,
    pub max_strands: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { max_conjugator_length: 4, max_nodes: 5_000_000, max_strands: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Factorization),
    /// The search space within the bounds was exhausted.
    NoneWithinBounds,
    BudgetExceeded {
        nodes: usize,
    },
}

struct Candidate {
    rho: BraidWord,
    letters: Vec<i32>,
    perm: Permutation,
}

struct Pool {
    candidates: Vec<Candidate>,
    by_form: BTreeMap<CanonicalForm, usize>,
}

/// Freely reduced words up to `max_len` in shortlex order.
fn conjugator_words(d: usize, max_len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..d as i32).flat_map(|i| [i, -i]).collect();
    let mut out = alloc::vec![Vec::new()];
    let mut layer = alloc::vec![Vec::<i32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn pool(d: usize, s: u8, words: &[Vec<i32>]) -> Pool {
    let mut candidates = Vec::new();
    let mut by_form = BTreeMap::new();
    for rho in words {
        let rho = BraidWord::new(d, rho.clone()).expect("letters in range");
        let factor = CuspidalFactor { rho: rho.clone(), s };
        let word = factor.word();
        let form = CanonicalForm::from_word(&word);
        if by_form.contains_key(&form) {
            continue;
        }
        by_form.insert(form, candidates.len());
        candidates.push(Candidate { rho, perm: word.permutation(), letters: word.letters().to_vec() });
    }
    Pool { candidates, by_form }
}

struct Dfs<'a> {
    d: usize,
    pools: &'a BTreeMap<u8, Pool>,
    twist: CanonicalForm,
    nodes: usize,
    max_nodes: usize,
    chosen: Vec<(u8, usize)>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Whether `p` can be the permutation of a factor with exponent `s`.
fn fits(p: &Permutation, s: u8) -> bool {
    if s.is_multiple_of(2) {
        p.is_identity()
    } else {
        p.is_transposition()
    }
}

impl Dfs<'_> {
    fn run(&mut self, remaining: &mut BTreeMap<u8, usize>, prefix: &CanonicalForm, perm: &Permutation) -> Step {
        let left: usize = remaining.values().sum();
        if left == 1 {
            let s = *remaining.iter().find(|(_, &c)| c > 0).unwrap().0;
            if !fits(&perm.inverse(), s) {
                return Step::Exhausted;
            }
            self.nodes += 1;
            let mut needed = self.twist.clone();
            needed.mul_letters(prefix.to_word().inverse().letters());
            if let Some(&idx) = self.pools[&s].by_form.get(&needed) {
                self.chosen.push((s, idx));
                return Step::Found;
            }
            return Step::Exhausted;
        }
        let keys: Vec<u8> = remaining.iter().filter(|(_, &c)| c > 0).map(|(&s, _)| s).collect();
        for s in keys {
            *remaining.get_mut(&s).unwrap() -= 1;
            let last_s = if left == 2 { remaining.iter().find(|(_, &c)| c > 0).map(|(&k, _)| k) } else { None };
            for (idx, c) in self.pools[&s].candidates.iter().enumerate() {
                let next_perm = perm.then(&c.perm);
                if let Some(t) = last_s {
                    if !fits(&next_perm.inverse(), t) {
                        continue;
                    }
                }
                if self.nodes >= self.max_nodes {
                    *remaining.get_mut(&s).unwrap() += 1;
                    return Step::OutOfBudget;
                }
                self.nodes += 1;
                let mut next = prefix.clone();
                next.mul_letters(&c.letters);
                self.chosen.push((s, idx));
                match self.run(remaining, &next, &next_perm) {
                    Step::Found => {
                        *remaining.get_mut(&s).unwrap() += 1;
                        return Step::Found;
                    }
                    Step::OutOfBudget => {
                        *remaining.get_mut(&s).unwrap() += 1;
                        return Step::OutOfBudget;
                    }
                    Step::Exhausted => {
                        self.chosen.pop();
                    }
                }
            }
            *remaining.get_mut(&s).unwrap() += 1;
        }
        Step::Exhausted
    }
}

/// Searches for a cuspidal factorization of the full twist on `d` strands
/// whose exponents form the multiset `profile`.
pub fn search_factorization(d: usize, profile: &[i64], limits: SearchLimits) -> Result<SearchOutcome> {
    if d == 0 {
        return Err(Error::NoStrands);
    }
    if d > limits.max_strands {
        return Err(Error::CapExceeded { what: "strand count", cap: limits.max_strands });
    }
    if let Some(&bad) = profile.iter().find(|s| !(1..=3).contains(*s)) {
        return Err(Error::BadExponent(bad));
    }
    if profile.iter().sum::<i64>() != (d * (d - 1)) as i64 {
        return Ok(SearchOutcome::NoneWithinBounds);
    }
    if profile.is_empty() {
        // Only d = 1 gets here; the empty product is the (trivial) full twist.
        return Ok(SearchOutcome::Found(Factorization::cuspidal(d, Vec::new())?));
    }

    let words = conjugator_words(d, limits.max_conjugator_length);
    let mut remaining: BTreeMap<u8, usize> = BTreeMap::new();
    for &s in profile {
        *remaining.entry(s as u8).or_default() += 1;
    }
    let pools: BTreeMap<u8, Pool> = remaining.keys().map(|&s| (s, pool(d, s, &words))).collect();

    let mut dfs = Dfs {
        d,
        pools: &pools,
        twist: CanonicalForm::from_word(&full_twist(d)?),
        nodes: 0,
        max_nodes: limits.max_nodes,
        chosen: Vec::new(),
    };
    let start = CanonicalForm::identity(d);
    match dfs.run(&mut remaining, &start, &Permutation::identity(d)) {
        Step::Found => {
            let factors = dfs
                .chosen
                .iter()
                .map(|&(s, idx)| CuspidalFactor { rho: pools[&s].candidates[idx].rho.clone(), s })
                .collect();
            let f = Factorization::cuspidal(dfs.d, factors)?;
            debug_assert!(f.validate().is_valid());
            Ok(SearchOutcome::Found(f))
        }
        Step::Exhausted => Ok(SearchOutcome::NoneWithinBounds),
        Step::OutOfBudget => Ok(SearchOutcome::BudgetExceeded { nodes: dfs.nodes }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn found(o: SearchOutcome) -> Factorization {
        match o {
            SearchOutcome::Found(f) => f,
            other => panic!("expected a factorization, got {other:?}"),
        }
    }

    #[test]
    fn conic() {
        let f = found(search_factorization(2, &[1, 1], SearchLimits::default()).unwrap());
        let fs = f.cuspidal_factors().unwrap();
        assert!(fs.iter().all(|c| c.rho().is_empty() && c.s() == 1));
    }

    #[test]
    fn cuspidal_cubic() {
        let limits = SearchLimits { max_conjugator_length: 4, ..SearchLimits::default() };
        let f = found(search_factorization(3, &[3, 1, 1, 1], limits).unwrap());
        assert!(f.validate().is_valid());
        let c = f.counts().unwrap();
        assert_eq!((c.n1, c.n2, c.n3), (3, 0, 1));
    }

    #[test]
    fn six_branch_points() {
        let limits = SearchLimits { max_conjugator_length: 2, ..SearchLimits::default() };
        let f = found(search_factorization(3, &[1; 6], limits).unwrap());
        let rep = f.validate();
        assert!(rep.is_valid());
        assert_eq!(rep.counts.unwrap().n1, 6);
    }

    #[test]
    fn exponent_obstruction() {
        let limits = SearchLimits::default();
        assert_eq!(search_factorization(3, &[1; 5], limits).unwrap(), SearchOutcome::NoneWithinBounds);
        assert_eq!(search_factorization(3, &[2, 1, 1, 1], limits).unwrap(), SearchOutcome::NoneWithinBounds);
        assert_eq!(search_factorization(3, &[4, 1, 1], limits), Err(Error::BadExponent(4)));
        assert!(search_factorization(5, &[1; 20], limits).is_err());
    }

    #[test]
    fn budget_is_reported_distinctly() {
        let limits = SearchLimits { max_conjugator_length: 4, max_nodes: 3, max_strands: 4 };
        assert!(matches!(search_factorization(3, &[1; 6], limits).unwrap(), SearchOutcome::BudgetExceeded { .. }));
    }

    #[test]
    fn search_is_deterministic() {
        let limits = SearchLimits { max_conjugator_length: 3, ..SearchLimits::default() };
        let a = search_factorization(3, &[2, 1, 1, 1, 1], limits).unwrap();
        let b = search_factorization(3, &[1, 2, 1, 1, 1], limits).unwrap();
        assert_eq!(a, b);
        assert!(found(a).validate().is_valid());
    }
}
