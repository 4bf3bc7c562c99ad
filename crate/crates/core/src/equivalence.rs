//! Semi-deciding "same braid factorization type": Hurwitz moves followed by
//! one simultaneous conjugation.
//!
//! Negative answers come from [`Fingerprint`] fields, each invariant under
//! both operations. Positive answers come from a breadth-first search of the
//! Hurwitz orbit of the first factorization, matched against the second one
//! conjugated back by every conjugator up to a length bound. Anything else
//! is inconclusive.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{canonical_form, summit_key, BraidWord, CanonicalForm};
use crate::error::{Error, Result};
use crate::factorization::{Direction, Factorization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FingerprintField {
    FactorCount,
    ExponentSum,
    SMultiset,
    FactorExponents,
    CycleTypes,
    ConjugacyKeys,
}

impl FingerprintField {
    pub fn name(self) -> &'static str {
        match self {
            FingerprintField::FactorCount => "factor_count",
            FingerprintField::ExponentSum => "exponent_sum",
            FingerprintField::SMultiset => "s_multiset",
            FingerprintField::FactorExponents => "factor_exponents",
            FingerprintField::CycleTypes => "cycle_types",
            FingerprintField::ConjugacyKeys => "conjugacy_keys",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            FingerprintField::FactorCount,
            FingerprintField::ExponentSum,
            FingerprintField::SMultiset,
            FingerprintField::FactorExponents,
            FingerprintField::CycleTypes,
            FingerprintField::ConjugacyKeys,
        ]
        .into_iter()
        .find(|f| f.name() == name)
    }
}

impl fmt::Display for FingerprintField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Invariants of a factorization under Hurwitz moves and simultaneous
/// conjugation. Multisets are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub strands: usize,
    pub factor_count: usize,
    pub exponent_sum: i64,
    /// Cuspidal factorizations only.
    pub s_multiset: Option<Vec<u8>>,
    pub factor_exponents: Vec<i64>,
    pub cycle_types: Vec<Vec<usize>>,
    /// Least super summit element of each factor; `None` entries ran out of budget.
    pub conjugacy_keys: Option<Vec<Option<CanonicalForm>>>,
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    let parts: Vec<String> = items.iter().map(|x| format!("{x}")).collect();
    parts.join(sep)
}

fn cycle_type(t: &[usize]) -> String {
    if t.is_empty() {
        String::from("-")
    } else {
        join(t, ",")
    }
}

impl Fingerprint {
    /// The value of one field, rendered for reports: multisets of numbers
    /// space separated, cycle types like `3,1;2` (`-` for the identity),
    /// conjugacy keys as bracketed words separated by `;`.
    pub fn render(&self, field: FingerprintField) -> String {
        match field {
            FingerprintField::FactorCount => format!("{}", self.factor_count),
            FingerprintField::ExponentSum => format!("{}", self.exponent_sum),
            FingerprintField::SMultiset => match &self.s_multiset {
                Some(s) => join(s, " "),
                None => String::from("none"),
            },
            FingerprintField::FactorExponents => join(&self.factor_exponents, " "),
            FingerprintField::CycleTypes => {
                let parts: Vec<String> = self.cycle_types.iter().map(|t| cycle_type(t)).collect();
                parts.join(";")
            }
            FingerprintField::ConjugacyKeys => match &self.conjugacy_keys {
                Some(keys) => {
                    let parts: Vec<String> = keys
                        .iter()
                        .map(|k| match k {
                            Some(c) => format!("[{}]", c.to_word()),
                            None => String::from("unknown"),
                        })
                        .collect();
                    parts.join(";")
                }
                None => String::from("none"),
            },
        }
    }

    /// The first field whose values differ, skipping fields that are absent
    /// or incomplete on either side.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<FingerprintField> {
        if self.factor_count != other.factor_count {
            return Some(FingerprintField::FactorCount);
        }
        if self.exponent_sum != other.exponent_sum {
            return Some(FingerprintField::ExponentSum);
        }
        if let (Some(a), Some(b)) = (&self.s_multiset, &other.s_multiset) {
            if a != b {
                return Some(FingerprintField::SMultiset);
            }
        }
        if self.factor_exponents != other.factor_exponents {
            return Some(FingerprintField::FactorExponents);
        }
        if self.cycle_types != other.cycle_types {
            return Some(FingerprintField::CycleTypes);
        }
        if let (Some(a), Some(b)) = (&self.conjugacy_keys, &other.conjugacy_keys) {
            let complete = a.iter().chain(b.iter()).all(Option::is_some);
            if complete && a != b {
                return Some(FingerprintField::ConjugacyKeys);
            }
        }
        None
    }
}

/// Fingerprint of a validated factorization. With `key_budget`, each factor
/// also gets a conjugacy-class key computed within that budget.
pub fn fingerprint_with_keys(f: &Factorization, key_budget: Option<usize>) -> Result<Fingerprint> {
    if !f.validate().is_valid() {
        return Err(Error::NotValidated);
    }
    let words = f.factor_words();
    let mut factor_exponents: Vec<i64> = words.iter().map(BraidWord::exponent_sum).collect();
    factor_exponents.sort_unstable();
    let mut cycle_types: Vec<Vec<usize>> = words.iter().map(|w| w.permutation().cycle_type()).collect();
    cycle_types.sort();
    let s_multiset = f.cuspidal_factors().map(|fs| {
        let mut s: Vec<u8> = fs.iter().map(|c| c.s()).collect();
        s.sort_unstable();
        s
    });
    let conjugacy_keys = key_budget.map(|b| {
        let mut keys: Vec<Option<CanonicalForm>> = words.iter().map(|w| summit_key(w, b)).collect();
        keys.sort();
        keys
    });
    Ok(Fingerprint {
        strands: f.strands(),
        factor_count: words.len(),
        exponent_sum: factor_exponents.iter().sum(),
        s_multiset,
        factor_exponents,
        cycle_types,
        conjugacy_keys,
    })
}

pub fn fingerprint(f: &Factorization) -> Result<Fingerprint> {
    fingerprint_with_keys(f, None)
}

/// The tuple of factor normal forms; equal keys mean equal factor tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitKey(Vec<CanonicalForm>);

impl OrbitKey {
    pub fn factors(&self) -> &[CanonicalForm] {
        &self.0
    }
}

pub fn canonical_key(f: &Factorization) -> OrbitKey {
    OrbitKey(f.factor_words().iter().map(canonical_form).collect())
}

/// Hurwitz moves on a tuple of normal forms, mirroring
/// [`Factorization::hurwitz_move`].
fn move_key(key: &OrbitKey, i: usize, direction: Direction) -> OrbitKey {
    let mut out = key.0.clone();
    let (a, b) = (key.0[i - 1].to_word(), key.0[i].to_word());
    match direction {
        Direction::Right => {
            let w = a.compose(&b).unwrap().compose(&a.inverse()).unwrap();
            out[i - 1] = canonical_form(&w);
            out[i] = key.0[i - 1].clone();
        }
        Direction::Left => {
            let w = b.inverse().compose(&a).unwrap().compose(&b).unwrap();
            out[i - 1] = key.0[i].clone();
            out[i] = canonical_form(&w);
        }
    }
    OrbitKey(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceBudget {
    pub max_states: usize,
    /// Longest allowed flattened normal form of a factor; `None` means twice
    /// the longest factor of either input.
    pub max_factor_nf_length: Option<usize>,
    pub conjugator_length_bound: usize,
    /// Per-factor budget for conjugacy keys in the fingerprint; `None` skips them.
    pub conjugacy_key_budget: Option<usize>,
}

impl Default for EquivalenceBudget {
    fn default() -> Self {
        Self { max_states: 20_000, max_factor_nf_length: None, conjugator_length_bound: 2, conjugacy_key_budget: None }
    }
}

/// Moves (one-based index, direction) applied in order, then one simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalencePath {
    pub moves: Vec<(usize, Direction)>,
    pub conjugator: BraidWord,
}

impl EquivalencePath {
    pub fn replay(&self, f: &Factorization) -> Result<Factorization> {
        let mut g = f.clone();
        for &(i, dir) in &self.moves {
            g = g.hurwitz_move(i, dir)?;
        }
        g.conjugate_all(&self.conjugator)
    }

    /// Whether replaying on `from` reproduces `to` factor by factor.
    pub fn verify(&self, from: &Factorization, to: &Factorization) -> Result<bool> {
        let g = self.replay(from)?;
        Ok(canonical_key(&g) == canonical_key(to))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equivalent(EquivalencePath),
    Distinguished { field: FingerprintField, left: String, right: String },
    Inconclusive { states_visited: usize, states_pruned: usize, conjugators: usize },
}

/// Freely reduced words up to `max_len`, shortlex, deduplicated as braids.
fn conjugators(d: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..d as i32).flat_map(|i| [i, -i]).collect();
    let mut seen = BTreeMap::new();
    let mut layer = alloc::vec![Vec::<i32>::new()];
    let mut out = Vec::new();
    for len in 0..=max_len {
        if len > 0 {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &alphabet {
                    if w.last() != Some(&-l) {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        for w in &layer {
            let word = BraidWord::new(d, w.clone()).expect("letters in range");
            let nf = canonical_form(&word);
            if let alloc::collections::btree_map::Entry::Vacant(e) = seen.entry(nf) {
                e.insert(());
                out.push(word);
            }
        }
    }
    out
}

struct Node {
    key: OrbitKey,
    parent: Option<(usize, usize, Direction)>,
}

fn path_to(nodes: &[Node], mut idx: usize) -> Vec<(usize, Direction)> {
    let mut moves = Vec::new();
    while let Some((parent, i, dir)) = nodes[idx].parent {
        moves.push((i, dir));
        idx = parent;
    }
    moves.reverse();
    moves
}

/// Decides, within `budget`, whether `f2` is obtained from `f1` by Hurwitz
/// moves followed by a simultaneous conjugation.
///
/// Moves are explored breadth first in the order `(1, left), (1, right),
/// (2, left), …`, so reported paths are shortest and reproducible.
pub fn decide_equivalence(
    f1: &Factorization,
    f2: &Factorization,
    budget: &EquivalenceBudget,
) -> Result<EquivalenceVerdict> {
    if f1.strands() != f2.strands() {
        return Err(Error::StrandMismatch { left: f1.strands(), right: f2.strands() });
    }
    if f1.target_form() != f2.target_form() {
        return Err(Error::TargetMismatch);
    }
    if budget.max_states == 0 || budget.max_factor_nf_length == Some(0) || budget.conjugacy_key_budget == Some(0) {
        return Err(Error::ZeroBudget);
    }
    let fp1 = fingerprint_with_keys(f1, budget.conjugacy_key_budget)?;
    let fp2 = fingerprint_with_keys(f2, budget.conjugacy_key_budget)?;
    if let Some(field) = fp1.first_difference(&fp2) {
        return Ok(EquivalenceVerdict::Distinguished { field, left: fp1.render(field), right: fp2.render(field) });
    }

    let d = f1.strands();
    let start = canonical_key(f1);
    let goal = canonical_key(f2);
    let max_len = budget.max_factor_nf_length.unwrap_or_else(|| {
        2 * start.0.iter().chain(goal.0.iter()).map(CanonicalForm::word_len).max().unwrap_or(0).max(1)
    });

    // f2 = conj(g, z)  <=>  g = conj(f2, z⁻¹)
    let zs = conjugators(d, budget.conjugator_length_bound);
    let mut targets: BTreeMap<OrbitKey, usize> = BTreeMap::new();
    for (k, z) in zs.iter().enumerate() {
        let back = f2.conjugate_all(&z.inverse())?;
        targets.entry(canonical_key(&back)).or_insert(k);
    }

    let r = f1.len();
    let mut nodes = alloc::vec![Node { key: start.clone(), parent: None }];
    let mut index: BTreeMap<OrbitKey, usize> = BTreeMap::new();
    index.insert(start, 0);
    let mut pruned = 0;
    let mut head = 0;
    let found = loop {
        if let Some(&z) = targets.get(&nodes[head].key) {
            break Some((head, z));
        }
        if nodes.len() < budget.max_states {
            for i in 1..r {
                for dir in [Direction::Left, Direction::Right] {
                    if nodes.len() >= budget.max_states {
                        break;
                    }
                    let next = move_key(&nodes[head].key, i, dir);
                    if index.contains_key(&next) {
                        continue;
                    }
                    if next.0.iter().any(|c| c.word_len() > max_len) {
                        pruned += 1;
                        continue;
                    }
                    index.insert(next.clone(), nodes.len());
                    nodes.push(Node { key: next, parent: Some((head, i, dir)) });
                }
            }
        }
        head += 1;
        if head == nodes.len() {
            break None;
        }
    };

    if let Some((idx, z)) = found {
        let path = EquivalencePath { moves: path_to(&nodes, idx), conjugator: zs[z].clone() };
        if path.verify(f1, f2)? {
            return Ok(EquivalenceVerdict::Equivalent(path));
        }
    }
    Ok(EquivalenceVerdict::Inconclusive { states_visited: nodes.len(), states_pruned: pruned, conjugators: zs.len() })
}

/// Size of the Hurwitz orbit of `f` (as factor tuples), if it is at most
/// `max_states` and no factor exceeds `max_factor_nf_length`.
pub fn orbit_size(f: &Factorization, max_states: usize, max_factor_nf_length: usize) -> Option<usize> {
    let start = canonical_key(f);
    let mut seen = BTreeMap::new();
    seen.insert(start.clone(), ());
    let mut queue = alloc::collections::VecDeque::from([start]);
    while let Some(k) = queue.pop_front() {
        for i in 1..f.len() {
            for dir in [Direction::Left, Direction::Right] {
                let next = move_key(&k, i, dir);
                if seen.contains_key(&next) {
                    continue;
                }
                if next.0.iter().any(|c| c.word_len() > max_factor_nf_length) || seen.len() >= max_states {
                    return None;
                }
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}
