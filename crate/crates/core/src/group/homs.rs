//! Homomorphisms from a finitely presented group to `S_n` by backtracking.
//!
//! Generators are assigned images in order; a relator is checked as soon as
//! all generators it mentions have images. Results come out in
//! lexicographic order of the image tuples (each permutation ordered by its
//! image list).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::free::FreeWord;
use super::presentation::FinitePresentation;
use crate::braid::Permutation;
use crate::error::{Error, Result};

/// Images of the generators of a presentation in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetricImage {
    pub n: usize,
    pub images: Vec<Permutation>,
    /// The images generate all of `S_n`.
    pub surjective: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomQuery {
    pub n: usize,
    /// Keep one representative (the least tuple) per simultaneous conjugacy class.
    pub up_to_conjugacy: bool,
    pub epi_only: bool,
    /// Keep only homomorphisms whose image acts transitively.
    pub transitive_only: bool,
    /// Require every generator to map to a transposition (generic local monodromy).
    pub transpositions_only: bool,
    pub max_degree: usize,
    pub max_generators: usize,
}

impl HomQuery {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            up_to_conjugacy: false,
            epi_only: false,
            transitive_only: false,
            transpositions_only: false,
            max_degree: 7,
            max_generators: 8,
        }
    }
}

/// All of `S_n` in lexicographic order of images.
pub(crate) fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(images.clone()).expect("bijection"));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
}

pub(crate) fn evaluate(word: &FreeWord, images: &[Permutation], n: usize) -> Permutation {
    let mut acc = Permutation::identity(n);
    for &l in word.letters() {
        let p = &images[l.unsigned_abs() as usize - 1];
        acc = if l > 0 { acc.then(p) } else { acc.then(&p.inverse()) };
    }
    acc
}

/// Order of the subgroup generated by `gens`, by closure.
pub(crate) fn generated_order(gens: &[Permutation], n: usize) -> usize {
    let mut seen = BTreeSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut frontier = alloc::vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

fn is_transitive(gens: &[Permutation], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = alloc::vec![false; n];
    seen[0] = true;
    let mut stack = alloc::vec![0];
    while let Some(i) = stack.pop() {
        for g in gens {
            for j in [g.apply(i), g.inverse().apply(i)] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    seen.iter().all(|&b| b)
}

fn is_surjective(gens: &[Permutation], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    if !is_transitive(gens, n) || !gens.iter().any(Permutation::is_odd) {
        return false;
    }
    let full: usize = (1..=n).product();
    generated_order(gens, n) == full
}

fn least_conjugate(images: &[Permutation], group: &[Permutation]) -> Vec<Permutation> {
    group
        .iter()
        .map(|g| images.iter().map(|p| p.conjugate_by(g)).collect::<Vec<_>>())
        .min()
        .unwrap_or_else(|| images.to_vec())
}

/// Enumerates homomorphisms `⟨P⟩ → S_n` subject to the query filters.
pub fn enumerate_homs(p: &FinitePresentation, query: &HomQuery) -> Result<Vec<SymmetricImage>> {
    let n = query.n;
    if n > query.max_degree {
        return Err(Error::CapExceeded { what: "symmetric degree", cap: query.max_degree });
    }
    if p.generators() > query.max_generators {
        return Err(Error::CapExceeded { what: "generator count", cap: query.max_generators });
    }
    let group = symmetric_group(n);
    let choices: Vec<Permutation> = if query.transpositions_only {
        group.iter().filter(|q| q.is_transposition()).cloned().collect()
    } else {
        group.clone()
    };
    // relators to check once generator k (one-based) is assigned
    let mut due: Vec<Vec<&FreeWord>> = alloc::vec![Vec::new(); p.generators() + 1];
    for r in p.relators() {
        due[r.max_generator()].push(r);
    }
    let identity = Permutation::identity(n);
    if due[0].iter().any(|r| !r.is_empty()) {
        // relators over no generators are empty after reduction
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut images: Vec<Permutation> = Vec::with_capacity(p.generators());
    fn go(
        k: usize,
        images: &mut Vec<Permutation>,
        choices: &[Permutation],
        due: &[Vec<&FreeWord>],
        n: usize,
        identity: &Permutation,
        out: &mut Vec<Vec<Permutation>>,
    ) {
        if k == due.len() - 1 {
            out.push(images.clone());
            return;
        }
        for c in choices {
            images.push(c.clone());
            if due[k + 1].iter().all(|r| evaluate(r, images, n) == *identity) {
                go(k + 1, images, choices, due, n, identity, out);
            }
            images.pop();
        }
    }
    go(0, &mut images, &choices, &due, n, &identity, &mut out);

    let mut result = Vec::new();
    for imgs in out {
        if query.transitive_only && !is_transitive(&imgs, n) {
            continue;
        }
        let surjective = is_surjective(&imgs, n);
        if query.epi_only && !surjective {
            continue;
        }
        if query.up_to_conjugacy && least_conjugate(&imgs, &group) != imgs {
            continue;
        }
        result.push(SymmetricImage { n, images: imgs, surjective });
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(l: &[i32]) -> FreeWord {
        FreeWord::new(l.to_vec()).unwrap()
    }

    fn conic() -> FinitePresentation {
        FinitePresentation::new(1, alloc::vec![fw(&[1, 1])]).unwrap()
    }

    fn epi(n: usize) -> HomQuery {
        HomQuery { up_to_conjugacy: true, epi_only: true, ..HomQuery::new(n) }
    }

    #[test]
    fn conic_group_epimorphisms() {
        let homs = enumerate_homs(&conic(), &epi(2)).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].images[0].is_transposition());
        assert!(enumerate_homs(&conic(), &epi(3)).unwrap().is_empty());
    }

    #[test]
    fn trivial_group_has_no_epimorphisms() {
        let trivial = FinitePresentation::new(1, alloc::vec![fw(&[1])]).unwrap();
        for n in 2..=5 {
            assert!(enumerate_homs(&trivial, &epi(n)).unwrap().is_empty());
        }
        // S_1 is trivial and the trivial map onto it is surjective.
        assert_eq!(enumerate_homs(&trivial, &epi(1)).unwrap().len(), 1);
    }

    #[test]
    fn free_group_counts() {
        let free2 = FinitePresentation::new(2, Vec::new()).unwrap();
        assert_eq!(enumerate_homs(&free2, &HomQuery::new(3)).unwrap().len(), 36);
        // Pairs generating S_3: 36 - 18 (both in one cyclic subgroup etc.) computed by closure.
        let all = enumerate_homs(&free2, &HomQuery::new(3)).unwrap();
        let epis = all.iter().filter(|h| h.surjective).count();
        assert_eq!(epis, 18);
        let classes = enumerate_homs(&free2, &epi(3)).unwrap();
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn caps() {
        assert!(enumerate_homs(&conic(), &HomQuery::new(8)).is_err());
        let big = FinitePresentation::new(9, Vec::new()).unwrap();
        assert!(enumerate_homs(&big, &HomQuery::new(2)).is_err());
    }

    #[test]
    fn transposition_filter() {
        let free1 = FinitePresentation::new(1, Vec::new()).unwrap();
        let q = HomQuery { transpositions_only: true, ..HomQuery::new(4) };
        assert_eq!(enumerate_homs(&free1, &q).unwrap().len(), 6);
        let q = HomQuery { transitive_only: true, ..HomQuery::new(3) };
        // only the two 3-cycles act transitively
        assert_eq!(enumerate_homs(&free1, &q).unwrap().len(), 2);
    }

    #[test]
    fn symmetric_group_sizes() {
        for n in 0..=5 {
            assert_eq!(symmetric_group(n).len(), (1..=n).product::<usize>());
        }
    }
}
