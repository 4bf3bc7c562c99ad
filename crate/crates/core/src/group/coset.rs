//! Coset enumeration over the trivial subgroup (HLT strategy with a
//! scan-only lookahead when the live-coset budget is reached).

use alloc::vec::Vec;

use super::presentation::FinitePresentation;
use crate::braid::Permutation;

const NONE: usize = usize::MAX;

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    max_live: usize,
    max_rows: usize,
    relators: Vec<Vec<usize>>,
}

#[derive(Debug)]
struct OutOfBudget;

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

impl Enumerator {
    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), OutOfBudget> {
        if self.live >= self.max_live {
            self.lookahead();
            if self.live >= self.max_live {
                return Err(OutOfBudget);
            }
        }
        if self.table.len() >= self.max_rows || !self.is_live(c) || self.table[c][x] != NONE {
            // the lookahead may already have filled or killed this slot
            return if self.table.len() >= self.max_rows { Err(OutOfBudget) } else { Ok(()) };
        }
        let new = self.table.len();
        self.table.push(alloc::vec![NONE; self.cols]);
        self.parent.push(new);
        self.table[c][x] = new;
        self.table[new][x ^ 1] = c;
        self.live += 1;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.table[g][x];
                if d == NONE {
                    continue;
                }
                self.table[d][x ^ 1] = NONE;
                let (mu, nu) = (self.rep(g), self.rep(d));
                if self.table[mu][x] != NONE {
                    let t = self.table[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.table[nu][x ^ 1] != NONE {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
    }

    /// Scans relator `r` at coset `alpha`; defines new cosets only when `fill`.
    fn scan(&mut self, alpha: usize, r: usize, fill: bool) -> Result<(), OutOfBudget> {
        let word = self.relators[r].clone();
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0usize, word.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][word[i]] != NONE {
                f = self.table[f][word[i]];
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][word[j as usize] ^ 1] != NONE {
                b = self.table[b][word[j as usize] ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if i as isize == j {
                self.table[f][word[i]] = b;
                self.table[b][word[i] ^ 1] = f;
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, word[i])?;
            if !self.is_live(alpha) {
                return Ok(());
            }
            // restart from the (possibly merged) endpoints
            f = self.rep(f);
            b = self.rep(b);
        }
    }

    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.table.len() {
            if self.is_live(c) {
                for r in 0..self.relators.len() {
                    let _ = self.scan(c, r, false);
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
    }

    fn run(&mut self) -> Result<(), OutOfBudget> {
        let mut alpha = 0;
        while alpha < self.table.len() {
            if self.is_live(alpha) {
                for r in 0..self.relators.len() {
                    self.scan(alpha, r, true)?;
                    if !self.is_live(alpha) {
                        break;
                    }
                }
                if self.is_live(alpha) {
                    for x in 0..self.cols {
                        if self.table[alpha][x] == NONE {
                            self.define(alpha, x)?;
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }
}

/// A complete coset table of the trivial subgroup: the regular permutation
/// representation of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// For each generator, its action on the cosets `0..order`.
    pub generators: Vec<Permutation>,
    pub order: usize,
}

/// Enumerates the cosets of the trivial subgroup with at most `budget` live cosets.
pub fn coset_table(p: &FinitePresentation, budget: usize) -> Option<CosetTable> {
    if budget == 0 {
        return None;
    }
    let cols = 2 * p.generators();
    let relators = p.relators().iter().map(|r| r.letters().iter().map(|&l| column(l)).collect()).collect();
    let mut e = Enumerator {
        cols,
        table: alloc::vec![alloc::vec![NONE; cols]],
        parent: alloc::vec![0],
        live: 1,
        max_live: budget,
        max_rows: budget.saturating_mul(8).saturating_add(64),
        relators,
    };
    e.run().ok()?;

    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.is_live(c)).collect();
    let mut index = alloc::vec![NONE; e.table.len()];
    for (k, &c) in live.iter().enumerate() {
        index[c] = k;
    }
    let mut generators = Vec::with_capacity(p.generators());
    for g in 0..p.generators() {
        let mut images = Vec::with_capacity(live.len());
        for &c in &live {
            let t = e.table[c][2 * g];
            let t = e.rep(t);
            images.push(index[t]);
        }
        generators.push(Permutation::from_images(images).ok()?);
    }
    Some(CosetTable { generators, order: live.len() })
}

/// Order of the presented group, or `None` if enumeration did not finish
/// within `budget` live cosets.
pub fn group_order(p: &FinitePresentation, budget: usize) -> Option<usize> {
    coset_table(p, budget).map(|t| t.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::free::FreeWord;
    use crate::group::homs::{evaluate, generated_order};

    fn pres(g: usize, rels: &[&[i32]]) -> FinitePresentation {
        FinitePresentation::new(g, rels.iter().map(|r| FreeWord::new(r.to_vec()).unwrap()).collect()).unwrap()
    }

    fn check_table(p: &FinitePresentation, budget: usize) -> usize {
        let t = coset_table(p, budget).expect("finite");
        // the regular representation has as many elements as cosets,
        // and every relator acts trivially
        assert_eq!(generated_order(&t.generators, t.order), t.order);
        for r in p.relators() {
            assert!(evaluate(r, &t.generators, t.order).is_identity());
        }
        t.order
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(group_order(&pres(1, &[&[1]]), 10), Some(1));
        assert_eq!(check_table(&pres(1, &[&[1, 1]]), 10), 2);
        assert_eq!(check_table(&pres(1, &[&[1, 1, 1, 1, 1, 1, 1]]), 100), 7);
    }

    #[test]
    fn dihedral_and_symmetric() {
        // S_3 = ⟨a, b | a², b², (ab)³⟩
        assert_eq!(check_table(&pres(2, &[&[1, 1], &[2, 2], &[1, 2, 1, 2, 1, 2]]), 100), 6);
        // S_4 as a Coxeter group
        let s4 = pres(3, &[&[1, 1], &[2, 2], &[3, 3], &[1, 2, 1, 2, 1, 2], &[2, 3, 2, 3, 2, 3], &[1, 3, 1, 3]]);
        assert_eq!(check_table(&s4, 1000), 24);
    }

    #[test]
    fn quaternion_and_binary_groups() {
        // Q_8 = ⟨a, b | a⁴, a²b⁻², b⁻¹aba⟩
        let q8 = pres(2, &[&[1, 1, 1, 1], &[1, 1, -2, -2], &[-2, 1, 2, 1]]);
        assert_eq!(check_table(&q8, 100), 8);
        // ⟨a, b | aba = bab, a³⟩ is the binary tetrahedral group SL(2, 3)
        let g = pres(2, &[&[1, 2, 1, -2, -1, -2], &[1, 1, 1]]);
        assert_eq!(check_table(&g, 1000), 24);
        // with (ab)⁴ instead, x = aba and y = ab satisfy x² = y³ = y⁻¹: cyclic of order 8
        let g = pres(2, &[&[1, 2, 1, -2, -1, -2], &[1, 2, 1, 2, 1, 2, 1, 2]]);
        assert_eq!(check_table(&g, 1000), 8);
    }

    #[test]
    fn zero_generators() {
        assert_eq!(group_order(&pres(0, &[]), 5), Some(1));
    }

    #[test]
    fn infinite_groups_exhaust_the_budget() {
        assert_eq!(group_order(&pres(1, &[]), 50), None);
        assert_eq!(group_order(&pres(2, &[&[1, 2, -1, -2]]), 200), None);
        assert_eq!(group_order(&pres(1, &[&[1, 1]]), 0), None);
    }
}
