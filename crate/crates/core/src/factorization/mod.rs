//! Braid monodromy factorizations of a target braid, normally the full twist.
//!
//! A cuspidal factorization is an ordered list of pairs `(ρ, s)`, each
//! standing for the factor `ρ⁻¹ X_1^s ρ`; `s = 1, 2, 3` record a branch
//! point, a node and a cusp. A general factorization is an ordered list of
//! arbitrary braid words.

mod search;

use alloc::vec::Vec;
use core::fmt;

use crate::braid::{canonical_form, full_twist, BraidWord, CanonicalForm};
use crate::error::{Error, Result};

pub use search::{search_factorization, SearchLimits, SearchOutcome};

/// The pair `(ρ, s)` standing for `ρ⁻¹ X_1^s ρ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalFactor {
    rho: BraidWord,
    s: u8,
}

impl CuspidalFactor {
    pub fn new(rho: BraidWord, s: i64) -> Result<Self> {
        if !(1..=3).contains(&s) {
            return Err(Error::BadExponent(s));
        }
        if rho.strands() < 2 {
            // X_1 needs two strands.
            return Err(Error::LetterOutOfRange { letter: 1, strands: rho.strands() });
        }
        Ok(Self { rho, s: s as u8 })
    }

    pub fn rho(&self) -> &BraidWord {
        &self.rho
    }

    pub fn s(&self) -> u8 {
        self.s
    }

    /// `ρ⁻¹ · X_1^s · ρ`.
    pub fn word(&self) -> BraidWord {
        let d = self.rho.strands();
        let mut letters = self.rho.inverse().letters().to_vec();
        letters.extend(core::iter::repeat_n(1, self.s as usize));
        letters.extend_from_slice(self.rho.letters());
        BraidWord::new(d, letters).expect("letters already validated")
    }
}

pub fn factor_word(f: &CuspidalFactor) -> BraidWord {
    f.word()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factors {
    Cuspidal(Vec<CuspidalFactor>),
    General(Vec<BraidWord>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    FullTwist,
    Word(BraidWord),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

impl core::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            other => Err(Error::Parse { what: "direction", detail: other.into() }),
        }
    }
}

/// Numbers of branch points (`s = 1`), nodes (`s = 2`) and cusps (`s = 3`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SingularityCounts {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl SingularityCounts {
    pub fn weighted_total(&self) -> usize {
        self.n1 + 2 * self.n2 + 3 * self.n3
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// The product of the factors equals the target.
    pub product_ok: bool,
    /// The exponent sums of factors and target agree (`Σ s = d(d-1)` for the full twist).
    pub exponent_ok: bool,
    pub counts: Option<SingularityCounts>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.product_ok && self.exponent_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    strands: usize,
    factors: Factors,
    target: Target,
}

impl Factorization {
    pub fn cuspidal(strands: usize, factors: Vec<CuspidalFactor>) -> Result<Self> {
        Self::new(strands, Factors::Cuspidal(factors), Target::FullTwist)
    }

    pub fn general(strands: usize, factors: Vec<BraidWord>) -> Result<Self> {
        Self::new(strands, Factors::General(factors), Target::FullTwist)
    }

    pub fn new(strands: usize, factors: Factors, target: Target) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        let check = |d: usize| {
            if d == strands {
                Ok(())
            } else {
                Err(Error::StrandMismatch { left: strands, right: d })
            }
        };
        match &factors {
            Factors::Cuspidal(fs) => fs.iter().try_for_each(|f| check(f.rho.strands()))?,
            Factors::General(ws) => ws.iter().try_for_each(|w| check(w.strands()))?,
        }
        if let Target::Word(t) = &target {
            check(t.strands())?;
        }
        Ok(Self { strands, factors, target })
    }

    pub fn with_target(mut self, target: Target) -> Result<Self> {
        if let Target::Word(t) = &target {
            if t.strands() != self.strands {
                return Err(Error::StrandMismatch { left: self.strands, right: t.strands() });
            }
        }
        self.target = target;
        Ok(self)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &Factors {
        &self.factors
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn len(&self) -> usize {
        match &self.factors {
            Factors::Cuspidal(fs) => fs.len(),
            Factors::General(ws) => ws.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_cuspidal(&self) -> bool {
        matches!(self.factors, Factors::Cuspidal(_))
    }

    pub fn cuspidal_factors(&self) -> Option<&[CuspidalFactor]> {
        match &self.factors {
            Factors::Cuspidal(fs) => Some(fs),
            Factors::General(_) => None,
        }
    }

    pub fn factor_words(&self) -> Vec<BraidWord> {
        match &self.factors {
            Factors::Cuspidal(fs) => fs.iter().map(CuspidalFactor::word).collect(),
            Factors::General(ws) => ws.clone(),
        }
    }

    pub fn target_word(&self) -> BraidWord {
        match &self.target {
            Target::FullTwist => full_twist(self.strands).expect("strands >= 1"),
            Target::Word(w) => w.clone(),
        }
    }

    pub fn target_form(&self) -> CanonicalForm {
        canonical_form(&self.target_word())
    }

    pub fn product(&self) -> BraidWord {
        let letters = self.factor_words().iter().flat_map(|w| w.letters().to_vec()).collect();
        BraidWord::new(self.strands, letters).expect("factors share the strand count")
    }

    pub fn counts(&self) -> Option<SingularityCounts> {
        let fs = self.cuspidal_factors()?;
        let mut c = SingularityCounts::default();
        for f in fs {
            match f.s {
                1 => c.n1 += 1,
                2 => c.n2 += 1,
                _ => c.n3 += 1,
            }
        }
        Some(c)
    }

    /// Runs every check and reports all results.
    pub fn validate(&self) -> ValidationReport {
        let product_ok = canonical_form(&self.product()) == self.target_form();
        let target_exp = self.target_word().exponent_sum();
        let exponent_ok = match &self.factors {
            Factors::Cuspidal(fs) => fs.iter().map(|f| f.s as i64).sum::<i64>() == target_exp,
            Factors::General(ws) => ws.iter().map(BraidWord::exponent_sum).sum::<i64>() == target_exp,
        };
        ValidationReport { product_ok, exponent_ok, counts: self.counts() }
    }

    /// Hurwitz move at the one-based position `i` (acting on factors `i`, `i+1`).
    ///
    /// `Right`: `(g_i, g_{i+1}) ↦ (g_i g_{i+1} g_i⁻¹, g_i)`;
    /// `Left`: `(g_i, g_{i+1}) ↦ (g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1})`.
    /// A transported cuspidal factor keeps its `s` and gets the conjugator
    /// `ρ · g_i⁻¹` (right) or `ρ · g_{i+1}` (left).
    pub fn hurwitz_move(&self, i: usize, direction: Direction) -> Result<Factorization> {
        let r = self.len();
        if i == 0 || i >= r {
            return Err(Error::IndexOutOfRange { index: i, len: r });
        }
        let (a, b) = (i - 1, i);
        let mut out = self.clone();
        match &mut out.factors {
            Factors::Cuspidal(fs) => {
                let (fa, fb) = (fs[a].clone(), fs[b].clone());
                match direction {
                    Direction::Right => {
                        let rho = fb.rho.compose(&fa.word().inverse())?.free_reduce();
                        fs[a] = CuspidalFactor { rho, s: fb.s };
                        fs[b] = fa;
                    }
                    Direction::Left => {
                        let rho = fa.rho.compose(&fb.word())?.free_reduce();
                        fs[a] = fb;
                        fs[b] = CuspidalFactor { rho, s: fa.s };
                    }
                }
            }
            Factors::General(ws) => {
                let (ga, gb) = (ws[a].clone(), ws[b].clone());
                match direction {
                    Direction::Right => {
                        ws[a] = gb.conjugate(&ga.inverse())?.free_reduce();
                        ws[b] = ga;
                    }
                    Direction::Left => {
                        ws[a] = gb.clone();
                        ws[b] = ga.conjugate(&gb)?.free_reduce();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Simultaneous conjugation of every factor (and an explicit target) by `z`.
    pub fn conjugate_all(&self, z: &BraidWord) -> Result<Factorization> {
        if z.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: z.strands() });
        }
        let factors = match &self.factors {
            Factors::Cuspidal(fs) => Factors::Cuspidal(
                fs.iter().map(|f| CuspidalFactor { rho: f.rho.compose(z).unwrap().free_reduce(), s: f.s }).collect(),
            ),
            Factors::General(ws) => {
                Factors::General(ws.iter().map(|w| w.conjugate(z).unwrap().free_reduce()).collect())
            }
        };
        let target = match &self.target {
            Target::FullTwist => Target::FullTwist,
            Target::Word(t) => Target::Word(t.conjugate(z)?),
        };
        Ok(Factorization { strands: self.strands, factors, target })
    }

    /// Forgets the `(ρ, s)` structure.
    pub fn to_general(&self) -> Factorization {
        Factorization {
            strands: self.strands,
            factors: Factors::General(self.factor_words()),
            target: self.target.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::equals;

    fn w(d: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(d, l.to_vec()).unwrap()
    }

    fn cf(d: usize, rho: &[i32], s: i64) -> CuspidalFactor {
        CuspidalFactor::new(w(d, rho), s).unwrap()
    }

    #[test]
    fn factor_words() {
        assert_eq!(cf(3, &[], 1).word().letters(), [1]);
        assert_eq!(cf(3, &[], 3).word().letters(), [1, 1, 1]);
        assert_eq!(cf(3, &[2], 1).word().letters(), [-2, 1, 2]);
        assert_eq!(CuspidalFactor::new(w(3, &[]), 4), Err(Error::BadExponent(4)));
        assert_eq!(CuspidalFactor::new(w(3, &[]), 0), Err(Error::BadExponent(0)));
    }

    #[test]
    fn conic_and_node() {
        let conic = Factorization::cuspidal(2, alloc::vec![cf(2, &[], 1), cf(2, &[], 1)]).unwrap();
        let rep = conic.validate();
        assert!(rep.product_ok && rep.exponent_ok);
        assert_eq!(rep.counts, Some(SingularityCounts { n1: 2, n2: 0, n3: 0 }));

        let node = Factorization::cuspidal(2, alloc::vec![cf(2, &[], 2)]).unwrap();
        let rep = node.validate();
        assert!(rep.is_valid());
        assert_eq!(rep.counts, Some(SingularityCounts { n1: 0, n2: 1, n3: 0 }));
    }

    #[test]
    fn failed_checks_are_reported_not_raised() {
        let bad = Factorization::cuspidal(3, alloc::vec![cf(3, &[], 3)]).unwrap();
        let rep = bad.validate();
        assert!(!rep.product_ok);
        assert!(!rep.exponent_ok);
        assert_eq!(rep.counts.unwrap().n3, 1);
    }

    #[test]
    fn right_move_on_pair() {
        let a = w(3, &[1, 2]);
        let b = w(3, &[-2, 1]);
        let f = Factorization::general(3, alloc::vec![a.clone(), b.clone()]).unwrap();
        let g = f.hurwitz_move(1, Direction::Right).unwrap();
        let ws = g.factor_words();
        assert!(equals(&ws[0], &a.compose(&b).unwrap().compose(&a.inverse()).unwrap()).unwrap());
        assert_eq!(ws[1], a);
        assert!(equals(&g.product(), &f.product()).unwrap());
        let back = g.hurwitz_move(1, Direction::Left).unwrap();
        for (x, y) in back.factor_words().iter().zip(f.factor_words().iter()) {
            assert!(equals(x, y).unwrap());
        }
    }

    #[test]
    fn equal_factors_are_fixed() {
        let conic = Factorization::cuspidal(2, alloc::vec![cf(2, &[], 1), cf(2, &[], 1)]).unwrap();
        let moved = conic.hurwitz_move(1, Direction::Right).unwrap();
        for x in moved.factor_words() {
            assert!(equals(&x, &w(2, &[1])).unwrap());
        }
        assert!(moved.validate().is_valid());
    }

    #[test]
    fn move_index_range() {
        let conic = Factorization::cuspidal(2, alloc::vec![cf(2, &[], 1), cf(2, &[], 1)]).unwrap();
        assert_eq!(conic.hurwitz_move(0, Direction::Left), Err(Error::IndexOutOfRange { index: 0, len: 2 }));
        assert_eq!(conic.hurwitz_move(2, Direction::Left), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
    }

    #[test]
    fn conjugation_keeps_counts_and_validity() {
        let f =
            Factorization::cuspidal(3, alloc::vec![cf(3, &[], 2), cf(3, &[2, 1], 1), cf(3, &[], 2), cf(3, &[2, 1], 1)])
                .unwrap();
        assert!(f.validate().is_valid());
        let z = w(3, &[2, -1, -1, 2]);
        let g = f.conjugate_all(&z).unwrap();
        assert!(g.validate().is_valid());
        assert_eq!(g.counts(), f.counts());
        assert_eq!(f.conjugate_all(&BraidWord::identity(3).unwrap()).unwrap(), f);
        assert!(f.conjugate_all(&w(4, &[1])).is_err());
    }

    #[test]
    fn explicit_targets_follow_conjugation() {
        let f = Factorization::general(3, alloc::vec![w(3, &[1]), w(3, &[2])])
            .unwrap()
            .with_target(Target::Word(w(3, &[1, 2])))
            .unwrap();
        assert!(f.validate().is_valid());
        let g = f.conjugate_all(&w(3, &[2, 2, -1])).unwrap();
        assert!(g.validate().is_valid());
    }
}
