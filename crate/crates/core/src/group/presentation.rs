use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::free::{artin_images, FreeWord};
use crate::braid::{canonical_form, full_twist};
use crate::error::{Error, Result};
use crate::factorization::Factorization;

/// A finite presentation `⟨x_1, …, x_n | r_1, …⟩`.
///
/// Equality of presentations says nothing about isomorphism of groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePresentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

impl FinitePresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Result<Self> {
        if let Some(r) = relators.iter().find(|r| r.max_generator() > generators) {
            return Err(Error::LetterOutOfRange { letter: r.max_generator() as i32, strands: generators });
        }
        Ok(Self { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(FreeWord::len).sum()
    }
}

/// Text form: the generator count, then one relator per line.
impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generators)?;
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Zariski–van Kampen presentation of a cuspidal factorization of the full twist.
///
/// For a factor `(ρ, s)` let `a`, `b` be the images of `x_1`, `x_2` under the
/// Artin action of `ρ`. The factor contributes `a b⁻¹` (`s = 1`), the
/// commutator `a b a⁻¹ b⁻¹` (`s = 2`) or `a b a b⁻¹ a⁻¹ b⁻¹` (`s = 3`).
/// The projective relator `x_d ⋯ x_2 x_1` comes last.
pub fn zvk_presentation(f: &Factorization) -> Result<FinitePresentation> {
    let factors = f.cuspidal_factors().ok_or(Error::NotCuspidal)?;
    let d = f.strands();
    if f.target_form() != canonical_form(&full_twist(d)?) || !f.validate().is_valid() {
        return Err(Error::NotValidated);
    }
    let mut relators = Vec::with_capacity(factors.len() + 1);
    for factor in factors {
        let images = artin_images(factor.rho());
        let (a, b) = (&images[0], &images[1]);
        let (ai, bi) = (a.inverse(), b.inverse());
        let parts: Vec<&FreeWord> = match factor.s() {
            1 => alloc::vec![a, &bi],
            2 => alloc::vec![a, b, &ai, &bi],
            _ => alloc::vec![a, b, a, &bi, &ai, &bi],
        };
        relators.push(FreeWord::reduced(parts.iter().flat_map(|w| w.letters().to_vec())));
    }
    relators.push(FreeWord::reduced((1..=d as i32).rev()));
    FinitePresentation::new(d, relators)
}

/// Least rotation of `w` or its inverse; identifies relators that are
/// conjugate or inverse to each other.
fn cyclic_key(w: &FreeWord) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for v in [w.letters().to_vec(), w.inverse().letters().to_vec()] {
        for k in 0..v.len().max(1) {
            let mut rot = v[k.min(v.len())..].to_vec();
            rot.extend_from_slice(&v[..k.min(v.len())]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn tidy(relators: Vec<FreeWord>) -> Vec<FreeWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(cyclic_key(&r)) {
            out.push(r);
        }
    }
    out
}

struct Elimination {
    generator: usize,
    relator: usize,
    result: Vec<FreeWord>,
    total: usize,
}

/// Eliminates generator `g` (one-based) using relator `idx`, where it
/// occurs once, and renumbers the generators above `g` down by one.
fn eliminate(relators: &[FreeWord], generators: usize, g: usize, idx: usize) -> Vec<FreeWord> {
    let r = relators[idx].letters();
    let pos = r.iter().position(|l| l.unsigned_abs() as usize == g).unwrap();
    // rotate to x^e · rest, so x = rest⁻¹ (e = 1) or x = rest (e = -1)
    let rest = FreeWord::reduced(r[pos + 1..].iter().chain(r[..pos].iter()).copied());
    let value = if r[pos] > 0 { rest.inverse() } else { rest };
    let renumber: Vec<FreeWord> = (1..=generators)
        .map(|k| match k.cmp(&g) {
            core::cmp::Ordering::Less => FreeWord::generator(k as i32),
            core::cmp::Ordering::Equal => FreeWord::identity(),
            core::cmp::Ordering::Greater => FreeWord::generator(k as i32 - 1),
        })
        .collect();
    let mut images = renumber.clone();
    images[g - 1] = value.substitute(&renumber);
    relators.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, w)| w.substitute(&images)).collect()
}

/// Tietze simplification: cyclic reduction, removal of empty and repeated
/// relators, and elimination of generators that occur exactly once in some
/// relator. An elimination is taken when it does not increase the total
/// relator length or when the eliminated generator equals a single letter;
/// among admissible eliminations the shortest result wins, ties going to
/// the highest generator. The last generator is never eliminated, so cyclic
/// groups come out as `⟨x_1 | x_1^k⟩`. `budget` bounds the number of eliminations.
pub fn simplify(p: &FinitePresentation, budget: usize) -> FinitePresentation {
    let mut generators = p.generators;
    let mut relators = tidy(p.relators.clone());
    let mut steps = 0;
    while steps < budget && generators > 1 {
        let old_total: usize = relators.iter().map(FreeWord::len).sum();
        let mut best: Option<Elimination> = None;
        for g in (1..=generators).rev() {
            for (idx, r) in relators.iter().enumerate() {
                let occurrences = r.letters().iter().filter(|l| l.unsigned_abs() as usize == g).count();
                if occurrences != 1 {
                    continue;
                }
                let result = tidy(eliminate(&relators, generators, g, idx));
                let total = result.iter().map(FreeWord::len).sum();
                if total > old_total && r.len() > 2 {
                    continue;
                }
                if best.as_ref().is_none_or(|b| total < b.total) {
                    best = Some(Elimination { generator: g, relator: idx, result, total });
                }
            }
        }
        let Some(e) = best else { break };
        debug_assert!(e.relator < relators.len() && e.generator <= generators);
        relators = e.result;
        generators -= 1;
        steps += 1;
    }
    FinitePresentation { generators, relators }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::factorization::CuspidalFactor;

    fn fw(l: &[i32]) -> FreeWord {
        FreeWord::new(l.to_vec()).unwrap()
    }

    fn conic() -> Factorization {
        let e = BraidWord::identity(2).unwrap();
        Factorization::cuspidal(
            2,
            alloc::vec![CuspidalFactor::new(e.clone(), 1).unwrap(), CuspidalFactor::new(e, 1).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn conic_presentation() {
        let p = zvk_presentation(&conic()).unwrap();
        assert_eq!(p.generators(), 2);
        assert_eq!(p.relators(), [fw(&[1, -2]), fw(&[1, -2]), fw(&[2, 1])]);
    }

    #[test]
    fn one_strand() {
        let f = Factorization::cuspidal(1, Vec::new()).unwrap();
        let p = zvk_presentation(&f).unwrap();
        assert_eq!((p.generators(), p.relators()), (1, &[fw(&[1])][..]));
    }

    #[test]
    fn rejects_invalid_factorizations() {
        let e = BraidWord::identity(2).unwrap();
        let bad = Factorization::cuspidal(2, alloc::vec![CuspidalFactor::new(e, 1).unwrap()]).unwrap();
        assert_eq!(zvk_presentation(&bad), Err(Error::NotValidated));
        let general = conic().to_general();
        assert_eq!(zvk_presentation(&general), Err(Error::NotCuspidal));
    }

    #[test]
    fn simplify_two_generator_example() {
        let p = FinitePresentation::new(2, alloc::vec![fw(&[1, -2]), fw(&[2, 1])]).unwrap();
        let s = simplify(&p, 10);
        assert_eq!(s.generators(), 1);
        assert_eq!(s.relators(), [fw(&[1, 1])]);
    }

    #[test]
    fn simplify_trivial_presentation() {
        let p = FinitePresentation::new(1, alloc::vec![fw(&[1])]).unwrap();
        assert_eq!(simplify(&p, 10), p);
        let empty = FinitePresentation::new(0, Vec::new()).unwrap();
        assert_eq!(simplify(&empty, 10), empty);
    }

    #[test]
    fn simplify_renumbers_higher_generators() {
        // x2 = x1 x3, so the result is on x1, x3 renamed to x1, x2.
        let p = FinitePresentation::new(3, alloc::vec![fw(&[2, -3, -1]), fw(&[3, 3, 2])]).unwrap();
        let s = simplify(&p, 1);
        assert_eq!(s.generators(), 2);
        assert!(s.relators().iter().all(|r| r.max_generator() <= 2));
    }

    #[test]
    fn out_of_range_relators_are_rejected() {
        assert!(FinitePresentation::new(1, alloc::vec![fw(&[2])]).is_err());
    }
}
