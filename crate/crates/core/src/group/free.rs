use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A freely reduced word in generators `x_1, x_2, …` (letter `-k` is `x_k⁻¹`).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    /// Reduces `letters` freely; zero letters are rejected.
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Self::reduced(letters))
    }

    pub(crate) fn reduced(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(k: i32) -> Self {
        Self { letters: alloc::vec![k] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        Self::reduced(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        Self { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Strips conjugating pairs `x … x⁻¹` from the two ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let mut i = 0;
        let mut j = l.len();
        while j - i >= 2 && l[i] == -l[j - 1] {
            i += 1;
            j -= 1;
        }
        Self { letters: l[i..j].to_vec() }
    }

    /// Replaces each `x_k^{±1}` by `images[k-1]^{±1}`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        Self::reduced(self.letters.iter().flat_map(|&l| {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                img.letters.clone()
            } else {
                img.inverse().letters
            }
        }))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<i32>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "free word", detail: s.to_string() })?;
        Self::new(letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The substitution of one Artin generator: `X_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`,
/// `x_{i+1} ↦ x_i`; `X_i⁻¹` sends `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`.
fn generator_images(d: usize, letter: i32) -> Vec<FreeWord> {
    let i = letter.unsigned_abs() as i32;
    let mut images: Vec<FreeWord> = (1..=d as i32).map(FreeWord::generator).collect();
    let (a, b) = (i, i + 1);
    if letter > 0 {
        images[a as usize - 1] = FreeWord { letters: alloc::vec![a, b, -a] };
        images[b as usize - 1] = FreeWord::generator(a);
    } else {
        images[a as usize - 1] = FreeWord::generator(b);
        images[b as usize - 1] = FreeWord { letters: alloc::vec![-b, a, b] };
    }
    images
}

/// Artin action of a braid on the free group of rank `d`.
///
/// Letters of `w` act in order, so the action of a product is the
/// composition of the actions of its factors.
pub fn artin_action(w: &BraidWord, u: &FreeWord) -> Result<FreeWord> {
    let d = w.strands();
    if u.max_generator() > d {
        return Err(Error::LetterOutOfRange { letter: u.max_generator() as i32, strands: d });
    }
    let mut out = u.clone();
    for &l in w.letters() {
        out = out.substitute(&generator_images(d, l));
    }
    Ok(out)
}

/// Images of `x_1, …, x_d` under the Artin action of `w`.
pub fn artin_images(w: &BraidWord) -> Vec<FreeWord> {
    let d = w.strands();
    let mut images: Vec<FreeWord> = (1..=d as i32).map(FreeWord::generator).collect();
    for &l in w.letters() {
        let step = generator_images(d, l);
        images = images.iter().map(|img| img.substitute(&step)).collect();
    }
    images
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(l: &[i32]) -> FreeWord {
        FreeWord::new(l.to_vec()).unwrap()
    }

    #[test]
    fn generator_action() {
        let x1 = BraidWord::new(3, alloc::vec![1]).unwrap();
        assert_eq!(artin_action(&x1, &fw(&[1])).unwrap(), fw(&[1, 2, -1]));
        let x1i = BraidWord::new(3, alloc::vec![-1]).unwrap();
        assert_eq!(artin_action(&x1i, &fw(&[1])).unwrap(), fw(&[2]));
        assert_eq!(artin_action(&x1, &fw(&[3])).unwrap(), fw(&[3]));
    }

    #[test]
    fn out_of_range_generator() {
        let x1 = BraidWord::new(2, alloc::vec![1]).unwrap();
        assert!(artin_action(&x1, &fw(&[3])).is_err());
    }

    #[test]
    fn reduction() {
        assert!(fw(&[1, 2, -2, -1]).is_empty());
        assert_eq!(fw(&[2, 1, 3, -2]).cyclically_reduced(), fw(&[1, 3]));
        assert_eq!(fw(&[1, -1, 2]).letters(), [2]);
        assert_eq!(FreeWord::new(alloc::vec![0]), Err(Error::ZeroLetter));
    }

    #[test]
    fn images_agree_with_pointwise_action() {
        let w = BraidWord::new(4, alloc::vec![1, -3, 2, 2, -1]).unwrap();
        let imgs = artin_images(&w);
        for k in 1..=4 {
            assert_eq!(imgs[k - 1], artin_action(&w, &FreeWord::generator(k as i32)).unwrap());
        }
    }
}
