use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `k > 0` is `X_k`, letter `-k` is `X_k⁻¹`. The word is stored as
/// written; equality of braids goes through [`crate::braid::canonical_form`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// `X_i^{±1}` as a one-letter word.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, alloc::vec![letter])
    }

    /// Parses the whitespace-separated integer format, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<i32>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "braid word", detail: s.to_string() })?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    fn check(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_letters_unchecked(self.strands, letters))
    }

    pub fn inverse(&self) -> BraidWord {
        Self::from_letters_unchecked(self.strands, self.letters.iter().rev().map(|l| -l).collect())
    }

    /// `z⁻¹ · self · z`.
    pub fn conjugate(&self, z: &BraidWord) -> Result<BraidWord> {
        z.inverse().compose(&self.compose(z)?)
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self::from_letters_unchecked(self.strands, letters)
    }

    /// Cancels adjacent `X_k X_k⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self::from_letters_unchecked(self.strands, out)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group under `X_i ↦ (i, i+1)`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // The strand now at position p started at images[p]; track final positions instead.
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        for (p, &start) in pos.iter().enumerate() {
            images[start] = p;
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn is_positive_word(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BraidWord {
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

/// The full twist `(X_1 ⋯ X_{d-1})^d`.
pub fn full_twist(strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(Error::NoStrands);
    }
    let row: Vec<i32> = (1..strands as i32).collect();
    let mut letters = Vec::with_capacity(strands * (strands - 1));
    for _ in 0..strands {
        letters.extend_from_slice(&row);
    }
    Ok(BraidWord::from_letters_unchecked(strands, letters))
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}

pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.permutation()
}
