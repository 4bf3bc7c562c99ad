use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored zero-based as the list of images.
///
/// Products are read left to right: `p.then(q)` applies `p` first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Builds a permutation from zero-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    /// Builds a permutation from one-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation);
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// The transposition of the zero-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g` in left-to-right notation.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_odd(&self) -> bool {
        let n = self.images.len();
        (n - self.cycles().len()) % 2 == 1
    }

    pub fn is_transposition(&self) -> bool {
        let moved = self.images.iter().enumerate().filter(|(i, j)| i != *j).count();
        moved == 2
    }
}

/// Cycle notation with one-based points, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl Permutation {
    /// Parses cycle notation for a permutation of degree `n`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let err = |detail: &str| Error::Parse { what: "permutation", detail: detail.to_string() };
        let s = s.trim();
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = alloc::vec![false; n];
        let mut rest = s;
        if rest == "()" {
            return Ok(Self::identity(n));
        }
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let body = &rest[1..body_end];
            let points = body
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<core::result::Result<Vec<_>, _>>()
                .map_err(|_| err("bad point"))?;
            for &p in &points {
                if p == 0 || p > n || seen[p - 1] {
                    return Err(err("point out of range or repeated"));
                }
                seen[p - 1] = true;
            }
            for (k, &p) in points.iter().enumerate() {
                images[p - 1] = points[(k + 1) % points.len()] - 1;
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Ok(Self { images })
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-based images, e.g. `2 1 3`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "permutation", detail: s.to_string() })?;
        Self::from_one_based(&images)
    }
}
