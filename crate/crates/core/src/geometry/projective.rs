use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use super::CycloNum;
use crate::error::{Error, Result};

fn normalize(mut c: [CycloNum; 3]) -> Result<[CycloNum; 3]> {
    // Units of Z[μ] are the six roots of unity, so a content-and-sign
    // normalization is not canonical; scaling the leading entry to 1 is.
    let lead = c.iter().find(|x| !x.is_zero()).cloned().ok_or(Error::ZeroTriple)?;
    let inv = lead.inverse().expect("nonzero");
    for x in c.iter_mut() {
        *x = &*x * &inv;
    }
    Ok(c)
}

fn cross(u: &[CycloNum; 3], v: &[CycloNum; 3]) -> [CycloNum; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn fmt_triple(c: &[CycloNum; 3], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}:{}:{}", c[0], c[1], c[2])
}

fn parse_triple(s: &str, what: &'static str) -> Result<[CycloNum; 3]> {
    let parts: Vec<&str> = s.trim().split(':').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(Error::Parse { what, detail: s.to_string() });
    };
    Ok([x.parse()?, y.parse()?, z.parse()?])
}

macro_rules! homogeneous {
    ($name:ident, $what:literal) => {
        /// Homogeneous triple over `Q(μ)`, stored scaled so that its first
        /// nonzero entry is 1; equality is proportionality.
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name([CycloNum; 3]);

        impl $name {
            pub fn new(c: [CycloNum; 3]) -> Result<Self> {
                normalize(c).map(Self)
            }

            pub fn from_ints(c: [(i64, i64); 3]) -> Result<Self> {
                Self::new(c.map(|(a, b)| CycloNum::from_ints(a, b)))
            }

            pub fn coords(&self) -> &[CycloNum; 3] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_triple(&self.0, f)
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::new(parse_triple(s, $what)?)
            }
        }
    };
}

homogeneous!(ProjLine, "line");
homogeneous!(ProjPoint, "point");

impl ProjLine {
    pub fn contains(&self, p: &ProjPoint) -> bool {
        let [a, b, c] = &self.0;
        let [x, y, z] = &p.0;
        (a * x + b * y + c * z).is_zero()
    }

    /// `None` when the lines coincide.
    pub fn meet(&self, other: &ProjLine) -> Option<ProjPoint> {
        ProjPoint::new(cross(&self.0, &other.0)).ok()
    }
}

/// `L1 … L9`, the lines dual to the flexes of the Fermat cubic.
pub fn hesse_dual_lines() -> Vec<ProjLine> {
    // −μ² = 1 − μ
    let t = [
        [(1, 0), (0, 0), (-1, 0)],
        [(1, 0), (0, 0), (1, -1)],
        [(1, 0), (0, 0), (0, 1)],
        [(0, 0), (1, 0), (1, -1)],
        [(0, 0), (1, 0), (-1, 0)],
        [(0, 0), (1, 0), (0, 1)],
        [(1, 0), (0, 1), (0, 0)],
        [(1, 0), (1, -1), (0, 0)],
        [(1, 0), (-1, 0), (0, 0)],
    ];
    t.into_iter().map(|c| ProjLine::from_ints(c).expect("nonzero")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub point: ProjPoint,
    /// Zero-based indices of the lines through the point, ascending.
    pub lines: Vec<usize>,
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// All intersection points of a set of distinct lines, sorted by point.
pub fn intersection_lattice(lines: &[ProjLine]) -> Result<Vec<IntersectionPoint>> {
    let mut points: BTreeMap<ProjPoint, Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = lines[i].meet(&lines[j]).ok_or(Error::ProportionalLines(i, j))?;
            points.entry(p).or_default();
        }
    }
    Ok(points
        .into_keys()
        .map(|point| {
            let through = (0..lines.len()).filter(|&k| lines[k].contains(&point)).collect();
            IntersectionPoint { point, lines: through }
        })
        .collect())
}
