use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Degree, genus and singularity counts of a cuspidal plane curve, with the
/// covering degree `deg_f` when it comes from the `m`-canonical family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveInvariants {
    pub m: Option<BigInt>,
    pub deg_f: Option<BigInt>,
    pub d: BigInt,
    pub g: BigInt,
    pub kappa: BigInt,
    /// Simple branch points of a generic projection.
    pub n1: BigInt,
    /// Nodes.
    pub delta: BigInt,
}

fn n1_of(d: &BigInt, g: &BigInt, kappa: &BigInt) -> BigInt {
    BigInt::from(2) * d + BigInt::from(2) * g - 2 - kappa
}

fn delta_of(d: &BigInt, g: &BigInt, kappa: &BigInt) -> BigInt {
    (d - 1) * (d - 2) / 2 - g - kappa
}

impl CurveInvariants {
    /// Fills in `n1` by Riemann–Hurwitz and `delta` by the degree–genus formula.
    pub fn from_curve(d: BigInt, g: BigInt, kappa: BigInt) -> Self {
        let n1 = n1_of(&d, &g, &kappa);
        let delta = delta_of(&d, &g, &kappa);
        Self { m: None, deg_f: None, d, g, kappa, n1, delta }
    }

    /// True below `m = 5`, where the family is not known to be generic.
    pub fn below_range(&self) -> bool {
        self.m.as_ref().is_some_and(|m| *m < BigInt::from(5))
    }
}

/// Branch-curve data of the generic projection attached to `m`.
pub fn branch_curve_invariants(m: u64) -> Result<CurveInvariants> {
    if m < 1 {
        return Err(Error::BadM);
    }
    let m = BigInt::from(m);
    let deg_f = BigInt::from(333) * &m * &m;
    let d = BigInt::from(333) * &m * (BigInt::from(3) * &m + 1);
    let twice: BigInt = BigInt::from(333) * (BigInt::from(3) * &m + 2) * (BigInt::from(3) * &m + 1);
    let (half, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero());
    let g = half + 1;
    let kappa = BigInt::from(111) * (BigInt::from(36) * &m * &m + BigInt::from(27) * &m + 5);
    let mut inv = CurveInvariants::from_curve(d, g, kappa);
    inv.m = Some(m);
    inv.deg_f = Some(deg_f);
    Ok(inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    /// `n1 + 2δ + 3κ = d(d − 1)`: the factor exponents add up to the full twist.
    pub exponent_identity: bool,
    pub delta_nonnegative: bool,
    pub n1_nonnegative: bool,
    pub genus_nonnegative: bool,
    /// `n1` and `δ` agree with their defining formulas.
    pub n1_formula: bool,
    pub delta_formula: bool,
}

impl ConsistencyReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }

    pub fn checks(&self) -> [(&'static str, bool); 6] {
        [
            ("exponent_identity", self.exponent_identity),
            ("delta_nonnegative", self.delta_nonnegative),
            ("n1_nonnegative", self.n1_nonnegative),
            ("genus_nonnegative", self.genus_nonnegative),
            ("n1_formula", self.n1_formula),
            ("delta_formula", self.delta_formula),
        ]
    }
}

pub fn check_consistency(inv: &CurveInvariants) -> ConsistencyReport {
    let CurveInvariants { d, g, kappa, n1, delta, .. } = inv;
    let lhs = n1 + BigInt::from(2) * delta + BigInt::from(3) * kappa;
    ConsistencyReport {
        exponent_identity: lhs == d * (d - 1),
        delta_nonnegative: !delta.is_negative(),
        n1_nonnegative: !n1.is_negative(),
        genus_nonnegative: !g.is_negative(),
        n1_formula: *n1 == n1_of(d, g, kappa),
        delta_formula: *delta == delta_of(d, g, kappa),
    }
}
