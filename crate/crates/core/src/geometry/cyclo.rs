use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// `a + b·μ` in `Q(μ)`, where `μ = e^{iπ/3}` satisfies `μ² = μ − 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloNum {
    a: BigRational,
    b: BigRational,
}

impl CycloNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn mu() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn mu_part(&self) -> &BigRational {
        &self.b
    }

    /// Complex conjugate: `μ̄ = 1 − μ`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `a² + ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycloNum {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                (&self).$m(rhs)
            }
        }
    };
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        // (a + bμ)(c + dμ) = ac − bd + (ad + bc + bd)μ
        let bd = &self.b * &rhs.b;
        CycloNum::new(&self.a * &rhs.a - &bd, &self.a * &rhs.b + &self.b * &rhs.a + bd)
    }
}

/// Panics on division by zero, like the rational types it wraps.
impl Div for &CycloNum {
    type Output = CycloNum;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &CycloNum) -> CycloNum {
        self * &rhs.inverse().expect("division by zero in Q(mu)")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::new(-self.a, -self.b)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::new(-&self.a, -&self.b)
    }
}

/// `2`, `-1/2`, `mu`, `-mu`, `1-mu`, `1/2+3/4mu`.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.b == BigRational::one() {
            f.write_str("mu")
        } else if self.b == -BigRational::one() {
            f.write_str("-mu")
        } else {
            write!(f, "{}mu", self.b)
        }
    }
}

fn rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse { what: "number", detail: s.to_string() };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for CycloNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse { what: "number", detail: s.to_string() };
        if t.is_empty() {
            return Err(bad());
        }
        let Some(head) = t.strip_suffix("mu") else {
            return Ok(Self::new(rational(&t)?, BigRational::zero()));
        };
        let split = head.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (a, coeff) = match split {
            Some(i) => (rational(&head[..i])?, &head[i..]),
            None => (BigRational::zero(), head),
        };
        let b = match coeff.strip_prefix('+').unwrap_or(coeff) {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            c if c.ends_with('+') || c.ends_with('-') => return Err(bad()),
            c => rational(c)?,
        };
        Ok(Self::new(a, b))
    }
}
