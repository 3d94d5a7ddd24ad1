//! Coefficient rings.
//!
//! Every chain-level computation is generic over [`Ring`]. The integers are the
//! default (`i64`; the workspace keeps overflow checks on in every profile), and
//! [`ModInt`] and `BigRational` cover the other coefficient modes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A commutative ring with unit and exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
        + 'static
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `(-1)^exponent` in `R`.
pub fn sign<R: Ring>(exponent: i64) -> R {
    if exponent.rem_euclid(2) == 0 {
        R::one()
    } else {
        -R::one()
    }
}

/// `(-1)^(a*b)` as a boolean "is negative".
#[inline]
pub fn koszul(a: i64, b: i64) -> bool {
    (a & 1) == 1 && (b & 1) == 1
}

/// Integers modulo `M`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModInt<const M: u64>(u64);

impl<const M: u64> ModInt<M> {
    pub fn new(value: i64) -> Self {
        ModInt(value.rem_euclid(M as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModInt::<M>(1 % M);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const M: u64> fmt::Debug for ModInt<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, M)
    }
}

impl<const M: u64> fmt::Display for ModInt<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const M: u64> Add for ModInt<M> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ModInt(((self.0 as u128 + rhs.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Sub for ModInt<M> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ModInt(((self.0 as u128 + M as u128 - rhs.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Mul for ModInt<M> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ModInt(((self.0 as u128 * rhs.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Neg for ModInt<M> {
    type Output = Self;
    fn neg(self) -> Self {
        ModInt((M - self.0) % M)
    }
}

impl<const M: u64> Zero for ModInt<M> {
    fn zero() -> Self {
        ModInt(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const M: u64> One for ModInt<M> {
    fn one() -> Self {
        ModInt(1 % M)
    }
}

impl<const M: u64> Field for ModInt<M> {
    /// Only meaningful when `M` is prime.
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(M - 2))
        }
    }
}

/// Runtime tag for the coefficient ring of a job.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientRing {
    Integers,
    Rationals,
    IntegersMod { modulus: u64 },
}

impl CoefficientRing {
    pub fn is_field(&self) -> bool {
        match self {
            CoefficientRing::Integers => false,
            CoefficientRing::Rationals => true,
            CoefficientRing::IntegersMod { modulus } => is_prime(*modulus),
        }
    }

    /// Characteristic of the ring (0 for the integers and rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientRing::IntegersMod { modulus } => *modulus,
            _ => 0,
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::IntegersMod { modulus } => write!(f, "Z/{modulus}"),
        }
    }
}

impl std::str::FromStr for CoefficientRing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" | "int" | "integers" => Ok(CoefficientRing::Integers),
            "q" | "rat" | "rationals" => Ok(CoefficientRing::Rationals),
            other => {
                let digits = other
                    .strip_prefix("z/")
                    .or_else(|| other.strip_prefix("zmod"))
                    .or_else(|| other.strip_prefix("f"))
                    .ok_or_else(|| format!("unknown coefficient ring `{s}`"))?;
                let modulus: u64 = digits
                    .parse()
                    .map_err(|_| format!("bad modulus in `{s}`"))?;
                if modulus < 2 {
                    return Err(format!("modulus must be at least 2 in `{s}`"));
                }
                Ok(CoefficientRing::IntegersMod { modulus })
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
