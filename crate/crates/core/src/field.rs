//! Exact coefficient fields: arbitrary-precision rationals and the
//! two-element field used for exhaustive subspace enumeration.

use num::rational::BigRational;
use num::traits::{One, Zero};
use num::BigInt;
use std::fmt;

/// An exact field. All arithmetic must be exact; there is no rounding
/// anywhere in the engine.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
    fn from_u64(n: u64) -> Self;

    /// All elements of the field, when the field is finite. Coefficient
    /// searches (isomorphisms, idempotents) are exhaustive exactly when
    /// this returns `Some`.
    fn all_elements() -> Option<Vec<Self>> {
        None
    }

    /// Sample points for polynomial-identity testing. For a search over
    /// polynomials of degree at most `degree` per variable, a grid built
    /// from `degree + 1` distinct points is conclusive over an infinite
    /// field; finite fields return every element instead.
    fn sample_points(degree: usize) -> Vec<Self> {
        match Self::all_elements() {
            Some(all) => all,
            None => (0..=degree as u64).map(Self::from_u64).collect(),
        }
    }
}

/// Exact rational scalar over `BigInt`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Parses "p/q" or "p".
    pub fn parse(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat(BigRational::new(n, d)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }
    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }
    fn from_u64(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Gf2(pub bool);

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { 1 } else { 0 })
    }
}

impl Field for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul(&self, other: &Self) -> Self {
        Gf2(self.0 & other.0)
    }
    fn inv(&self) -> Self {
        assert!(self.0, "inverse of zero");
        Gf2(true)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn from_u64(n: u64) -> Self {
        Gf2(n % 2 == 1)
    }
    fn all_elements() -> Option<Vec<Self>> {
        Some(vec![Gf2(false), Gf2(true)])
    }
}
