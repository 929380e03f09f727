use std::fmt;
use std::ops::{Add, Mul};

/// The coefficient operations shared by symbolic polynomials and GF(2)
/// scalars, so the same recurrences can run on either.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

/// An element of GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn bit(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Gf2 {
    fn from(b: bool) -> Self {
        Gf2(b)
    }
}

impl From<Gf2> for u8 {
    fn from(v: Gf2) -> u8 {
        v.bit()
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Ring for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn one() -> Self {
        Gf2::ONE
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}
