//! Evaluation points for identity testing of large polynomials.
//!
//! A nonzero polynomial of degree `d < 2·DIM` is not an identity of
//! `DIM × DIM` matrices, so at a uniform point over GF(2⁶⁴) it vanishes with
//! probability at most `d / 2⁶⁴`.

use rand::Rng;

use super::ring::Ring;

/// Matrix size of [`MatrixPoint`].
pub const DIM: usize = 32;

/// An element of GF(2⁶⁴) modulo `x⁶⁴ + x⁴ + x³ + x + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Gf64(pub u64);

impl std::ops::Mul for Gf64 {
    type Output = Gf64;

    fn mul(self, other: Gf64) -> Gf64 {
        let (mut a, mut b, mut acc) = (self.0, other.0, 0u64);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            let carry = a >> 63;
            a <<= 1;
            if carry == 1 {
                a ^= 0b1_1011;
            }
        }
        Gf64(acc)
    }
}

/// A `DIM × DIM` matrix over GF(2⁶⁴), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixPoint(Box<[Gf64]>);

impl MatrixPoint {
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        MatrixPoint((0..DIM * DIM).map(|_| Gf64(rng.gen())).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> Gf64 {
        self.0[i * DIM + j]
    }
}

impl std::fmt::Debug for MatrixPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatrixPoint({:#x}, …)", self.0[0].0)
    }
}

impl Ring for MatrixPoint {
    fn zero() -> Self {
        MatrixPoint(vec![Gf64(0); DIM * DIM].into())
    }

    fn one() -> Self {
        let mut m = Self::zero();
        for k in 0..DIM {
            m.0[k * DIM + k] = Gf64(1);
        }
        m
    }

    fn add(&self, other: &Self) -> Self {
        MatrixPoint(self.0.iter().zip(other.0.iter()).map(|(a, b)| Gf64(a.0 ^ b.0)).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.get(i, k);
                if a.0 == 0 {
                    continue;
                }
                for j in 0..DIM {
                    out.0[i * DIM + j].0 ^= (a * other.get(k, j)).0;
                }
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.0 == 0)
    }
}

/// Upper bound on the degree of whatever a recurrence computes; `None` is
/// the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegreeBound(pub Option<usize>);

impl Ring for DegreeBound {
    fn zero() -> Self {
        DegreeBound(None)
    }

    fn one() -> Self {
        DegreeBound(Some(0))
    }

    fn add(&self, other: &Self) -> Self {
        DegreeBound(self.0.max(other.0))
    }

    fn mul(&self, other: &Self) -> Self {
        match (self.0, other.0) {
            (Some(a), Some(b)) => DegreeBound(Some(a + b)),
            _ => DegreeBound(None),
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn field_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let (a, b, c) = (Gf64(rng.gen()), Gf64(rng.gen()), Gf64(rng.gen()));
            assert_eq!(a * b, b * a);
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!((a * Gf64(b.0 ^ c.0)).0, (a * b).0 ^ (a * c).0);
            assert_eq!(a * Gf64(1), a);
        }
        // x^63 · x = x^4 + x^3 + x + 1
        assert_eq!(Gf64(1 << 63) * Gf64(2), Gf64(0b1_1011));
    }

    #[test]
    fn matrices_do_not_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (a, b) = (MatrixPoint::random(&mut rng), MatrixPoint::random(&mut rng));
        assert_ne!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&MatrixPoint::one()), a);
        assert!(a.add(&a).is_zero());
    }

    #[test]
    fn degree_bounds() {
        let x = DegreeBound(Some(1));
        assert_eq!(x.mul(&x).add(&DegreeBound::one()), DegreeBound(Some(2)));
        assert_eq!(x.mul(&DegreeBound::zero()), DegreeBound::zero());
    }
}
