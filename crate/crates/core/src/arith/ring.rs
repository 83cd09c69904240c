use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::QuadExt;

/// Commutative ring with rational scalars. Lets one polynomial formula be
/// evaluated over rationals, quadratic fields and symbolic polynomials.
pub trait Ring: Clone + PartialEq {
    fn from_rational(q: &BigRational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    fn scale(&self, q: &BigRational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn add_i64(&self, n: i64) -> Self {
        self.add(&Self::from_i64(n))
    }

    fn mul_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Panics on mixed fields, like the operator forms of `QuadExt`.
impl Ring for QuadExt {
    fn from_rational(q: &BigRational) -> Self {
        QuadExt::from_rational(q.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
}
