//! Elements `lo + hi·√e` of the compositum `Q(√d, √e)` with `d ≤ 0 < e`.
//!
//! Needed when a conference graph has irrational eigenvalues (real field
//! `Q(√e)`) while the core weights live in an imaginary field `Q(√d)`.

use core::fmt;

use num_rational::BigRational;

use super::{ArithError, QuadExt, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiQuad {
    lo: QuadExt,
    hi: QuadExt,
    e: i64,
}

impl BiQuad {
    /// Embeds a quadratic element. Real irrational input becomes `a + b·√e`;
    /// imaginary or rational input goes to the `lo` part.
    pub fn from_quad(x: &QuadExt) -> Self {
        if x.d() > 0 {
            Self {
                lo: QuadExt::from_rational(x.a().clone()),
                hi: QuadExt::from_rational(x.b().clone()),
                e: x.d(),
            }
        } else {
            Self::from_parts(x.clone(), QuadExt::zero(), 0)
        }
    }

    fn from_parts(lo: QuadExt, hi: QuadExt, e: i64) -> Self {
        if hi.is_zero() || e == 0 {
            Self {
                lo,
                hi: QuadExt::zero(),
                e: 0,
            }
        } else {
            Self { lo, hi, e }
        }
    }

    pub fn lo(&self) -> &QuadExt {
        &self.lo
    }

    pub fn hi(&self) -> &QuadExt {
        &self.hi
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    fn common_e(&self, other: &Self) -> Result<i64, ArithError> {
        match (self.e, other.e) {
            (0, e) | (e, 0) => Ok(e),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ArithError::IncompatibleField(a, b)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let e = self.common_e(other)?;
        Ok(Self::from_parts(
            self.lo.try_add(&other.lo)?,
            self.hi.try_add(&other.hi)?,
            e,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        let e = self.common_e(other)?;
        Ok(Self::from_parts(
            self.lo.try_sub(&other.lo)?,
            self.hi.try_sub(&other.hi)?,
            e,
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let e = self.common_e(other)?;
        let e_q = QuadExt::from_int(e);
        let lo = self
            .lo
            .try_mul(&other.lo)?
            .try_add(&self.hi.try_mul(&other.hi)?.try_mul(&e_q)?)?;
        let hi = self
            .lo
            .try_mul(&other.hi)?
            .try_add(&self.hi.try_mul(&other.lo)?)?;
        Ok(Self::from_parts(lo, hi, e))
    }

    /// Complex conjugation; `√e` is real so only the coordinates conjugate.
    pub fn conj(&self) -> Self {
        Self::from_parts(self.lo.conj(), self.hi.conj(), self.e)
    }

    /// `x·conj(x)`.
    pub fn abs_sq(&self) -> Self {
        self.try_mul(&self.conj()).expect("conjugate shares the field")
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// Back to a single quadratic field when possible.
    pub fn to_quad(&self) -> Option<QuadExt> {
        if self.hi.is_zero() {
            return Some(self.lo.clone());
        }
        if self.lo.is_rational() && self.hi.is_rational() {
            return QuadExt::new(self.lo.a().clone(), self.hi.a().clone(), self.e).ok();
        }
        None
    }
}

impl fmt::Display for BiQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi.is_zero() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "({}) + ({})·√{}", self.lo, self.hi, self.e)
        }
    }
}

impl From<&QuadExt> for BiQuad {
    fn from(x: &QuadExt) -> Self {
        Self::from_quad(x)
    }
}

/// Panics on incompatible fields.
impl Ring for BiQuad {
    fn from_rational(q: &BigRational) -> Self {
        Self::from_quad(&QuadExt::from_rational(q.clone()))
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("BiQuad::add: incompatible fields")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("BiQuad::sub: incompatible fields")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("BiQuad::mul: incompatible fields")
    }
    fn is_zero(&self) -> bool {
        BiQuad::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn golden_ratio_times_gaussian() {
        // r = (-1 + √13)/2, w = i: |r·w|² = r² = (7 - √13)/2.
        let r = QuadExt::new(rat(-1, 2), rat(1, 2), 13).unwrap();
        let x = BiQuad::from_quad(&r).mul(&BiQuad::from_quad(&QuadExt::i()));
        let n = x.abs_sq();
        let expect = QuadExt::new(rat(7, 2), rat(-1, 2), 13).unwrap();
        assert_eq!(n.to_quad().unwrap(), expect);
    }

    #[test]
    fn surd_cancels_back_to_imaginary_field() {
        let r = QuadExt::new(int(0), int(1), 13).unwrap();
        let w = QuadExt::new(rat(-1, 6), rat(1, 6), -35).unwrap();
        let a = BiQuad::from_quad(&r).mul(&BiQuad::from_quad(&w));
        let b = a.sub(&BiQuad::from_quad(&r).mul(&BiQuad::from_quad(&w)));
        assert!(b.is_zero());
        let c = a.add(&BiQuad::from_quad(&w));
        assert_eq!(c.e(), 13);
        assert_eq!(c.lo(), &w);
    }

    #[test]
    fn mismatched_real_fields_error() {
        let a = BiQuad::from_quad(&QuadExt::new(int(0), int(1), 2).unwrap());
        let b = BiQuad::from_quad(&QuadExt::new(int(0), int(1), 3).unwrap());
        assert_eq!(a.try_add(&b), Err(ArithError::IncompatibleField(2, 3)));
    }
}
