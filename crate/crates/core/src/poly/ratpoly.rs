//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;
use crate::arith::{parse_rational, QuadExt};

/// Polynomial with ascending rational coefficients and no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `X - c`.
    pub fn linear_root(c: &BigRational) -> Self {
        Self::new(vec![-c, BigRational::one()])
    }

    /// Parses ascending comma-separated coefficients, e.g. `"-2,0,1"`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let coeffs = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(BigRational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q·b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZeroPoly)?;
        let lead = b.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + db] / lead;
            if !c.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &c * bc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder of division by `b`.
    pub fn rem(&self, b: &Self) -> Result<Self, PolyError> {
        self.divrem(b).map(|(_, r)| r)
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&l.recip()),
            None => a,
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den / c.denom());
            g = g.gcd(&scaled);
        }
        let factor = BigRational::new(den, g.abs());
        self.scale(&factor)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.eval_ring(x)
    }

    pub fn eval_quad(&self, x: &QuadExt) -> QuadExt {
        self.eval_ring(x)
    }

    /// Horner evaluation in any ring with rational scalars.
    pub fn eval_ring<R: crate::arith::Ring>(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&R::from_rational(c));
        }
        acc
    }

    /// Ascending coefficients as text, the inverse of [`RatPoly::parse`].
    pub fn to_csv(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}X", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}X^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl crate::arith::Ring for RatPoly {
    fn from_rational(q: &BigRational) -> Self {
        RatPoly::constant(q.clone())
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
        RatPoly::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;
    use crate::arith::{int, rat};

    #[test]
    fn divrem_examples() {
        let a = RatPoly::from_i64s(&[-1, 0, 1]);
        let b = RatPoly::from_i64s(&[-1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, RatPoly::from_i64s(&[1, 1]));
        assert!(r.is_zero());

        let a = RatPoly::from_i64s(&[0, 0, 0, 1]);
        let b = RatPoly::from_i64s(&[1, 0, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, RatPoly::x());
        assert_eq!(r, RatPoly::from_i64s(&[0, -1]));

        let p0 = RatPoly::from_i64s(&[-2, 0, 1]);
        let p1 = RatPoly::from_i64s(&[0, 2]);
        assert_eq!(p0.rem(&p1).unwrap(), RatPoly::from_i64s(&[-2]));

        assert_eq!(a.divrem(&RatPoly::zero()), Err(PolyError::DivisionByZeroPoly));
    }

    #[test]
    fn evaluation() {
        // X³ − 2X² − (15/2)X + 7 at 4 is 9.
        let p = RatPoly::new(vec![int(7), rat(-15, 2), int(-2), int(1)]);
        assert_eq!(p.eval(&int(4)), int(9));
        assert_eq!(RatPoly::zero().eval(&int(3)), int(0));
        assert_eq!(RatPoly::zero().eval_quad(&QuadExt::i()), QuadExt::zero());
        // X² + 1 at i.
        assert!(RatPoly::from_i64s(&[1, 0, 1]).eval_quad(&QuadExt::i()).is_zero());
    }

    #[test]
    fn parse_and_display() {
        let p = RatPoly::parse("-2, 0, 1").unwrap();
        assert_eq!(p, RatPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(p.to_string(), "X^2 - 2");
        assert_eq!(RatPoly::parse("1/2,0,0").unwrap().degree(), Some(0));
        assert_eq!(RatPoly::parse(&p.to_csv()).unwrap(), p);
        assert!(RatPoly::parse("1,x").is_err());
    }

    #[test]
    fn gcd_and_primitive_part() {
        let a = RatPoly::from_i64s(&[-1, 0, 1]);
        let b = RatPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), RatPoly::from_i64s(&[1, 1]));
        let p = RatPoly::new(vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(p.primitive_part(), RatPoly::from_i64s(&[2, -3]));
        let q = RatPoly::from_i64s(&[-4, 6]);
        assert_eq!(q.primitive_part(), RatPoly::from_i64s(&[-2, 3]));
    }
}
