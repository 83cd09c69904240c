//! Elements `a + b·√d` of a single quadratic extension of the rationals.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{is_squarefree, sign, squarefree_decompose};
use super::ArithError;

/// Exact element `a + b·√d` of `Q(√d)`.
///
/// Canonical form: `d` is square-free and never 1, and `b = 0` exactly when
/// `d = 0`. Pure rationals therefore always carry `d = 0`, which makes them
/// compatible with every field. `d < 0` gives imaginary quadratic fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Result<Self, ArithError> {
        if b.is_zero() {
            return Ok(Self::from_rational(a));
        }
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(ArithError::NotSquareFree(d));
        }
        Ok(Self { a, b, d })
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit `√−1`.
    pub fn i() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::one(),
            d: -1,
        }
    }

    /// Principal square root of a rational: `√x` for `x ≥ 0`, `i·√|x|` for
    /// `x < 0`. The result is rational whenever `|x|` is a rational square.
    pub fn sqrt_rational(x: &BigRational) -> Result<Self, ArithError> {
        if x.is_zero() {
            return Ok(Self::zero());
        }
        // √(p/q) = √(|p|·q) / q
        let q = x.denom().magnitude().clone();
        let pq: BigUint = x.numer().magnitude() * &q;
        let (c, free) = squarefree_decompose(&pq);
        let coeff = BigRational::new(
            BigInt::from_biguint(Sign::Plus, c),
            BigInt::from_biguint(Sign::Plus, q),
        );
        let free = free.to_i64().ok_or(ArithError::FieldTooLarge)?;
        let d = if x.is_negative() { -free } else { free };
        if d == 1 {
            Ok(Self::from_rational(coeff))
        } else {
            Self::new(BigRational::zero(), coeff, d)
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Discriminant of the field this element lives in (0 for rationals).
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    /// Real elements: rationals and elements of real quadratic fields.
    pub fn is_real(&self) -> bool {
        self.d >= 0
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Discriminant shared by `self` and `other`, if any.
    pub fn common_field(&self, other: &Self) -> Result<i64, ArithError> {
        match (self.d, other.d) {
            (0, e) | (e, 0) => Ok(e),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(ArithError::IncompatibleField(d, e)),
        }
    }

    fn build(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            Self::from_rational(a)
        } else {
            Self { a, b, d }
        }
    }

    fn d_big(d: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(d))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_field(other)?;
        Ok(Self::build(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_field(other)?;
        Ok(Self::build(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_field(other)?;
        let a = &self.a * &other.a + &self.b * &other.b * Self::d_big(d);
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::build(a, b, d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.field_norm();
        Ok(Self::build(&self.a / &n, -&self.b / &n, self.d))
    }

    /// Field norm `a² − d·b²`, nonzero for nonzero elements.
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * Self::d_big(self.d)
    }

    /// The other root of the minimal polynomial: `a − b√d`.
    pub fn galois_conj(&self) -> Self {
        Self::build(self.a.clone(), -&self.b, self.d)
    }

    /// Complex conjugate. Real elements are fixed.
    pub fn conj(&self) -> Self {
        if self.d < 0 {
            self.galois_conj()
        } else {
            self.clone()
        }
    }

    /// `x·conj(x)`. Rational and non-negative whenever `d ≤ 0`.
    pub fn abs_sq(&self) -> Self {
        self.try_mul(&self.conj()).expect("conjugate shares the field")
    }

    /// Multiplies by a rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        Self::build(&self.a * q, &self.b * q, self.d)
    }

    /// `self^k` for small non-negative `k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same field");
        }
        acc
    }

    /// Sign of a real element, decided exactly by comparing `a²` with `b²d`.
    pub fn signum(&self) -> Result<Ordering, ArithError> {
        if self.d < 0 {
            return Err(ArithError::NotReal);
        }
        Ok(sign_of_surd(&self.a, &self.b, self.d))
    }

    /// Real order between two real elements, allowing them to live in
    /// different real quadratic fields.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering, ArithError> {
        if self.d < 0 || other.d < 0 {
            return Err(ArithError::NotReal);
        }
        if let Ok(diff) = self.try_sub(other) {
            return diff.signum();
        }
        // self − other = p + q·√e with p = self − other.a ∈ Q(√d), q = −other.b.
        let p = self.try_sub(&Self::from_rational(other.a.clone()))?;
        let q = Self::from_rational(-&other.b);
        sign_in_tower(&p, &q, other.d)
    }

    /// Compact human form, e.g. `-1/2 + 1/2·√-3`.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

/// Exact sign of `a + b√d` with `d > 0` (or `b = 0`).
fn sign_of_surd(a: &BigRational, b: &BigRational, d: i64) -> Ordering {
    let sa = sign(a);
    let sb = sign(b);
    if sb == Ordering::Equal || d == 0 {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: the larger of a² and b²d wins.
    let lhs = a * a;
    let rhs = b * b * BigRational::from_integer(BigInt::from(d));
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Exact sign of `p + q·√e` with `p, q` real in a common field `Q(√d)` and
/// `e > 0`.
pub(crate) fn sign_in_tower(p: &QuadExt, q: &QuadExt, e: i64) -> Result<Ordering, ArithError> {
    let sp = p.signum()?;
    let sq = q.signum()?;
    if sq == Ordering::Equal || e == 0 {
        return Ok(sp);
    }
    if sp == Ordering::Equal || sp == sq {
        return Ok(sq);
    }
    let lhs = p.try_mul(p)?;
    let rhs = q.try_mul(q)?.scale(&BigRational::from_integer(BigInt::from(e)));
    Ok(match lhs.cmp_real(&rhs)? {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    })
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "{}·√{}", self.b, self.d)
        } else if self.b.is_negative() {
            write!(f, "{} - {}·√{}", self.a, -&self.b, self.d)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.d)
        }
    }
}

impl From<BigRational> for QuadExt {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

// Operator forms panic on mixed fields; use the `try_*` methods where the
// fields are not known to agree.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("QuadExt::{}: {}", stringify!($method), e),
                }
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(-self.a, -self.b, self.d)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(-&self.a, -&self.b, self.d)
    }
}
