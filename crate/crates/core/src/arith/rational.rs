//! Helpers on top of `BigRational`: construction shorthands, exact square
//! roots, square-free decomposition and the `"p/q"` text form.

use alloc::string::String;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer square root (floor) by Newton iteration followed by an exact
/// correction step.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // Start above the root: 2^ceil(bits/2).
    let bits = n.bits();
    let mut x = BigUint::one() << ((bits + 1) / 2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    while (&x + 1u32) * (&x + 1u32) <= *n {
        x += 1u32;
    }
    x
}

/// Exact square root of a perfect square, `None` otherwise.
pub fn exact_isqrt(n: &BigUint) -> Option<BigUint> {
    let r = isqrt(n);
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root of `x`, or `None` when `x` is not the square of
/// a rational.
pub fn rational_sqrt(x: &BigRational) -> Result<Option<BigRational>, ArithError> {
    if x.is_negative() {
        return Err(ArithError::NegativeInput);
    }
    // Reduced form: both numerator and denominator must be perfect squares.
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    match (exact_isqrt(num), exact_isqrt(den)) {
        (Some(p), Some(q)) => Ok(Some(BigRational::new(
            BigInt::from_biguint(Sign::Plus, p),
            BigInt::from_biguint(Sign::Plus, q),
        ))),
        _ => Ok(None),
    }
}

/// Writes `x = c^2 * d` with `d` square-free. Returns `(c, d)`; `x = 0`
/// yields `(0, 1)`.
///
/// Trial division runs only while `p^3` does not exceed the unfactored
/// cofactor: what remains afterwards has at most two prime factors, so it is
/// either a perfect square or already square-free.
pub fn squarefree_decompose(x: &BigUint) -> (BigUint, BigUint) {
    if x.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = x.to_u64() {
        let (c, d) = squarefree_decompose_u64(small);
        return (BigUint::from(c), BigUint::from(d));
    }
    let mut rest = x.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    match exact_isqrt(&rest) {
        Some(root) if rest > BigUint::one() => square *= root,
        _ => free *= rest,
    }
    (square, free)
}

fn squarefree_decompose_u64(x: u64) -> (u64, u64) {
    let mut rest = x;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while (p as u128) * (p as u128) * (p as u128) <= rest as u128 {
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = isqrt(&BigUint::from(rest)).to_u64().unwrap_or(0);
    if rest > 1 && root * root == rest {
        square *= root;
    } else {
        free *= rest;
    }
    (square, free)
}

/// Square-free test for a signed integer (0 and 1 count as square-free here;
/// callers that care reject them separately).
pub fn is_squarefree(d: i64) -> bool {
    let m = d.unsigned_abs();
    if m == 0 {
        return true;
    }
    squarefree_decompose_u64(m).0 == 1
}

/// `"p/q"` form used on every wire format; integers keep the `/1`.
pub fn format_rational(q: &BigRational) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(s, "{}/{}", q.numer(), q.denom());
    s
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"-1.25"`.
pub fn parse_rational(text: &str) -> Result<BigRational, ArithError> {
    let t = text.trim();
    let bad = || ArithError::Parse(String::from(t));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = match whole.trim() {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let frac_digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let frac_part = BigRational::new(frac_digits, scale);
        let whole = BigRational::from_integer(whole);
        return Ok(if negative { whole - frac_part } else { whole + frac_part });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Sign of a rational as an `Ordering` against zero.
pub fn sign(q: &BigRational) -> Ordering {
    if q.is_zero() {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// True when `q` is an integer.
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// `q` as an `i64` when it is an integer that fits.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if is_integer(q) {
        q.numer().to_i64()
    } else {
        None
    }
}
