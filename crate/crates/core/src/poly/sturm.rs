//! Sturm sequences and exact real-root counting.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;

use super::{PolyError, RatPoly};
use crate::arith::rational::sign;
use crate::arith::QuadExt;

/// Interval endpoint. Finite endpoints are real quadratic numbers, so
/// eigenvalue-dependent points such as `β₊` or `δ` are usable exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    At(QuadExt),
}

impl Endpoint {
    pub fn rational(q: BigRational) -> Self {
        Endpoint::At(QuadExt::from_rational(q))
    }

    fn cmp(&self, other: &Self) -> Result<Ordering, PolyError> {
        use Endpoint::*;
        Ok(match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (At(a), At(b)) => a.cmp_real(b)?,
        })
    }
}

/// Open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Result<Self, PolyError> {
        if lo.cmp(&hi)? != Ordering::Less {
            return Err(PolyError::InvalidInterval);
        }
        Ok(Self { lo, hi })
    }

    pub fn whole_line() -> Self {
        Self {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
        }
    }

    /// `(lo, hi)` with real quadratic endpoints.
    pub fn between(lo: &QuadExt, hi: &QuadExt) -> Result<Self, PolyError> {
        Self::new(Endpoint::At(lo.clone()), Endpoint::At(hi.clone()))
    }

    /// `(lo, ∞)`.
    pub fn above(lo: &QuadExt) -> Self {
        Self {
            lo: Endpoint::At(lo.clone()),
            hi: Endpoint::PosInf,
        }
    }
}

/// Signed remainder sequence `p₀, p₁, …, p_m` with
/// `p_{j+1} = −Rem(p_{j−1}, p_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<RatPoly>,
}

impl SturmChain {
    /// Classical chain `p, p', …` with un-normalized remainders.
    pub fn new(p: &RatPoly) -> Result<Self, PolyError> {
        Self::from_pair(p, &p.derivative(), false)
    }

    /// Same chain up to positive rational factors; every member is replaced
    /// by its primitive part. Sign rows and counts are unchanged.
    pub fn new_normalized(p: &RatPoly) -> Result<Self, PolyError> {
        Self::from_pair(p, &p.derivative(), true)
    }

    /// Signed remainder sequence of an arbitrary pair, as used by Tarski
    /// queries.
    pub fn from_pair(p0: &RatPoly, p1: &RatPoly, normalize: bool) -> Result<Self, PolyError> {
        if p0.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let norm = |p: RatPoly| if normalize { p.primitive_part() } else { p };
        let mut seq = alloc::vec![norm(p0.clone())];
        if !p1.is_zero() {
            seq.push(norm(p1.clone()));
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1])?;
            if r.is_zero() {
                break;
            }
            seq.push(norm(-r));
        }
        Ok(Self { seq })
    }

    pub fn sequence(&self) -> &[RatPoly] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.seq.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }

    /// Leading coefficients `c_j`.
    pub fn leading_coeffs(&self) -> Vec<BigRational> {
        self.seq
            .iter()
            .map(|p| p.leading().cloned().expect("chain members are nonzero"))
            .collect()
    }

    /// `sgn(c_j)`: the signs at `+∞`.
    pub fn signs_at_pos_inf(&self) -> Vec<i8> {
        self.seq.iter().map(|p| ord_to_i8(sign(p.leading().unwrap()))).collect()
    }

    /// `sgn((−1)^{d_j} c_j)`: the signs at `−∞`.
    pub fn signs_at_neg_inf(&self) -> Vec<i8> {
        self.seq
            .iter()
            .map(|p| {
                let s = ord_to_i8(sign(p.leading().unwrap()));
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect()
    }

    /// Signs of every member at a finite real point.
    pub fn signs_at(&self, x: &QuadExt) -> Result<Vec<i8>, PolyError> {
        self.seq
            .iter()
            .map(|p| Ok(ord_to_i8(p.eval_quad(x).signum()?)))
            .collect()
    }

    /// Number of sign changes `V(x)`, zeros skipped. Fails when `x` is a root
    /// of `p₀`.
    pub fn variations(&self, at: &Endpoint) -> Result<usize, PolyError> {
        let signs = match at {
            Endpoint::NegInf => self.signs_at_neg_inf(),
            Endpoint::PosInf => self.signs_at_pos_inf(),
            Endpoint::At(x) => {
                let s = self.signs_at(x)?;
                if s[0] == 0 {
                    return Err(PolyError::EndpointIsRoot);
                }
                s
            }
        };
        Ok(count_variations(&signs))
    }

    /// `V(lo) − V(hi)`: distinct real roots of `p₀` in the open interval
    /// (for a classical chain).
    pub fn count(&self, interval: &Interval) -> Result<usize, PolyError> {
        let a = self.variations(&interval.lo)?;
        let b = self.variations(&interval.hi)?;
        Ok(a.saturating_sub(b))
    }

    /// `V(lo) − V(hi)` without clamping, for Tarski queries.
    pub fn variation_difference(&self, interval: &Interval) -> Result<i64, PolyError> {
        let a = self.variations(&interval.lo)? as i64;
        let b = self.variations(&interval.hi)? as i64;
        Ok(a - b)
    }
}

fn ord_to_i8(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn count_variations(signs: &[i8]) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for &s in signs.iter().filter(|&&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Distinct real roots of `p` in an open interval.
pub fn count_real_roots(p: &RatPoly, interval: &Interval) -> Result<usize, PolyError> {
    SturmChain::new(p)?.count(interval)
}

/// Tarski query `Σ sign(q(x))` over the distinct roots `x` of `p` in the
/// interval, from the signed remainder sequence of `p` and `p'·q`.
pub fn tarski_query(p: &RatPoly, q: &RatPoly, interval: &Interval) -> Result<i64, PolyError> {
    let chain = SturmChain::from_pair(p, &(&p.derivative() * q), false)?;
    chain.variation_difference(interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn chain_of_x_squared_minus_two() {
        let p = RatPoly::from_i64s(&[-2, 0, 1]);
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(
            c.sequence(),
            &[p.clone(), RatPoly::from_i64s(&[0, 2]), RatPoly::from_i64s(&[2])]
        );
        assert_eq!(c.signs_at_pos_inf(), [1, 1, 1]);
        assert_eq!(count_real_roots(&p, &Interval::whole_line()).unwrap(), 2);
        let pos = Interval::new(Endpoint::rational(int(0)), Endpoint::PosInf).unwrap();
        assert_eq!(count_real_roots(&p, &pos).unwrap(), 1);
    }

    #[test]
    fn constant_chain() {
        let c = SturmChain::new(&RatPoly::from_i64s(&[5])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.count(&Interval::whole_line()).unwrap(), 0);
        assert_eq!(SturmChain::new(&RatPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn endpoint_root_is_refused() {
        let p = RatPoly::from_i64s(&[-1, 0, 1]);
        let iv = Interval::new(Endpoint::rational(int(1)), Endpoint::rational(int(3))).unwrap();
        assert_eq!(count_real_roots(&p, &iv), Err(PolyError::EndpointIsRoot));
        assert_eq!(
            Interval::new(Endpoint::rational(int(3)), Endpoint::rational(int(1))),
            Err(PolyError::InvalidInterval)
        );
    }

    #[test]
    fn quadratic_endpoints() {
        // X² − 3 has its positive root between 1 + √… : use (√2, √5).
        let p = RatPoly::from_i64s(&[-3, 0, 1]);
        let lo = QuadExt::sqrt_rational(&int(2)).unwrap();
        let hi = QuadExt::sqrt_rational(&int(5)).unwrap();
        assert_eq!(count_real_roots(&p, &Interval::between(&lo, &hi).unwrap()).unwrap(), 1);
        let hi = QuadExt::sqrt_rational(&rat(11, 4)).unwrap();
        assert_eq!(count_real_roots(&p, &Interval::between(&lo, &hi).unwrap()).unwrap(), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (X − 1)²(X + 2)
        let p = RatPoly::from_i64s(&[2, -3, 0, 1]);
        assert_eq!(count_real_roots(&p, &Interval::whole_line()).unwrap(), 2);
    }

    #[test]
    fn tarski_query_signs() {
        // Roots ±1 of X² − 1, sign of X at each: −1 + 1 = 0; sign of X + 2: 2.
        let p = RatPoly::from_i64s(&[-1, 0, 1]);
        let iv = Interval::whole_line();
        assert_eq!(tarski_query(&p, &RatPoly::x(), &iv).unwrap(), 0);
        assert_eq!(tarski_query(&p, &RatPoly::from_i64s(&[2, 1]), &iv).unwrap(), 2);
        assert_eq!(tarski_query(&p, &RatPoly::from_i64s(&[-2, 1]), &iv).unwrap(), -2);
        assert_eq!(tarski_query(&p, &RatPoly::from_i64s(&[1]), &iv).unwrap(), 2);
    }

    #[test]
    fn normalized_mode_agrees() {
        let p = RatPoly::new(alloc::vec![rat(1, 3), rat(-7, 2), int(0), rat(5, 4), int(1)]);
        let a = SturmChain::new(&p).unwrap();
        let b = SturmChain::new_normalized(&p).unwrap();
        assert_eq!(a.signs_at_pos_inf(), b.signs_at_pos_inf());
        assert_eq!(a.signs_at_neg_inf(), b.signs_at_neg_inf());
        assert_eq!(a.degrees(), b.degrees());
    }
}
