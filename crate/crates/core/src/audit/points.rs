//! Distinguished real points attached to `L`, `M`, `S`.

use num_rational::BigRational;

use crate::arith::{int, rat, ArithError, QuadExt};
use crate::poly::RatPoly;

/// `(c − √D/2, c + √D/2)`; imaginary when `D < 0`.
fn half_root_pair(centre: &BigRational, disc: &BigRational) -> Result<(QuadExt, QuadExt), ArithError> {
    let half = QuadExt::sqrt_rational(disc)?.scale(&rat(1, 2));
    let c = QuadExt::from_rational(centre.clone());
    Ok((c.try_sub(&half)?, c.try_add(&half)?))
}

/// `(X − a)(X − b)` for a conjugate or rational pair.
pub fn quadratic_from_pair(pair: &(QuadExt, QuadExt)) -> Result<RatPoly, ArithError> {
    let sum = pair.0.try_add(&pair.1)?;
    let prod = pair.0.try_mul(&pair.1)?;
    match (sum.to_rational(), prod.to_rational()) {
        (Some(s), Some(p)) => Ok(RatPoly::new(alloc::vec![p.clone(), -s.clone(), int(1)])),
        _ => Err(ArithError::NotReal),
    }
}

/// The points `h`, `α±`, `β±`, `γ±`, `δ`. They depend on `r, s` only through
/// `σ = r + s` and `π = rs`, so conjugate irrational eigenvalues give
/// rational inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoints {
    pub sigma: BigRational,
    pub pi: BigRational,
    /// `r(r+1)s(s+1) = π(π + σ + 1)`.
    pub rho: BigRational,
    pub h: QuadExt,
    /// `(α₋, α₊)`.
    pub alpha: (QuadExt, QuadExt),
    pub beta_minus: QuadExt,
    pub beta_plus: QuadExt,
    /// `(γ₋, γ₊)`, imaginary when the discriminant is negative.
    pub gamma: (QuadExt, QuadExt),
    pub delta: QuadExt,
}

impl CriticalPoints {
    pub fn from_sum_product(sigma: &BigRational, pi: &BigRational) -> Result<Self, ArithError> {
        let one = int(1);
        let rho = pi * (pi + sigma + &one);
        let h_sq = int(4) * &rho + &one;
        let h = QuadExt::sqrt_rational(&h_sq)?;
        // (s−1)² − 6rs + r(r−2) = σ² − 2σ + 1 − 8π.
        let d_alpha = sigma * sigma - int(2) * sigma + &one - int(8) * pi;
        // r² + 2(5s+3)r + (s+3)² = σ² + 6σ + 9 + 8π.
        let d_gamma = sigma * sigma + int(6) * sigma + int(9) + int(8) * pi;
        let alpha = half_root_pair(&((sigma - &one) / int(2)), &d_alpha)?;
        let gamma = half_root_pair(&((sigma + int(3)) / int(2)), &d_gamma)?;
        let (beta_minus, beta_plus) = half_root_pair(&(-pi - rat(1, 2)), &h_sq)?;
        let delta = QuadExt::from_rational(-pi).try_add(&QuadExt::sqrt_rational(&rho)?)?;
        Ok(Self {
            sigma: sigma.clone(),
            pi: pi.clone(),
            rho,
            h,
            alpha,
            beta_minus,
            beta_plus,
            gamma,
            delta,
        })
    }

    pub fn from_ints(r: i64, s: i64) -> Result<Self, ArithError> {
        Self::from_sum_product(&int(r + s), &int(r * s))
    }

    /// `(β₋ + 1, β₊ + 1)`.
    pub fn beta_shifted(&self) -> (QuadExt, QuadExt) {
        let one = QuadExt::one();
        (&self.beta_minus + &one, &self.beta_plus + &one)
    }

    /// `−rs`.
    pub fn minus_rs(&self) -> QuadExt {
        QuadExt::from_rational(-&self.pi)
    }
}

/// Quantities for integer `r ≥ 3` and `u = r + s` with `1 ≤ u ≤ r − 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSumPoints {
    pub r: i64,
    pub u: i64,
    pub c1: BigRational,
    pub c2: BigRational,
    pub tau_minus: QuadExt,
    pub tau_plus: QuadExt,
    pub g1: BigRational,
    pub g2: BigRational,
    pub g3: BigRational,
}

impl PositiveSumPoints {
    pub fn new(r: i64, u: i64) -> Result<Self, ArithError> {
        let (rq, uq) = (int(r), int(u));
        let one = int(1);
        let u1 = &uq + &one;
        let uu2 = &uq * (&uq + int(2));
        let rmu = &rq - &uq;
        // r(r+1)(r−u)(r−u−1)
        let big = &rq * (&rq + &one) * &rmu * (&rmu - &one);
        let c1 = int(3) * &u1 * &u1 * (int(2) * &rq * &rmu - &one)
            + int(3) * (&rq * (&rq + &one) + &rmu * (&rmu - &one));
        let c2 = int(12) * &big * &uu2 * (&uu2 - int(2)) + int(3) * &u1 * &u1;
        let denom = int(6) * &u1 * &u1;
        let root = QuadExt::sqrt_rational(&c2)?;
        let centre = QuadExt::from_rational(c1.clone());
        let tau_minus = centre.try_sub(&root)?.scale(&(&one / &denom));
        let tau_plus = centre.try_add(&root)?.scale(&(&one / &denom));
        let g1 = int(4) * &uu2 * (&uu2 - int(2)) * &big + &u1 * &u1;
        let g2 = int(2) * &big * (int(8) * &uu2 * &big + int(7) * &uu2 - &one) - &one;
        let g3 = int(16) * &uu2 * &big - &one;
        Ok(Self {
            r,
            u,
            c1,
            c2,
            tau_minus,
            tau_plus,
            g1,
            g2,
            g3,
        })
    }

    /// Closed forms of the leading coefficients `c₀, …, c₄` of the Sturm
    /// chain of `S`.
    pub fn sturm_leading(&self) -> [BigRational; 5] {
        let (r, u) = (int(self.r), int(self.u));
        let one = int(1);
        let u1sq = (&u + &one) * (&u + &one);
        let rmu = &r - &u;
        let big = &r * (&r + &one) * &rmu * (&rmu - &one);
        let c0 = u1sq.clone();
        let c1 = int(4) * &u1sq;
        let c2 = &self.g1 / (int(4) * &u1sq);
        let c3 = int(-32) * &u * &u * &u1sq * (&u + int(2)) * (&u + int(2)) * &big * &self.g2 / (&self.g1 * &self.g1);
        let c4 = -(&big * &big) * &self.g1 * &self.g1 * &self.g3 / (int(4) * &u1sq * &self.g2 * &self.g2);
        [c0, c1, c2, c3, c4]
    }
}

/// `s± = 2t + (1 ± √(16t²+1))/(8t)` for the conference specialization with
/// `t = r(r+1)`.
pub fn conference_s_pm(t: &BigRational) -> Result<(QuadExt, QuadExt), ArithError> {
    let root = QuadExt::sqrt_rational(&(int(16) * t * t + int(1)))?;
    let inv = int(1) / (int(8) * t);
    let base = QuadExt::from_rational(int(2) * t + &inv);
    let off = root.scale(&inv);
    Ok((base.try_sub(&off)?, base.try_add(&off)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_at_two_minus_two() {
        let c = CriticalPoints::from_ints(2, -2).unwrap();
        assert_eq!(c.beta_plus, QuadExt::from_int(7));
        assert_eq!(c.beta_minus, QuadExt::zero());
        let (am, ap) = c.alpha.clone();
        assert_eq!(&am + &ap, QuadExt::from_int(-1));
        assert_eq!(ap.d(), 33);
        // δ = 4 + √12 = 4 + 2√3.
        assert_eq!(c.delta, QuadExt::new(int(4), int(2), 3).unwrap());
    }

    #[test]
    fn g_values_at_four_two() {
        let p = PositiveSumPoints::new(4, 2).unwrap();
        assert!(p.g1 > int(0) && p.g2 > int(0) && p.g3 > int(0));
    }
}
