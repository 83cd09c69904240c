//! The polynomials `L`, `M`, `S` whose values at `k₁` decide the real part
//! of `w₁`.

use alloc::vec::Vec;

use num_rational::BigRational;

use super::ClassifyError;
use crate::arith::{int, rat, QuadExt, Ring};
use crate::poly::RatPoly;
use crate::srg::SrgParams;

/// Ascending coefficients of
/// `L = X³ + (4rs−r−s+3)/2·X² + (−4rs(r+s−1)+1)/2·X + rs(r²+2(3s+1)r+s²+2s+2)/2`.
pub fn l_coeffs<R: Ring>(r: &R, s: &R) -> Vec<R> {
    let half = rat(1, 2);
    let rs = r.mul(s);
    let sum = r.add(s);
    let c3 = R::one();
    let c2 = rs.mul_i64(4).sub(&sum).add_i64(3).scale(&half);
    let c1 = rs.mul(&sum.add_i64(-1)).mul_i64(-4).add_i64(1).scale(&half);
    let inner = r
        .square()
        .add(&s.mul_i64(3).add_i64(1).mul(r).mul_i64(2))
        .add(&s.square())
        .add(&s.mul_i64(2))
        .add_i64(2);
    let c0 = rs.mul(&inner).scale(&half);
    alloc::vec![c0, c1, c2, c3]
}

/// `M = L − 4(X + rs)²`.
pub fn m_coeffs<R: Ring>(r: &R, s: &R) -> Vec<R> {
    let mut c = l_coeffs(r, s);
    let rs = r.mul(s);
    c[0] = c[0].sub(&rs.square().mul_i64(4));
    c[1] = c[1].sub(&rs.mul_i64(8));
    c[2] = c[2].add_i64(-4);
    c
}

/// Ascending coefficients `s₀, …, s₄` of `S`.
pub fn s_coeffs<R: Ring>(r: &R, s: &R) -> Vec<R> {
    let r2 = r.square();
    let r3 = r2.mul(r);
    let r4 = r3.mul(r);
    let s1p = s.add_i64(1);
    let s2 = s.square();
    let s3 = s2.mul(s);
    let rs = r.mul(s);

    let c4 = r.add(s).add_i64(1).square();
    let c3 = s
        .mul(&r3)
        .mul_i64(4)
        .add(&s.mul(&s1p).mul(&r2).mul_i64(8))
        .add(&s3.mul_i64(4).add(&s2.mul_i64(8)).add(&s.mul_i64(8)).add_i64(2).mul(r))
        .add(&s.mul_i64(2))
        .add_i64(2);
    let c2 = s
        .mul(&s.mul_i64(2).add_i64(-1))
        .mul(&r4)
        .mul_i64(2)
        .add(&s.mul(&s1p).mul(&s.mul_i64(4).add_i64(-3)).mul(&r3).mul_i64(2))
        .add(
            &s.mul(&s3.mul_i64(2).add(&s2).add(&s.mul_i64(6)).add_i64(4))
                .mul(&r2)
                .mul_i64(2),
        )
        .sub(&s.mul(&s1p).mul(&s2.add(&s.mul_i64(2)).add_i64(-6)).mul(r).mul_i64(2))
        .add_i64(1);
    let c1_inner = s
        .mul(&r4)
        .mul_i64(2)
        .add(&s.mul(&s1p).mul(&r3).mul_i64(6))
        .add(&s3.mul_i64(6).sub(&s2.mul_i64(4)).sub(&s.mul_i64(8)).add_i64(-1).mul(&r2))
        .add(
            &s1p.mul(&s3.add(&s2.mul_i64(2)).sub(&s.mul_i64(6)).add_i64(-1))
                .mul(r)
                .mul_i64(2),
        )
        .sub(&s2)
        .sub(&s.mul_i64(2))
        .add_i64(-2);
    let c1 = rs.mul(&c1_inner).mul_i64(-2);
    let s2s2 = s2.add(&s.mul_i64(2)).add_i64(2);
    let c0_inner = r4
        .add(&s1p.mul(&r3).mul_i64(4))
        .add(&s2.mul_i64(22).add(&s.mul_i64(28)).add_i64(8).mul(&r2))
        .add(&s1p.mul(&s2.add(&s.mul_i64(6)).add_i64(2)).mul(r).mul_i64(4))
        .add(&s2s2.square());
    let c0 = rs.square().mul(&c0_inner);
    alloc::vec![c0, c1, c2, c3, c4]
}

fn to_ratpoly(coeffs: Vec<QuadExt>) -> Result<RatPoly, ClassifyError> {
    coeffs
        .into_iter()
        .map(|c| c.to_rational().cloned().ok_or(ClassifyError::IrrationalCoefficient))
        .collect::<Result<Vec<_>, _>>()
        .map(RatPoly::new)
}

/// `(L, M, S)` from the general coefficient formulas, evaluated with the
/// exact eigenvalues. The coefficients are symmetric in `r, s`, so they
/// come out rational even when `r, s` are conjugate surds.
pub fn lms_general(p: &SrgParams) -> Result<(RatPoly, RatPoly, RatPoly), ClassifyError> {
    Ok((
        to_ratpoly(l_coeffs(&p.r, &p.s))?,
        to_ratpoly(m_coeffs(&p.r, &p.s))?,
        to_ratpoly(s_coeffs(&p.r, &p.s))?,
    ))
}

/// Specialization for `r + s = −1`, written in `t = r(r+1) = k₁/2` so that
/// no surd appears:
/// `L = X³ − 2(t−1)X² − (8t−1)/2·X + t(4t−1)/2`,
/// `M = L − 4(X − t)²`,
/// `S = −(X − t)(4tX² − (16t²+1)X + 16t³ + t)`.
pub fn lms_conference(t: &BigRational) -> (RatPoly, RatPoly, RatPoly) {
    let one = int(1);
    let l = RatPoly::new(alloc::vec![
        t * (int(4) * t - &one) / int(2),
        -(int(8) * t - &one) / int(2),
        int(-2) * (t - &one),
        one.clone(),
    ]);
    let shift = RatPoly::linear_root(t);
    let m = &l - &(&shift * &shift).scale(&int(4));
    let s1 = RatPoly::new(alloc::vec![
        int(16) * t * t * t + t,
        -(int(16) * t * t + &one),
        int(4) * t,
    ]);
    let s = -(&shift * &s1);
    (l, m, s)
}

/// Specialization for `r + s = 0`:
/// `L = (X² + X/2 − r²)(X − (2r²−1))`,
/// `M = (2X² − 5X + 2r² + 1)(X − 2r²)/2`,
/// `S = (X − (2r²−1))²(X − 2r²)²`.
pub fn lms_zero_sum(r: i64) -> (RatPoly, RatPoly, RatPoly) {
    let r2 = int(r * r);
    let half = rat(1, 2);
    let bp = RatPoly::linear_root(&(int(2) * &r2 - int(1)));
    let bp1 = RatPoly::linear_root(&(int(2) * &r2));
    let quad_l = RatPoly::new(alloc::vec![-r2.clone(), half.clone(), int(1)]);
    let quad_m = RatPoly::new(alloc::vec![int(2) * &r2 + int(1), int(-5), int(2)]);
    let l = &quad_l * &bp;
    let m = (&quad_m * &bp1).scale(&half);
    let s = (&bp * &bp1).pow(2);
    (l, m, s)
}

/// Which closed-form specialization applies to a parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialForm {
    /// `r + s = −1`.
    Conference,
    /// `r + s = 0`.
    ZeroSum,
}

/// `L, M, S` and their values at `k₁`, with the derived points
/// `h = √(4r(r+1)s(s+1)+1)`, `β₊ = −rs − 1/2 + h/2` and
/// `δ = −rs + √(r(r+1)s(s+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmsEvaluation {
    pub l: RatPoly,
    pub m: RatPoly,
    pub s: RatPoly,
    pub lk: BigRational,
    pub mk: BigRational,
    pub sk: BigRational,
    pub h: QuadExt,
    pub beta_plus: QuadExt,
    pub delta: QuadExt,
    /// Specialization cross-checked against the general form, if any.
    pub special: Option<SpecialForm>,
}

/// `r(r+1)s(s+1) = rs(rs + r + s + 1)`.
pub fn rho(p: &SrgParams) -> i64 {
    let (sum, prod) = (p.r_plus_s(), p.r_times_s());
    prod * (prod + sum + 1)
}

/// Builds the evaluation. When a specialization applies, its polynomials
/// must coincide with the general ones.
pub fn lms_at_k1(p: &SrgParams) -> Result<LmsEvaluation, ClassifyError> {
    let (l, m, s) = lms_general(p)?;
    let special = if p.r_plus_s() == -1 {
        let t = BigRational::new(p.k1.into(), 2.into());
        // For a conference graph r(r+1) = k₁/2.
        let t_eig = (&p.r * &(&p.r + &QuadExt::one())).to_rational().cloned();
        if t_eig.as_ref() == Some(&t) {
            let spec = lms_conference(&t);
            if spec != (l.clone(), m.clone(), s.clone()) {
                return Err(ClassifyError::FormMismatch(SpecialForm::Conference));
            }
            Some(SpecialForm::Conference)
        } else {
            None
        }
    } else if p.r_plus_s() == 0 {
        let (r, _) = p.integer_eigenvalues().ok_or(ClassifyError::IrrationalCoefficient)?;
        if lms_zero_sum(r) != (l.clone(), m.clone(), s.clone()) {
            return Err(ClassifyError::FormMismatch(SpecialForm::ZeroSum));
        }
        Some(SpecialForm::ZeroSum)
    } else {
        None
    };
    let k = int(p.k1);
    let rho = int(rho(p));
    let h = QuadExt::sqrt_rational(&(int(4) * &rho + int(1)))?;
    let minus_rs = QuadExt::from_int(-p.r_times_s());
    let beta_plus = &(&minus_rs - &QuadExt::from_rational(rat(1, 2))) + &h.scale(&rat(1, 2));
    let delta = &minus_rs + &QuadExt::sqrt_rational(&rho)?;
    Ok(LmsEvaluation {
        lk: l.eval(&k),
        mk: m.eval(&k),
        sk: s.eval(&k),
        l,
        m,
        s,
        h,
        beta_plus,
        delta,
        special,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::params_from_nklm;

    #[test]
    fn values_at_k1() {
        let t6 = lms_at_k1(&params_from_nklm(15, 8, 4, 4).unwrap()).unwrap();
        assert_eq!((t6.lk.clone(), t6.mk.clone(), t6.sk.clone()), (int(64), int(0), int(0)));
        assert_eq!(t6.special, Some(SpecialForm::ZeroSum));
        assert_eq!(t6.beta_plus, QuadExt::from_int(7));

        let p9 = lms_at_k1(&params_from_nklm(9, 4, 1, 2).unwrap()).unwrap();
        assert_eq!((p9.lk.clone(), p9.mk.clone(), p9.sk.clone()), (int(9), int(-7), int(4)));
        assert_eq!(p9.special, Some(SpecialForm::Conference));
    }

    #[test]
    fn conference_with_irrational_eigenvalues() {
        let p13 = lms_at_k1(&params_from_nklm(13, 6, 2, 3).unwrap()).unwrap();
        assert_eq!(p13.special, Some(SpecialForm::Conference));
        // t = 3: L(2t) = t(4t+1)/2, M(2t) = −t(4t−1)/2, S(2t) = t².
        assert_eq!((p13.lk, p13.mk, p13.sk), (rat(39, 2), rat(-33, 2), int(9)));
    }

    #[test]
    fn conference_l_at_r_equals_one() {
        let (l, _, s) = lms_conference(&int(2));
        assert_eq!(l, RatPoly::new(alloc::vec![int(7), rat(-15, 2), int(-2), int(1)]));
        assert_eq!(s.eval(&int(4)), int(4));
    }

    #[test]
    fn zero_sum_s_vanishes_at_beta_plus() {
        let (_, _, s) = lms_zero_sum(2);
        assert_eq!(s.eval(&int(7)), int(0));
        assert_eq!(s.eval(&int(8)), int(0));
    }

    #[test]
    fn m_is_l_minus_square() {
        let p = params_from_nklm(10, 3, 0, 1).unwrap();
        let (l, m, _) = lms_general(&p).unwrap();
        let sq = RatPoly::from_i64s(&[p.r_times_s(), 1]).pow(2).scale(&int(4));
        assert_eq!(m, &l - &sq);
    }
}
