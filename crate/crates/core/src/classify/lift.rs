//! From real parts `(a₀, a₁, a₂)` back to unit-modulus weights.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;

use super::ClassifyError;
use crate::arith::{int, ArithError, QuadExt};
use crate::hadamard::{eval_ek_srg, CoreWeights};
use crate::srg::SrgParams;

/// One sign choice `b_j = ε_j·√(1 − a_j²)` and whether it solves `e_k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub signs: [i8; 3],
    pub weights: CoreWeights,
    /// All `e_k` vanish exactly and `w₁ ≠ w₂`.
    pub verified: bool,
}

fn one_minus_square(a: &QuadExt) -> Result<QuadExt, ArithError> {
    QuadExt::one().try_sub(&a.try_mul(a)?)
}

/// `|a_j| ≤ 1` for every `j`; the first index that fails otherwise.
pub fn first_out_of_range(a: &[QuadExt; 3]) -> Result<Option<usize>, ArithError> {
    for (j, x) in a.iter().enumerate() {
        if one_minus_square(x)?.signum()? == Ordering::Less {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Enumerates the sign vectors `ε ∈ {±1}³` (skipping duplicates where
/// `b_j = 0`) and tests each lift with exact `e_k` evaluation.
///
/// Requires rational `a_j` whose `1 − a_j²` are rational multiples of one
/// square-free integer; otherwise reports `MixedDiscriminants`.
pub fn lift_to_unit_circle(a: &[QuadExt; 3], p: &SrgParams) -> Result<Vec<Lift>, ClassifyError> {
    let mut re: Vec<BigRational> = Vec::with_capacity(3);
    for x in a {
        re.push(x.to_rational().cloned().ok_or(ClassifyError::MixedDiscriminants)?);
    }
    let mut ib: Vec<QuadExt> = Vec::with_capacity(3);
    let mut d = 0;
    for x in &re {
        let b_sq = int(1) - x * x;
        if b_sq < int(0) {
            return Ok(Vec::new());
        }
        // i·√(1 − a²) = √(−(1 − a²)).
        let im = QuadExt::sqrt_rational(&-b_sq)?;
        if im.d() != 0 {
            if d != 0 && d != im.d() {
                return Err(ClassifyError::MixedDiscriminants);
            }
            d = im.d();
        }
        ib.push(im);
    }
    let mut out: Vec<Lift> = Vec::new();
    for mask in 0u8..8 {
        let signs: [i8; 3] = core::array::from_fn(|j| if mask >> j & 1 == 1 { -1 } else { 1 });
        if (0..3).any(|j| signs[j] < 0 && ib[j].is_zero()) {
            continue;
        }
        let w: [QuadExt; 3] = core::array::from_fn(|j| {
            let b = if signs[j] < 0 { -&ib[j] } else { ib[j].clone() };
            &QuadExt::from_rational(re[j].clone()) + &b
        });
        let [w0, w1, w2] = w;
        let weights = CoreWeights::new(w0, w1, w2)?;
        let verified = !weights.is_degenerate() && (0..3).all(|k| eval_ek_srg(p, &weights, k).is_zero());
        out.push(Lift {
            signs,
            weights,
            verified,
        });
    }
    Ok(out)
}

/// Decides inside the field of the `a_j` whether real `b_j` with
/// `b_j² = 1 − a_j²` exist that make `W` complex Hadamard with `w₁ ≠ w₂`.
///
/// With `B_j = 1 − a_j²`, the imaginary part of `e₀ = 0` forces
/// `b₁b₂ = (B₀ − k₁²B₁ − k₂²B₂)/(2k₁k₂)` and expresses `b₀b₁`, `b₀b₂` through
/// it; the remaining conditions are polynomial in the `a_j` and these
/// products, so no nested radical is needed.
pub fn real_parts_admit_solution(a: &[QuadExt; 3], p: &SrgParams) -> Result<bool, ArithError> {
    if first_out_of_range(a)?.is_some() {
        return Ok(false);
    }
    let k1 = QuadExt::from_int(p.k1);
    let k2 = QuadExt::from_int(p.k2);
    let re_e0 = QuadExt::one()
        .try_add(&a[0])?
        .try_add(&k1.try_mul(&a[1])?)?
        .try_add(&k2.try_mul(&a[2])?)?;
    if !re_e0.is_zero() {
        return Ok(false);
    }
    let b: [QuadExt; 3] = [one_minus_square(&a[0])?, one_minus_square(&a[1])?, one_minus_square(&a[2])?];
    let c = b[0]
        .try_sub(&k1.try_mul(&k1)?.try_mul(&b[1])?)?
        .try_sub(&k2.try_mul(&k2)?.try_mul(&b[2])?)?
        .scale(&BigRational::new(1.into(), (2 * p.k1 * p.k2).into()));
    if c.try_mul(&c)? != b[1].try_mul(&b[2])? {
        return Ok(false);
    }
    if a[1] == a[2] && b[1] == b[2] && c == b[1] {
        return Ok(false);
    }
    let b01 = k1.try_mul(&b[1])?.try_add(&k2.try_mul(&c)?)?.try_mul(&QuadExt::from_int(-1))?;
    let b02 = k1.try_mul(&c)?.try_add(&k2.try_mul(&b[2])?)?.try_mul(&QuadExt::from_int(-1))?;
    // Re(w_i·conj w_j) for i < j.
    let re01 = a[0].try_mul(&a[1])?.try_add(&b01)?;
    let re02 = a[0].try_mul(&a[2])?.try_add(&b02)?;
    let re12 = a[1].try_mul(&a[2])?.try_add(&c)?;
    let target = QuadExt::from_int(p.n + 1);
    for row in &p.eigenmatrix()[1..] {
        let mut sum = QuadExt::zero();
        for x in row {
            sum = sum.try_add(&x.try_mul(x)?)?;
        }
        let cross = row[0]
            .try_mul(&row[1])?
            .try_mul(&re01)?
            .try_add(&row[0].try_mul(&row[2])?.try_mul(&re02)?)?
            .try_add(&row[1].try_mul(&row[2])?.try_mul(&re12)?)?;
        sum = sum.try_add(&cross.scale(&int(2)))?;
        if sum != target {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::srg::params_from_nklm;

    fn q(n: i64, d: i64) -> QuadExt {
        QuadExt::from_rational(rat(n, d))
    }

    #[test]
    fn paley9_family_a() {
        let p = params_from_nklm(9, 4, 1, 2).unwrap();
        let lifts = lift_to_unit_circle(&[q(-1, 1), q(0, 1), q(0, 1)], &p).unwrap();
        // b₀ = 0, so only four sign vectors are distinct.
        assert_eq!(lifts.len(), 4);
        let good: Vec<_> = lifts.iter().filter(|l| l.verified).collect();
        assert_eq!(good.len(), 2);
        let i = QuadExt::i();
        assert!(good.iter().any(|l| l.weights.w()[1] == i && l.weights.w()[2] == -&i));
        assert!(real_parts_admit_solution(&[q(-1, 1), q(0, 1), q(0, 1)], &p).unwrap());
    }

    #[test]
    fn paley9_family_b() {
        let p = params_from_nklm(9, 4, 1, 2).unwrap();
        let a = [q(1, 1), q(-1, 4), q(-1, 4)];
        let good: Vec<_> = lift_to_unit_circle(&a, &p).unwrap().into_iter().filter(|l| l.verified).collect();
        assert_eq!(good.len(), 2);
        assert_eq!(good[0].weights.discriminant(), -15);
        assert!(real_parts_admit_solution(&a, &p).unwrap());
        // The value −1/3 does not lift.
        let wrong = [q(1, 1), q(-1, 3), q(-1, 3)];
        assert!(lift_to_unit_circle(&wrong, &p).unwrap().iter().all(|l| !l.verified));
        assert!(!real_parts_admit_solution(&wrong, &p).unwrap());
    }

    #[test]
    fn triangular_real_solution() {
        let p = params_from_nklm(15, 8, 4, 4).unwrap();
        let a = [q(1, 1), q(-1, 1), q(1, 1)];
        let lifts = lift_to_unit_circle(&a, &p).unwrap();
        assert_eq!(lifts.len(), 1);
        assert!(lifts[0].verified);
        assert!(real_parts_admit_solution(&a, &p).unwrap());
    }

    #[test]
    fn out_of_range_and_mixed() {
        let p = params_from_nklm(9, 4, 1, 2).unwrap();
        assert_eq!(first_out_of_range(&[q(0, 1), q(3, 2), q(0, 1)]).unwrap(), Some(1));
        assert!(lift_to_unit_circle(&[q(0, 1), q(3, 2), q(0, 1)], &p).unwrap().is_empty());
        // 1 − 1/4 = 3/4 and 1 − 1/9 = 8/9 live in different fields.
        assert_eq!(
            lift_to_unit_circle(&[q(1, 2), q(1, 3), q(0, 1)], &p),
            Err(ClassifyError::MixedDiscriminants)
        );
    }
}
