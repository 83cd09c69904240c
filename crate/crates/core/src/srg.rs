//! Parameters of strongly regular graphs viewed as 2-class symmetric
//! association schemes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{int, rational, QuadExt};

/// Why a parameter tuple cannot be the tuple of a strongly regular graph
/// (as far as the checks here go).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// `0 < k₁ < n − 1`, `0 ≤ λ < k₁`, `0 ≤ μ ≤ k₁` violated.
    OutOfRange,
    /// `k₂·μ ≠ k₁(k₁ − λ − 1)`.
    CountingIdentity { lhs: i64, rhs: i64 },
    /// The complement would have `λ = n − 2k₁ + μ − 2 < 0`.
    ComplementLambdaNegative { lambda_c: i64 },
    /// The second valency after normalization is below 2.
    ValencyTooSmall { k2: i64 },
    /// An eigenvalue multiplicity is not a non-negative integer.
    MultiplicityNotIntegral { m1: QuadExt, m2: QuadExt },
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfRange => write!(f, "parameters out of range"),
            Self::CountingIdentity { lhs, rhs } => {
                write!(f, "k2*mu = {lhs} differs from k1*(k1-lambda-1) = {rhs}")
            }
            Self::ComplementLambdaNegative { lambda_c } => {
                write!(f, "complement would have lambda = {lambda_c} < 0")
            }
            Self::ValencyTooSmall { k2 } => write!(f, "second valency k2 = {k2} is below 2"),
            Self::MultiplicityNotIntegral { m1, m2 } => {
                write!(f, "multiplicities m1 = {m1}, m2 = {m2} are not both integers")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SrgError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(Infeasibility),
    #[error("k1 + rs vanishes (mu = 0)")]
    ZeroMu,
}

/// Normalized parameters `(n, k₁, k₂, λ, μ)` with eigenvalues `r > s` of the
/// first relation and their multiplicities.
///
/// Normalized means `r + s ≥ −1`; a tuple with `r + s ≤ −2` is replaced by
/// its complement on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: i64,
    pub k1: i64,
    pub k2: i64,
    pub lambda: i64,
    pub mu: i64,
    pub r: QuadExt,
    pub s: QuadExt,
    pub m1: BigRational,
    pub m2: BigRational,
    /// True when the input tuple was replaced by its complement.
    pub complemented: bool,
}

/// Builds and validates parameters from `(n, k₁, λ, μ)`.
pub fn params_from_nklm(n: i64, k1: i64, lambda: i64, mu: i64) -> Result<SrgParams, SrgError> {
    let infeasible = |why| Err(SrgError::InfeasibleParams(why));
    if !(k1 > 0 && k1 < n - 1 && lambda >= 0 && lambda < k1 && mu >= 0 && mu <= k1) {
        return infeasible(Infeasibility::OutOfRange);
    }
    let k2 = n - 1 - k1;
    let (lhs, rhs) = (k2 * mu, k1 * (k1 - lambda - 1));
    if lhs != rhs {
        return infeasible(Infeasibility::CountingIdentity { lhs, rhs });
    }
    let lambda_c = n - 2 - 2 * k1 + mu;
    if lambda_c < 0 {
        return infeasible(Infeasibility::ComplementLambdaNegative { lambda_c });
    }
    if lambda - mu <= -2 {
        // Complement: swaps the two non-trivial relations, r+s ↦ −2−(r+s).
        let mu_c = n - 2 * k1 + lambda;
        let mut p = params_from_nklm(n, k2, lambda_c, mu_c)?;
        p.complemented = true;
        return Ok(p);
    }
    if k2 < 2 {
        return infeasible(Infeasibility::ValencyTooSmall { k2 });
    }
    let (r, s) = eigenvalues(k1, lambda, mu);
    let (m1, m2) = multiplicities(n, k1, lambda, mu);
    let as_count = |m: &QuadExt| {
        m.to_rational()
            .filter(|q| rational::is_integer(q) && *q >= &BigRational::zero())
            .cloned()
    };
    let (Some(m1r), Some(m2r)) = (as_count(&m1), as_count(&m2)) else {
        return infeasible(Infeasibility::MultiplicityNotIntegral { m1, m2 });
    };
    Ok(SrgParams {
        n,
        k1,
        k2,
        lambda,
        mu,
        r,
        s,
        m1: m1r,
        m2: m2r,
        complemented: false,
    })
}

/// Roots `r > s` of `x² − (λ−μ)x − (k₁−μ)`.
fn eigenvalues(k1: i64, lambda: i64, mu: i64) -> (QuadExt, QuadExt) {
    let q = discriminant(k1, lambda, mu);
    let root = QuadExt::sqrt_rational(&int(q)).expect("q is a small non-negative integer");
    let half = rational::rat(1, 2);
    let mid = QuadExt::from_int(lambda - mu);
    ((&mid + &root).scale(&half), (&mid - &root).scale(&half))
}

/// `q = (λ−μ)² + 4(k₁−μ)`, positive whenever `μ ≤ k₁` and not `λ = μ = k₁`.
fn discriminant(k1: i64, lambda: i64, mu: i64) -> i64 {
    (lambda - mu) * (lambda - mu) + 4 * (k1 - mu)
}

/// `m₁ = ½(n−1 − (2k₁ + (n−1)(λ−μ))/√q)`, `m₂` with the opposite sign.
fn multiplicities(n: i64, k1: i64, lambda: i64, mu: i64) -> (QuadExt, QuadExt) {
    let q = discriminant(k1, lambda, mu);
    let root = QuadExt::sqrt_rational(&int(q)).expect("q is a small non-negative integer");
    let t = QuadExt::from_int(2 * k1 + (n - 1) * (lambda - mu));
    let frac = &t / &root;
    let half = rational::rat(1, 2);
    let base = QuadExt::from_int(n - 1);
    ((&base - &frac).scale(&half), (&base + &frac).scale(&half))
}

impl SrgParams {
    /// `(n, k₁, λ, μ)`.
    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.n, self.k1, self.lambda, self.mu)
    }

    /// `r + s = λ − μ`.
    pub fn r_plus_s(&self) -> i64 {
        self.lambda - self.mu
    }

    /// `r·s = μ − k₁`.
    pub fn r_times_s(&self) -> i64 {
        self.mu - self.k1
    }

    /// Integer eigenvalues, when both are rational.
    pub fn integer_eigenvalues(&self) -> Option<(i64, i64)> {
        Some((
            rational::to_i64(self.r.to_rational()?)?,
            rational::to_i64(self.s.to_rational()?)?,
        ))
    }

    /// Conference test. Both characterizations are evaluated and must agree;
    /// a disagreement would mean corrupted parameters and panics.
    pub fn is_conference(&self) -> bool {
        let two_r_r1 = (&self.r * &(&self.r + &QuadExt::one())).scale(&int(2));
        let by_eigen = two_r_r1 == QuadExt::from_int(self.k1) && self.r_plus_s() == -1;
        let by_mult = self.m1 == self.m2;
        assert_eq!(by_eigen, by_mult, "conference characterizations disagree");
        by_eigen
    }

    /// First eigenmatrix with rows `(1, k₁, k₂)`, `(1, r, −r−1)`,
    /// `(1, s, −s−1)`.
    pub fn eigenmatrix(&self) -> [[QuadExt; 3]; 3] {
        let one = QuadExt::one();
        [
            [one.clone(), QuadExt::from_int(self.k1), QuadExt::from_int(self.k2)],
            [one.clone(), self.r.clone(), -(&self.r + &one)],
            [one.clone(), self.s.clone(), -(&self.s + &one)],
        ]
    }

    /// Exact checks of every parameter relation; returns the name of the
    /// first failing one.
    pub fn check_invariants(&self) -> Result<(), &'static str> {
        let r = &self.r;
        let s = &self.s;
        let rs = r * s;
        if QuadExt::from_int(self.mu) != &QuadExt::from_int(self.k1) + &rs {
            return Err("mu = k1 + rs");
        }
        if QuadExt::from_int(self.lambda) != &(r + s) + &QuadExt::from_int(self.mu) {
            return Err("lambda = r + s + mu");
        }
        if self.k2 * self.mu != self.k1 * (self.k1 - self.lambda - 1) {
            return Err("k2 mu = k1 (k1 - lambda - 1)");
        }
        if self.n != 1 + self.k1 + self.k2 {
            return Err("n = 1 + k1 + k2");
        }
        if self.k2 < 2 {
            return Err("k2 >= 2");
        }
        if !rs.is_rational() || !rational::is_integer(rs.a()) {
            return Err("rs integral");
        }
        let zero = QuadExt::zero();
        let minus_one = QuadExt::from_int(-1);
        if r.cmp_real(&zero) == Ok(Ordering::Less)
            || s.cmp_real(&minus_one) == Ok(Ordering::Greater)
            || self.r_plus_s() < -1
        {
            return Err("r >= 0, s <= -1, r + s >= -1");
        }
        if &self.m1 + &self.m2 != int(self.n - 1) {
            return Err("m1 + m2 = n - 1");
        }
        let trace = &r.scale(&self.m1) + &s.scale(&self.m2);
        if trace != QuadExt::from_int(-self.k1) {
            return Err("m1 r + m2 s = -k1");
        }
        Ok(())
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k1, self.lambda, self.mu)
    }
}

/// `k₂ = −k₁(r+1)(s+1)/(k₁+rs)`.
pub fn k2_from_eigen(k1: &BigRational, r: &QuadExt, s: &QuadExt) -> Result<BigRational, SrgError> {
    let one = QuadExt::one();
    let k1q = QuadExt::from_rational(k1.clone());
    let den = &k1q + &(r * s);
    if den.is_zero() {
        return Err(SrgError::ZeroMu);
    }
    let num = -(&(&k1q * &(r + &one)) * &(s + &one));
    let k2 = &num / &den;
    Ok(k2
        .to_rational()
        .expect("k2 is symmetric in r and s, hence rational")
        .clone())
}

/// Reason a tuple cannot carry a bordered complex Hadamard matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundViolation {
    /// The smaller eigenvalue must be below −1.
    SNotBelowMinusOne,
    /// `n + 1 > (Σ_j |P_{k,j}|)²` for eigenmatrix row `k`; for `k = 2`
    /// this is `n + 1 > 4s²`.
    RowBound { row: usize, n_plus_1: i64, bound: QuadExt },
}

impl fmt::Display for BoundViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SNotBelowMinusOne => write!(f, "s must be below -1"),
            Self::RowBound {
                row,
                n_plus_1,
                bound,
            } => write!(
                f,
                "n+1 = {n_plus_1} exceeds (sum_j |P_{row},j|)^2 = {bound}"
            ),
        }
    }
}

/// Outcome of the necessary conditions, with both row bounds echoed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub violation: Option<BoundViolation>,
    /// `(Σ_j |P_{1,j}|)² = 4(r+1)²`.
    pub row1_bound: QuadExt,
    /// `(Σ_j |P_{2,j}|)² = 4s²`.
    pub row2_bound: QuadExt,
}

impl FeasibilityReport {
    pub fn passes(&self) -> bool {
        self.violation.is_none()
    }
}

/// Necessary conditions for a bordered complex Hadamard matrix with core in
/// the Bose–Mesner algebra: `s < −1` and `n + 1 ≤ (Σ_j |P_{k,j}|)²` for both
/// non-trivial rows.
pub fn feasibility_bounds(p: &SrgParams) -> FeasibilityReport {
    let four = int(4);
    let r1 = &p.r + &QuadExt::one();
    let row1_bound = (&r1 * &r1).scale(&four);
    let row2_bound = (&p.s * &p.s).scale(&four);
    let n1 = QuadExt::from_int(p.n + 1);
    let violation = if p.s.cmp_real(&QuadExt::from_int(-1)) != Ok(Ordering::Less) {
        Some(BoundViolation::SNotBelowMinusOne)
    } else if n1.cmp_real(&row1_bound) == Ok(Ordering::Greater) {
        Some(BoundViolation::RowBound {
            row: 1,
            n_plus_1: p.n + 1,
            bound: row1_bound.clone(),
        })
    } else if n1.cmp_real(&row2_bound) == Ok(Ordering::Greater) {
        Some(BoundViolation::RowBound {
            row: 2,
            n_plus_1: p.n + 1,
            bound: row2_bound.clone(),
        })
    } else {
        None
    };
    FeasibilityReport {
        violation,
        row1_bound,
        row2_bound,
    }
}

/// All normalized feasible tuples with `n ≤ n_max`, sorted by
/// `(n, k₁, λ, μ)`. A tuple and its complement appear once, as the
/// normalized representative.
pub fn enumerate_params(n_max: i64) -> Vec<SrgParams> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 4..=n_max {
        for k1 in 1..=n - 2 {
            let k2 = n - 1 - k1;
            for mu in 0..=k1 {
                // λ from k₂μ = k₁(k₁ − λ − 1).
                let num = k1 * (k1 - 1) - k2 * mu;
                if num < 0 || num % k1 != 0 {
                    continue;
                }
                let lambda = num / k1;
                if let Ok(p) = params_from_nklm(n, k1, lambda, mu) {
                    if seen.insert(p.tuple()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort_by_key(|p| p.tuple());
    out
}

/// The tuple `(4t+1, 2t, t−1, t)` of a conference graph with `k₁ = 2t`.
pub fn conference_tuple(t: i64) -> (i64, i64, i64, i64) {
    (4 * t + 1, 2 * t, t - 1, t)
}

/// Whether a rational is a non-negative integer.
pub fn is_count(q: &BigRational) -> bool {
    rational::is_integer(q) && *q >= BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(n: i64, k: i64, l: i64, m: i64) -> SrgParams {
        params_from_nklm(n, k, l, m).unwrap()
    }

    #[test]
    fn paley_nine() {
        let x = p(9, 4, 1, 2);
        assert_eq!(x.r, QuadExt::from_int(1));
        assert_eq!(x.s, QuadExt::from_int(-2));
        assert_eq!((x.k2, x.m1.clone(), x.m2.clone()), (4, int(4), int(4)));
        assert!(x.is_conference());
        x.check_invariants().unwrap();
    }

    #[test]
    fn triangular_six() {
        let x = p(15, 8, 4, 4);
        assert_eq!(x.integer_eigenvalues(), Some((2, -2)));
        assert_eq!((x.k2, x.m1.clone(), x.m2.clone()), (6, int(5), int(9)));
        assert!(!x.is_conference());
    }

    #[test]
    fn paley_thirteen_irrational() {
        let x = p(13, 6, 2, 3);
        let root = QuadExt::sqrt_rational(&int(13)).unwrap();
        let half = rat(1, 2);
        assert_eq!(x.r, (&QuadExt::from_int(-1) + &root).scale(&half));
        assert_eq!(x.s, (&QuadExt::from_int(-1) - &root).scale(&half));
        assert_eq!((x.m1.clone(), x.m2.clone()), (int(6), int(6)));
        assert!(x.is_conference());
        assert!(p(5, 2, 0, 1).is_conference());
        x.check_invariants().unwrap();
    }

    #[test]
    fn non_integral_multiplicity_is_reported() {
        match params_from_nklm(15, 7, 3, 3) {
            Err(SrgError::InfeasibleParams(Infeasibility::MultiplicityNotIntegral { m1, .. })) => {
                assert_eq!(m1, QuadExt::from_rational(rat(21, 4)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complement_with_negative_lambda_is_rejected() {
        // Counting identity and multiplicities pass, but the complement
        // (21, 4, -1, 0) is impossible.
        assert!(matches!(
            params_from_nklm(21, 16, 12, 12),
            Err(SrgError::InfeasibleParams(Infeasibility::ComplementLambdaNegative { lambda_c: -1 }))
        ));
    }

    #[test]
    fn complement_is_normalized() {
        // Clebsch graph: r = 1, s = −3, r + s = −2.
        let x = p(16, 5, 0, 2);
        assert!(x.complemented);
        assert_eq!(x.tuple(), (16, 10, 6, 6));
        assert_eq!(x.integer_eigenvalues(), Some((2, -2)));
        // Normalizing a normalized tuple is the identity.
        let again = p(x.n, x.k1, x.lambda, x.mu);
        assert!(!again.complemented);
        assert_eq!(again.tuple(), x.tuple());
    }

    #[test]
    fn eigenmatrix_rows() {
        let rows = |x: &SrgParams| -> Vec<Vec<QuadExt>> {
            x.eigenmatrix().iter().map(|r| r.to_vec()).collect()
        };
        let q = |v: &[i64]| v.iter().map(|&c| QuadExt::from_int(c)).collect::<Vec<_>>();
        assert_eq!(rows(&p(9, 4, 1, 2)), [q(&[1, 4, 4]), q(&[1, 1, -2]), q(&[1, -2, 1])]);
        assert_eq!(rows(&p(15, 8, 4, 4)), [q(&[1, 8, 6]), q(&[1, 2, -3]), q(&[1, -2, 1])]);
    }

    #[test]
    fn k2_from_eigenvalues() {
        let q = QuadExt::from_int;
        assert_eq!(k2_from_eigen(&int(8), &q(2), &q(-2)).unwrap(), int(6));
        assert_eq!(k2_from_eigen(&int(4), &q(1), &q(-2)).unwrap(), int(4));
        assert_eq!(k2_from_eigen(&int(2), &q(1), &q(-2)), Err(SrgError::ZeroMu));
        let x = p(13, 6, 2, 3);
        assert_eq!(k2_from_eigen(&int(6), &x.r, &x.s).unwrap(), int(6));
    }

    #[test]
    fn bounds() {
        assert!(feasibility_bounds(&p(9, 4, 1, 2)).passes());
        let t6 = feasibility_bounds(&p(15, 8, 4, 4));
        assert!(t6.passes());
        assert_eq!(t6.row2_bound, QuadExt::from_int(16));
        // Two disjoint triangles: s = −1.
        let tri = p(6, 2, 1, 0);
        assert_eq!(tri.s, QuadExt::from_int(-1));
        assert_eq!(
            feasibility_bounds(&tri).violation,
            Some(BoundViolation::SNotBelowMinusOne)
        );
    }

    #[test]
    fn enumeration_contains_known_tuples() {
        let all = enumerate_params(16);
        let tuples: Vec<_> = all.iter().map(|p| p.tuple()).collect();
        for t in [(5, 2, 0, 1), (9, 4, 1, 2), (10, 3, 0, 1), (10, 6, 3, 4), (13, 6, 2, 3), (15, 8, 4, 4), (16, 10, 6, 6)] {
            assert!(tuples.contains(&t), "{t:?} missing");
        }
        // Complements never appear twice.
        assert!(!tuples.contains(&(16, 5, 0, 2)));
        for p in &all {
            p.check_invariants().unwrap();
        }
    }
}
