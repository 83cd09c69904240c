//! The decision procedure: every unit-weight triple `(w₀, w₁, w₂)` making
//! the bordered matrix of a strongly regular graph complex Hadamard, plus
//! exhaustive scans over parameter space checked against the closed-form
//! answer.

mod lift;
mod lms;

pub use lift::{first_out_of_range, lift_to_unit_circle, real_parts_admit_solution, Lift};
pub use lms::{
    l_coeffs, lms_at_k1, lms_conference, lms_general, lms_zero_sum, m_coeffs, rho, s_coeffs, LmsEvaluation,
    SpecialForm,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;

use crate::arith::{int, ArithError, QuadExt};
use crate::hadamard::{theorem_weights, verify_spectral, CoreWeights, Family, GeneralSchemeData, HadamardError};
use crate::srg::{enumerate_params, feasibility_bounds, BoundViolation, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("L(k1) = M(k1): the quadratic in a1 degenerates")]
    DegenerateQuadratic,
    #[error("a coefficient of the linear solve for a0, a2 vanishes")]
    SingularLinearSolve,
    #[error("1 - a_j^2 do not share one square-free part")]
    MixedDiscriminants,
    #[error("classification of {params} disagrees with the closed form: {detail}")]
    OracleMismatch { params: String, detail: String },
    #[error("specialized {0:?} polynomials differ from the general form")]
    FormMismatch(SpecialForm),
    #[error("polynomial coefficient is irrational")]
    IrrationalCoefficient,
    #[error("lifted weights {0} pass e_k = 0 but fail the eigenvalue test")]
    RouteDisagreement(String),
    #[error("necessary identity {0} fails at a computed solution")]
    NecessityViolated(&'static str),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Hadamard(#[from] HadamardError),
}

/// Choice of sign in front of `√S(k₁)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

/// A reason recorded while classifying. Filters that are necessary
/// conditions explain an empty answer; the rest trace which pipeline
/// branches died and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    /// `s ≥ −1` or an eigenmatrix row bound fails.
    Bound(BoundViolation),
    /// `r + s > 0`, which admits no solution.
    PositiveEigenvalueSum { r_plus_s: i64 },
    /// `S(k₁) < 0`.
    NegativeS { sk: BigRational },
    /// `M(k₁) ≤ ε√S(k₁)/2 ≤ L(k₁)` fails, i.e. `|a₁| > 1` on this branch.
    Sandwich { branch: Branch },
    /// The pipeline could not run (`μ = 0` or a vanishing linear coefficient).
    Degenerate(ClassifyError),
    /// Some `|a_j| > 1`.
    RealPartOutOfRange { branch: Branch, index: usize },
    /// No sign vector lifts the real parts to a solution.
    NoLift { branch: Branch },
    /// The real parts admit no solution; decided without lifting.
    RealPartsRejected { branch: Branch },
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Bound(v) => write!(f, "bound: {v}"),
            Filter::PositiveEigenvalueSum { r_plus_s } => write!(f, "r+s = {r_plus_s} > 0"),
            Filter::NegativeS { sk } => write!(f, "S(k1) = {sk} < 0"),
            Filter::Sandwich { branch } => write!(f, "branch {branch}: M(k1) <= {branch}sqrt(S)/2 <= L(k1) fails"),
            Filter::Degenerate(e) => write!(f, "degenerate: {e}"),
            Filter::RealPartOutOfRange { branch, index } => write!(f, "branch {branch}: |a{index}| > 1"),
            Filter::NoLift { branch } => write!(f, "branch {branch}: no sign vector solves e_k = 0"),
            Filter::RealPartsRejected { branch } => write!(f, "branch {branch}: real parts admit no solution"),
        }
    }
}

/// Which sandwich conditions hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFilter {
    pub sqrt_s: Option<QuadExt>,
    pub feasible: Vec<Branch>,
}

impl SignFilter {
    pub fn is_infeasible(&self) -> bool {
        self.feasible.is_empty()
    }
}

/// Tests `M(k₁) ≤ ±√S(k₁)/2 ≤ L(k₁)`. When `S(k₁) = 0` both branches
/// coincide and only `Plus` is reported.
pub fn sign_filter(e: &LmsEvaluation) -> Result<SignFilter, ArithError> {
    if e.sk < int(0) {
        return Ok(SignFilter {
            sqrt_s: None,
            feasible: Vec::new(),
        });
    }
    let root = QuadExt::sqrt_rational(&e.sk)?;
    let l = QuadExt::from_rational(e.lk.clone());
    let m = QuadExt::from_rational(e.mk.clone());
    let mut feasible = Vec::new();
    let branches: &[Branch] = if root.is_zero() { &[Branch::Plus] } else { &Branch::BOTH };
    for &b in branches {
        let half = root.scale(&BigRational::new(b.sign().into(), 2.into()));
        if m.cmp_real(&half)? != Ordering::Greater && half.cmp_real(&l)? != Ordering::Greater {
            feasible.push(b);
        }
    }
    Ok(SignFilter {
        sqrt_s: Some(root),
        feasible,
    })
}

/// `a₁ = (−L − M ± √S)/(L − M)` at `k₁`.
pub fn solve_a1(e: &LmsEvaluation, branch: Branch) -> Result<QuadExt, ClassifyError> {
    let denom = &e.lk - &e.mk;
    if denom == int(0) {
        return Err(ClassifyError::DegenerateQuadratic);
    }
    if e.sk < int(0) {
        return Err(ArithError::NegativeInput.into());
    }
    let root = QuadExt::sqrt_rational(&e.sk)?.scale(&int(branch.sign()));
    let num = &QuadExt::from_rational(-(&e.lk + &e.mk)) + &root;
    Ok(num.scale(&(int(1) / denom)))
}

/// `h₀ = −k⁵ + (r+s−2rs+1)k⁴ + 3rs(r+s+1)k³ − rs((r+s)²+2(r+s)−1)k² + 4r²s²k + 2r³s³`.
pub fn h0(p: &SrgParams) -> BigRational {
    let (k, sum, prod) = (int(p.k1), int(p.r_plus_s()), int(p.r_times_s()));
    let one = int(1);
    -k.pow(5) + (&sum - int(2) * &prod + &one) * k.pow(4) + int(3) * &prod * (&sum + &one) * k.pow(3)
        - &prod * (&sum * &sum + int(2) * &sum - &one) * k.pow(2)
        + int(4) * prod.pow(2) * &k
        + int(2) * prod.pow(3)
}

/// `ℓ₀ = k(k−r−s−1)(k² + 2rs·k − rs(r+s+1))`.
pub fn l0(p: &SrgParams) -> BigRational {
    let (k, sum, prod) = (int(p.k1), int(p.r_plus_s()), int(p.r_times_s()));
    let one = int(1);
    &k * (&k - &sum - &one) * (&k * &k + int(2) * &prod * &k - &prod * (&sum + &one))
}

/// Linear solves for `a₀` and `a₂` given `a₁`:
/// `2(k+rs)²rs·a₀ = 2k²(k+rs)²a₁ − h₀` and
/// `2(k+rs)r(r+1)s(s+1)·a₂ = 2(k+rs)³a₁ + ℓ₀`.
pub fn solve_a0_a2(a1: &QuadExt, p: &SrgParams) -> Result<(QuadExt, QuadExt), ClassifyError> {
    let (k, prod) = (int(p.k1), int(p.r_times_s()));
    let kr = &k + &prod;
    let rho = int(rho(p));
    if kr == int(0) || prod == int(0) || rho == int(0) {
        return Err(ClassifyError::SingularLinearSolve);
    }
    let two = int(2);
    let a0 = (&a1.scale(&(&two * &k * &k * &kr * &kr)) - &QuadExt::from_rational(h0(p)))
        .scale(&(int(1) / (&two * &kr * &kr * &prod)));
    let a2 = (&a1.scale(&(&two * kr.pow(3))) + &QuadExt::from_rational(l0(p))).scale(&(int(1) / (&two * &kr * &rho)));
    Ok((a0, a2))
}

/// Residuals of the three necessary identities at real parts `a`: the
/// quadratic `(L−M)²a₁² + 2(L²−M²)a₁ + (L+M)² − S` and the two linear
/// relations for `a₀` and `a₂`.
pub fn necessity_residuals(e: &LmsEvaluation, p: &SrgParams, a: &[QuadExt; 3]) -> Result<[QuadExt; 3], ArithError> {
    let (l, m, s) = (&e.lk, &e.mk, &e.sk);
    let q = |x: BigRational| QuadExt::from_rational(x);
    let quad = q((l - m) * (l - m))
        .try_mul(&a[1].try_mul(&a[1])?)?
        .try_add(&q(int(2) * (l * l - m * m)).try_mul(&a[1])?)?
        .try_add(&q((l + m) * (l + m) - s))?;
    let (k, prod) = (int(p.k1), int(p.r_times_s()));
    let kr = &k + &prod;
    let two = int(2);
    let lin0 = q(&two * &kr * &kr * &prod)
        .try_mul(&a[0])?
        .try_sub(&q(&two * &k * &k * &kr * &kr).try_mul(&a[1])?)?
        .try_add(&q(h0(p)))?;
    let lin2 = q(&two * kr.pow(3))
        .try_mul(&a[1])?
        .try_sub(&q(&two * &kr * int(rho(p))).try_mul(&a[2])?)?
        .try_add(&q(l0(p)))?;
    Ok([quad, lin0, lin2])
}

/// Real parts found on one branch together with every tried lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSolution {
    pub branch: Branch,
    pub a: [QuadExt; 3],
    pub lifts: Vec<Lift>,
    /// Set when the lift could not be expressed in one quadratic field and
    /// the in-field decision accepted the real parts.
    pub unresolved: bool,
}

/// A verified solution and the closed-form family it matches, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weights: CoreWeights,
    pub family: Option<Family>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub params: SrgParams,
    pub solutions: Vec<Solution>,
    pub filters_fired: Vec<Filter>,
    pub lms: Option<LmsEvaluation>,
    pub candidates: Vec<CandidateSolution>,
}

impl ClassificationReport {
    pub fn has_unresolved(&self) -> bool {
        self.candidates.iter().any(|c| c.unresolved)
    }
}

/// The closed-form answer: conference graphs carry the four conference
/// families, `(k₁, r, s) = (2r², r, −r)` carries `(1, −1, 1)`, and nothing
/// else has a solution.
pub fn theorem_oracle(p: &SrgParams) -> Vec<(Family, CoreWeights)> {
    Family::ALL
        .into_iter()
        .filter_map(|f| theorem_weights(p, f).ok().map(|w| (f, w)))
        .collect()
}

fn run_branch(
    e: &LmsEvaluation,
    p: &SrgParams,
    branch: Branch,
    filters: &mut Vec<Filter>,
) -> Result<Option<CandidateSolution>, ClassifyError> {
    let a1 = solve_a1(e, branch)?;
    let (a0, a2) = solve_a0_a2(&a1, p)?;
    let a = [a0, a1, a2];
    if necessity_residuals(e, p, &a)?.iter().any(|x| !x.is_zero()) {
        return Err(ClassifyError::NecessityViolated("real-part system"));
    }
    if let Some(index) = first_out_of_range(&a)? {
        filters.push(Filter::RealPartOutOfRange { branch, index });
        return Ok(Some(CandidateSolution {
            branch,
            a,
            lifts: Vec::new(),
            unresolved: false,
        }));
    }
    let decided = real_parts_admit_solution(&a, p);
    match lift_to_unit_circle(&a, p) {
        Ok(lifts) => {
            let found = lifts.iter().any(|l| l.verified);
            // Two independent routes must agree when both apply.
            if let Ok(d) = decided {
                if d != found {
                    return Err(ClassifyError::RouteDisagreement(alloc::format!(
                        "lift {found} vs real-part decision {d} at branch {branch}"
                    )));
                }
            }
            if !found {
                filters.push(Filter::NoLift { branch });
            }
            Ok(Some(CandidateSolution {
                branch,
                a,
                lifts,
                unresolved: false,
            }))
        }
        Err(ClassifyError::MixedDiscriminants) => {
            let accepted = decided.unwrap_or(true);
            if !accepted {
                filters.push(Filter::RealPartsRejected { branch });
            }
            Ok(Some(CandidateSolution {
                branch,
                a,
                lifts: Vec::new(),
                unresolved: accepted,
            }))
        }
        Err(other) => Err(other),
    }
}

/// Runs the full pipeline: necessary bounds, `L, M, S` at `k₁`, the
/// sandwich filter, the real-part solves and the lift. The generic solve
/// runs even after a necessary condition has fired, so that an empty
/// answer is confirmed twice.
///
/// Errors signal internal inconsistencies only; infeasible tuples yield an
/// empty solution list with the reasons in `filters_fired`.
pub fn classify_params(p: &SrgParams) -> Result<ClassificationReport, ClassifyError> {
    let mut filters = Vec::new();
    if let Some(v) = feasibility_bounds(p).violation {
        filters.push(Filter::Bound(v));
    }
    if p.r_plus_s() > 0 {
        filters.push(Filter::PositiveEigenvalueSum {
            r_plus_s: p.r_plus_s(),
        });
    }
    let e = lms_at_k1(p)?;
    let sf = sign_filter(&e)?;
    if e.sk < int(0) {
        filters.push(Filter::NegativeS { sk: e.sk.clone() });
    }
    let mut candidates = Vec::new();
    if sf.sqrt_s.is_some() {
        let tried: &[Branch] = if e.sk == int(0) { &[Branch::Plus] } else { &Branch::BOTH };
        for &b in tried {
            if !sf.feasible.contains(&b) {
                filters.push(Filter::Sandwich { branch: b });
                continue;
            }
            match run_branch(&e, p, b, &mut filters) {
                Ok(c) => candidates.extend(c),
                Err(err @ (ClassifyError::DegenerateQuadratic | ClassifyError::SingularLinearSolve)) => {
                    filters.push(Filter::Degenerate(err));
                }
                Err(err) => return Err(err),
            }
        }
    }

    let scheme = GeneralSchemeData::from_srg(p);
    let oracle = theorem_oracle(p);
    let mut solutions: Vec<Solution> = Vec::new();
    for lift in candidates.iter().flat_map(|c| c.lifts.iter()).filter(|l| l.verified) {
        if solutions.iter().any(|s| s.weights == lift.weights) {
            continue;
        }
        if !verify_spectral(&scheme, lift.weights.w())?.passes() {
            return Err(ClassifyError::RouteDisagreement(alloc::format!("{}", lift.weights)));
        }
        let family = oracle.iter().find(|(_, w)| *w == lift.weights).map(|(f, _)| *f);
        solutions.push(Solution {
            weights: lift.weights.clone(),
            family,
        });
    }
    solutions.sort_by_key(|s| s.family);
    Ok(ClassificationReport {
        params: p.clone(),
        solutions,
        filters_fired: filters,
        lms: Some(e),
        candidates,
    })
}

/// Compares a report with the closed-form answer as sets, and checks that
/// no necessary condition fired on a tuple that has solutions.
pub fn check_against_oracle(report: &ClassificationReport) -> Result<(), ClassifyError> {
    let oracle = theorem_oracle(&report.params);
    let mismatch = |detail: String| ClassifyError::OracleMismatch {
        params: alloc::format!("{}", report.params),
        detail,
    };
    if report.has_unresolved() {
        return Err(mismatch(String::from("unresolved candidate accepted by the real-part decision")));
    }
    let same = report.solutions.len() == oracle.len()
        && oracle
            .iter()
            .all(|(f, w)| report.solutions.iter().any(|s| s.weights == *w && s.family == Some(*f)));
    if !same {
        return Err(mismatch(alloc::format!(
            "{} solutions found, {} expected",
            report.solutions.len(),
            oracle.len()
        )));
    }
    let necessary_fired = report
        .filters_fired
        .iter()
        .any(|f| matches!(f, Filter::Bound(_) | Filter::PositiveEigenvalueSum { .. }));
    if necessary_fired && !report.solutions.is_empty() {
        return Err(mismatch(String::from("solutions despite a failed necessary condition")));
    }
    Ok(())
}

/// Classifies each tuple and cross-checks it against the closed form.
pub fn scan_params(params: &[SrgParams]) -> Result<Vec<ClassificationReport>, ClassifyError> {
    params
        .iter()
        .map(|p| {
            let report = classify_params(p)?;
            check_against_oracle(&report)?;
            Ok(report)
        })
        .collect()
}

/// All feasible normalized tuples with `n ≤ n_max`, classified and checked,
/// in `(n, k₁, λ, μ)` order.
pub fn scan(n_max: i64) -> Result<Vec<ClassificationReport>, ClassifyError> {
    scan_params(&enumerate_params(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::srg::params_from_nklm;

    fn classify(n: i64, k: i64, l: i64, m: i64) -> ClassificationReport {
        classify_params(&params_from_nklm(n, k, l, m).unwrap()).unwrap()
    }

    #[test]
    fn sandwich_examples() {
        let e = lms_at_k1(&params_from_nklm(15, 8, 4, 4).unwrap()).unwrap();
        assert_eq!(sign_filter(&e).unwrap().feasible, [Branch::Plus]);
        let e = lms_at_k1(&params_from_nklm(9, 4, 1, 2).unwrap()).unwrap();
        assert_eq!(sign_filter(&e).unwrap().feasible, Branch::BOTH);
    }

    #[test]
    fn real_parts_for_paley9() {
        let p = params_from_nklm(9, 4, 1, 2).unwrap();
        let e = lms_at_k1(&p).unwrap();
        let plus = solve_a1(&e, Branch::Plus).unwrap();
        let minus = solve_a1(&e, Branch::Minus).unwrap();
        assert_eq!(plus, QuadExt::zero());
        assert_eq!(minus, QuadExt::from_rational(rat(-1, 4)));
        assert_eq!(h0(&p), int(-16));
        assert_eq!(l0(&p), int(0));
        let (a0, a2) = solve_a0_a2(&plus, &p).unwrap();
        assert_eq!((a0, a2), (QuadExt::from_int(-1), QuadExt::zero()));
        let (a0, a2) = solve_a0_a2(&minus, &p).unwrap();
        assert_eq!((a0, a2), (QuadExt::one(), QuadExt::from_rational(rat(-1, 4))));
    }

    #[test]
    fn triangular_real_parts() {
        let p = params_from_nklm(15, 8, 4, 4).unwrap();
        let e = lms_at_k1(&p).unwrap();
        let a1 = solve_a1(&e, Branch::Plus).unwrap();
        assert_eq!(a1, QuadExt::from_int(-1));
        assert_eq!(solve_a0_a2(&a1, &p).unwrap(), (QuadExt::one(), QuadExt::one()));
    }

    #[test]
    fn classify_examples() {
        let r = classify(9, 4, 1, 2);
        assert_eq!(r.solutions.len(), 4);
        assert!(r.solutions.iter().all(|s| s.family.is_some()));
        let r = classify(15, 8, 4, 4);
        assert_eq!(r.solutions.len(), 1);
        assert_eq!(r.solutions[0].weights, CoreWeights::from_ints(1, -1, 1).unwrap());
        assert!(classify(16, 5, 0, 2).solutions.is_empty());
        let petersen = classify(10, 3, 0, 1);
        assert!(petersen.solutions.is_empty());
        assert!(!petersen.filters_fired.is_empty());
        let cliques = classify(6, 2, 1, 0);
        assert!(cliques.solutions.is_empty());
        assert!(cliques
            .filters_fired
            .contains(&Filter::Bound(BoundViolation::SNotBelowMinusOne)));
    }

    #[test]
    fn oracle_examples() {
        let p13 = params_from_nklm(13, 6, 2, 3).unwrap();
        let o = theorem_oracle(&p13);
        assert_eq!(o.len(), 4);
        assert!(o.iter().any(|(_, w)| w.discriminant() == -35));
        assert!(theorem_oracle(&params_from_nklm(10, 3, 0, 1).unwrap()).is_empty());
        let r = classify(13, 6, 2, 3);
        check_against_oracle(&r).unwrap();
    }

    #[test]
    fn scan_small() {
        let reports = scan(50).unwrap();
        for r in &reports {
            let (n, k, _, _) = r.params.tuple();
            let expected = r.params.is_conference() || (n, k) == (15, 8) || (n, k) == (35, 18);
            assert_eq!(!r.solutions.is_empty(), expected, "{}", r.params);
        }
        let tuples: Vec<_> = scan(9).unwrap().iter().map(|r| r.params.tuple()).collect();
        assert!(tuples.contains(&(5, 2, 0, 1)) && tuples.contains(&(9, 4, 1, 2)));
    }
}
