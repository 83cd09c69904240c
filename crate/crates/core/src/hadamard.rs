//! Bordered matrices with a core in the Bose–Mesner algebra, and three
//! independent exact tests of the complex Hadamard property: the Gram
//! matrix, the eigenvalue conditions `|β_k|² = n+1`, and vanishing of the
//! polynomials `e_k`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;

use crate::arith::{int, ArithError, BiQuad, QuadExt, Ring};
use crate::graphs::RelationMatrix;
use crate::srg::SrgParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HadamardError {
    #[error("weight w{index} has |w|^2 = {abs_sq}, not 1")]
    NotUnitModulus { index: usize, abs_sq: QuadExt },
    #[error("weight w{index} is not in an imaginary quadratic field or Q")]
    RealIrrationalWeight { index: usize },
    #[error("family {family} does not apply: {reason}")]
    FamilyNotApplicable { family: Family, reason: &'static str },
    #[error("matrix is not square or has a bad border at row {0}")]
    Shape(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("eigenmatrix row 0 must start with 1 and give integer valencies")]
    SchemeShape,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Weights `(w₀, w₁, w₂)` of the core `W₁ = w₀A₀ + w₁A₁ + w₂A₂`.
///
/// All three have modulus 1 and share one field `Q(√d)` with `d ≤ 0`.
/// `w₁ = w₂` is accepted (the core is then a multiple of `J` plus a
/// diagonal) and flagged by [`CoreWeights::is_degenerate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreWeights {
    w: [QuadExt; 3],
}

impl CoreWeights {
    pub fn new(w0: QuadExt, w1: QuadExt, w2: QuadExt) -> Result<Self, HadamardError> {
        let w = [w0, w1, w2];
        check_unit_weights(&w)?;
        Ok(Self { w })
    }

    pub fn from_ints(w0: i64, w1: i64, w2: i64) -> Result<Self, HadamardError> {
        Self::new(QuadExt::from_int(w0), QuadExt::from_int(w1), QuadExt::from_int(w2))
    }

    pub fn w(&self) -> &[QuadExt; 3] {
        &self.w
    }

    /// Common discriminant (0 when all weights are rational).
    pub fn discriminant(&self) -> i64 {
        self.w.iter().map(QuadExt::d).find(|&d| d != 0).unwrap_or(0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.w[1] == self.w[2]
    }

    pub fn conj(&self) -> Self {
        Self {
            w: [self.w[0].conj(), self.w[1].conj(), self.w[2].conj()],
        }
    }
}

impl fmt::Display for CoreWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.w[0], self.w[1], self.w[2])
    }
}

fn check_unit_weights(w: &[QuadExt]) -> Result<(), HadamardError> {
    let mut d = 0;
    for (index, x) in w.iter().enumerate() {
        if x.d() > 0 {
            return Err(HadamardError::RealIrrationalWeight { index });
        }
        if x.d() != 0 {
            if d != 0 && d != x.d() {
                return Err(ArithError::IncompatibleField(d, x.d()).into());
            }
            d = x.d();
        }
        let abs_sq = x.abs_sq();
        if !abs_sq.is_one() {
            return Err(HadamardError::NotUnitModulus { index, abs_sq });
        }
    }
    Ok(())
}

/// Weight families of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(−1, i, −i)` on a conference graph.
    IaPlus,
    /// `(−1, −i, i)` on a conference graph.
    IaMinus,
    /// `(1, (−1 + i√(k₁²−1))/k₁, conjugate)` on a conference graph.
    IbPlus,
    /// `(1, (−1 − i√(k₁²−1))/k₁, conjugate)` on a conference graph.
    IbMinus,
    /// `(1, −1, 1)` when `(k₁, r, s) = (2r², r, −r)`.
    Ii,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::IaPlus,
        Family::IaMinus,
        Family::IbPlus,
        Family::IbMinus,
        Family::Ii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::IaPlus => "ia_plus",
            Family::IaMinus => "ia_minus",
            Family::IbPlus => "ib_plus",
            Family::IbMinus => "ib_minus",
            Family::Ii => "ii",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| String::from(s))
    }
}

/// Closed-form weights of a family. For conference graphs `2r(r+1)` is
/// taken as `k₁`, so the weights have rational coordinates even when `r`
/// is irrational.
pub fn theorem_weights(p: &SrgParams, family: Family) -> Result<CoreWeights, HadamardError> {
    let not = |reason| {
        Err(HadamardError::FamilyNotApplicable {
            family,
            reason,
        })
    };
    match family {
        Family::IaPlus | Family::IaMinus => {
            if !p.is_conference() {
                return not("requires a conference graph");
            }
            let i = QuadExt::i();
            let (w1, w2) = if family == Family::IaPlus {
                (i.clone(), -&i)
            } else {
                (-&i, i)
            };
            CoreWeights::new(QuadExt::from_int(-1), w1, w2)
        }
        Family::IbPlus | Family::IbMinus => {
            if !p.is_conference() {
                return not("requires a conference graph");
            }
            // i·√(k₁²−1) = √(−(k₁²−1)).
            let k = int(p.k1);
            let im = QuadExt::sqrt_rational(&-(&k * &k - int(1)))?;
            let inv_k = BigRational::new(1.into(), p.k1.into());
            let plus = (&QuadExt::from_int(-1) + &im).scale(&inv_k);
            let minus = plus.conj();
            let (w1, w2) = if family == Family::IbPlus {
                (plus, minus)
            } else {
                (minus, plus)
            };
            CoreWeights::new(QuadExt::one(), w1, w2)
        }
        Family::Ii => match p.integer_eigenvalues() {
            Some((r, s)) if r >= 2 && s == -r && p.k1 == 2 * r * r => CoreWeights::from_ints(1, -1, 1),
            _ => not("requires (k1, r, s) = (2r^2, r, -r) with integer r >= 2"),
        },
    }
}

/// Core matrix with entry `(x, y) = w_{rel(x, y)}`.
pub fn build_core(g: &RelationMatrix, w: &CoreWeights) -> Vec<Vec<QuadExt>> {
    g.rows()
        .map(|row| row.iter().map(|&rel| w.w[rel as usize].clone()).collect())
        .collect()
}

/// Where a bordered matrix came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub graph: String,
    pub weights: CoreWeights,
}

/// `W = [[1, 1ᵀ], [1, W₁]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderedMatrix {
    entries: Vec<Vec<QuadExt>>,
    pub provenance: Option<Provenance>,
}

impl BorderedMatrix {
    /// Adopts a full matrix whose first row and column are all 1.
    pub fn from_entries(entries: Vec<Vec<QuadExt>>) -> Result<Self, HadamardError> {
        let m = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != m || !row[0].is_one() {
                return Err(HadamardError::Shape(i));
            }
        }
        if m == 0 || !entries[0].iter().all(QuadExt::is_one) {
            return Err(HadamardError::Shape(0));
        }
        Ok(Self {
            entries,
            provenance: None,
        })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<QuadExt>] {
        &self.entries
    }

    /// The core `W₁`.
    pub fn core(&self) -> Vec<Vec<QuadExt>> {
        self.entries[1..].iter().map(|r| r[1..].to_vec()).collect()
    }
}

/// Attaches the border of ones to a square unit-modulus core.
pub fn build_bordered(core: &[Vec<QuadExt>]) -> Result<BorderedMatrix, HadamardError> {
    let n = core.len();
    let mut entries = Vec::with_capacity(n + 1);
    entries.push(alloc::vec![QuadExt::one(); n + 1]);
    for (i, row) in core.iter().enumerate() {
        if row.len() != n {
            return Err(HadamardError::Shape(i + 1));
        }
        for (j, x) in row.iter().enumerate() {
            if !x.abs_sq().is_one() {
                return Err(HadamardError::NotUnitModulus {
                    index: i * n + j,
                    abs_sq: x.abs_sq(),
                });
            }
        }
        let mut full = Vec::with_capacity(n + 1);
        full.push(QuadExt::one());
        full.extend(row.iter().cloned());
        entries.push(full);
    }
    Ok(BorderedMatrix {
        entries,
        provenance: None,
    })
}

/// Bordered matrix of a graph and weights, with provenance recorded.
pub fn bordered_from_graph(
    g: &RelationMatrix,
    w: &CoreWeights,
    label: &str,
) -> BorderedMatrix {
    let mut m = build_bordered(&build_core(g, w)).expect("unit weights give a unit core");
    m.provenance = Some(Provenance {
        graph: String::from(label),
        weights: w.clone(),
    });
    m
}

/// Result of the Gram test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramOutcome {
    Hadamard { order: usize, discriminant: i64 },
    NonUnitEntry { row: usize, col: usize, abs_sq: QuadExt },
    /// First pair `i < j` (row-major) whose Hermitian inner product is not 0.
    Violation { row: usize, other: usize, inner: QuadExt },
}

impl GramOutcome {
    pub fn is_hadamard(&self) -> bool {
        matches!(self, GramOutcome::Hadamard { .. })
    }
}

/// Checks `W·conj(W)ᵀ = mI` (`m` the order) entry by entry. Unit moduli are
/// checked first, so the diagonal is automatically `m`.
pub fn verify_gram(w: &BorderedMatrix) -> Result<GramOutcome, HadamardError> {
    let m = w.order();
    let mut d = 0i64;
    for (i, row) in w.entries.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.d() != 0 {
                if d != 0 && x.d() != d {
                    return Err(ArithError::IncompatibleField(d, x.d()).into());
                }
                d = x.d();
            }
            let abs_sq = x.abs_sq();
            if !abs_sq.is_one() {
                return Ok(GramOutcome::NonUnitEntry { row: i, col: j, abs_sq });
            }
        }
    }
    let conj: Vec<Vec<QuadExt>> = w
        .entries
        .iter()
        .map(|r| r.iter().map(QuadExt::conj).collect())
        .collect();
    for i in 0..m {
        for j in i + 1..m {
            let mut acc = QuadExt::zero();
            for l in 0..m {
                acc = acc.try_add(&w.entries[i][l].try_mul(&conj[j][l])?)?;
            }
            if !acc.is_zero() {
                return Ok(GramOutcome::Violation {
                    row: i,
                    other: j,
                    inner: acc,
                });
            }
        }
    }
    Ok(GramOutcome::Hadamard {
        order: m,
        discriminant: d,
    })
}

/// Symmetric `d`-class scheme given by its first eigenmatrix `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSchemeData {
    p: Vec<Vec<QuadExt>>,
    n: i64,
}

impl GeneralSchemeData {
    /// `P` must be square with real entries, `P₀,₀ = 1`, and integer
    /// valencies in row 0.
    pub fn new(p: Vec<Vec<QuadExt>>) -> Result<Self, HadamardError> {
        let size = p.len();
        if size < 2 || p.iter().any(|row| row.len() != size || row.iter().any(|x| !x.is_real())) {
            return Err(HadamardError::SchemeShape);
        }
        if !p[0][0].is_one() {
            return Err(HadamardError::SchemeShape);
        }
        let mut n = 0i64;
        for k in &p[0] {
            let v = k
                .to_rational()
                .and_then(crate::arith::rational::to_i64)
                .ok_or(HadamardError::SchemeShape)?;
            n += v;
        }
        Ok(Self { p, n })
    }

    pub fn from_srg(params: &SrgParams) -> Self {
        let p = params.eigenmatrix().iter().map(|r| r.to_vec()).collect();
        Self::new(p).expect("SRG eigenmatrix is well formed")
    }

    /// Number of classes `d`.
    pub fn classes(&self) -> usize {
        self.p.len() - 1
    }

    /// Number of points `n = Σ_j k_j`.
    pub fn points(&self) -> i64 {
        self.n
    }

    pub fn eigenmatrix(&self) -> &[Vec<QuadExt>] {
        &self.p
    }

    pub fn valencies(&self) -> &[QuadExt] {
        &self.p[0]
    }

    fn check_weights(&self, w: &[QuadExt]) -> Result<(), HadamardError> {
        if w.len() != self.p.len() {
            return Err(HadamardError::WeightCount {
                expected: self.p.len(),
                got: w.len(),
            });
        }
        check_unit_weights(w)
    }
}

fn bq(x: &QuadExt) -> BiQuad {
    BiQuad::from_quad(x)
}

/// `β_k = Σ_j w_j P_{k,j}`.
pub fn beta(scheme: &GeneralSchemeData, w: &[QuadExt], k: usize) -> Result<BiQuad, HadamardError> {
    scheme.check_weights(w)?;
    let mut acc = BiQuad::zero();
    for (wj, pkj) in w.iter().zip(&scheme.p[k]) {
        acc = acc.try_add(&bq(wj).try_mul(&bq(pkj))?)?;
    }
    Ok(acc)
}

/// Result of the eigenvalue test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralOutcome {
    Pass,
    /// `k = 0`: `value = 1 + Σ_j k_j w_j ≠ 0`; `k ≥ 1`: `value = |β_k|² ≠ n+1`.
    Fail { k: usize, value: BiQuad },
}

impl SpectralOutcome {
    pub fn passes(&self) -> bool {
        matches!(self, SpectralOutcome::Pass)
    }
}

/// `W` is complex Hadamard iff `1 + Σ_j k_j w_j = 0` and `|β_k|² = n+1`
/// for `k = 1..d`.
pub fn verify_spectral(scheme: &GeneralSchemeData, w: &[QuadExt]) -> Result<SpectralOutcome, HadamardError> {
    let e0 = BiQuad::one().try_add(&beta(scheme, w, 0)?)?;
    if !e0.is_zero() {
        return Ok(SpectralOutcome::Fail { k: 0, value: e0 });
    }
    let target = BiQuad::from_i64(scheme.n + 1);
    for k in 1..=scheme.classes() {
        let value = beta(scheme, w, k)?.abs_sq();
        if value != target {
            return Ok(SpectralOutcome::Fail { k, value });
        }
    }
    Ok(SpectralOutcome::Pass)
}

/// `e_k` evaluated at the weights, in the literal cleared-denominator form
/// `Π_h w_h · (Σ_j P_{k,j}² + Σ_{j<j'} P_{k,j}P_{k,j'}(w_j/w_{j'} + w_{j'}/w_j) − (n+1))`
/// for `k ≥ 1`, and `e₀ = 1 + Σ_j k_j w_j`.
pub fn eval_ek(scheme: &GeneralSchemeData, w: &[QuadExt], k: usize) -> Result<BiQuad, HadamardError> {
    scheme.check_weights(w)?;
    if k == 0 {
        return BiQuad::one().try_add(&beta(scheme, w, 0)?).map_err(Into::into);
    }
    let row = &scheme.p[k];
    let mut bracket = BiQuad::from_i64(-(scheme.n + 1));
    for pkj in row {
        bracket = bracket.try_add(&bq(pkj).try_mul(&bq(pkj))?)?;
    }
    for j1 in 0..row.len() {
        for j2 in j1 + 1..row.len() {
            let ratio = w[j1].try_div(&w[j2])?.try_add(&w[j2].try_div(&w[j1])?)?;
            let term = bq(&row[j1]).try_mul(&bq(&row[j2]))?.try_mul(&bq(&ratio))?;
            bracket = bracket.try_add(&term)?;
        }
    }
    let mut prod = QuadExt::one();
    for x in w {
        prod = prod.try_mul(x)?;
    }
    Ok(bq(&prod).try_mul(&bracket)?)
}

/// `e₀, e₁, e₂` for a strongly regular graph in expanded polynomial form:
///
/// * `e₀ = 1 + X₀ + k₁X₁ + k₂X₂`
/// * `e₁ = −((r+1)X₁ − rX₂)X₀² − (r(r+1)(X₁−X₂)² + (k₁+k₂)X₁X₂)X₀ + (rX₁ − (r+1)X₂)X₁X₂`
/// * `e₂` as `e₁` with `s` in place of `r`.
pub fn eval_ek_srg(p: &SrgParams, w: &CoreWeights, k: usize) -> BiQuad {
    let [x0, x1, x2] = w.w().clone().map(|x| bq(&x));
    match k {
        0 => BiQuad::one()
            .add(&x0)
            .add(&x1.mul_i64(p.k1))
            .add(&x2.mul_i64(p.k2)),
        1 | 2 => {
            let e = bq(if k == 1 { &p.r } else { &p.s });
            ek_cubic(&e, p.k1 + p.k2, &x0, &x1, &x2)
        }
        _ => panic!("strongly regular graphs have classes 0, 1, 2"),
    }
}

/// The common cubic shape of `e₁` and `e₂`, generic over the ring.
pub fn ek_cubic<R: Ring>(e: &R, k1_plus_k2: i64, x0: &R, x1: &R, x2: &R) -> R {
    let e1 = e.add_i64(1);
    let t1 = e1.mul(x1).sub(&e.mul(x2)).mul(&x0.square()).neg();
    let diff = x1.sub(x2);
    let t2 = e
        .mul(&e1)
        .mul(&diff.square())
        .add(&x1.mul(x2).mul_i64(k1_plus_k2))
        .mul(x0)
        .neg();
    let t3 = e.mul(x1).sub(&e1.mul(x2)).mul(x1).mul(x2);
    t1.add(&t2).add(&t3)
}

/// Whether all `e_k` vanish.
pub fn all_ek_vanish(scheme: &GeneralSchemeData, w: &[QuadExt]) -> Result<bool, HadamardError> {
    for k in 0..=scheme.classes() {
        if !eval_ek(scheme, w, k)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f₁ = X₀² + (r+s+1)(X₁−X₂)X₀ − X₁X₂`.
pub fn f1<R: Ring>(r_plus_s: i64, x0: &R, x1: &R, x2: &R) -> R {
    x0.square()
        .add(&x1.sub(x2).mul(x0).mul_i64(r_plus_s + 1))
        .sub(&x1.mul(x2))
}

/// `f₂ = X₁³X₂² − X₀X₁(X₁²+X₂²) + X₂(X₀²+X₁²−X₁X₂)
///      + (r+s+1)X₂(X₁−X₂)(X₀−X₁X₂) + rs·X₁(X₁+X₂)(X₁−X₂)²`.
pub fn f2<R: Ring>(r_plus_s: i64, r_times_s: i64, x0: &R, x1: &R, x2: &R) -> R {
    let diff = x1.sub(x2);
    x1.pow(3)
        .mul(&x2.square())
        .sub(&x0.mul(x1).mul(&x1.square().add(&x2.square())))
        .add(&x2.mul(&x0.square().add(&x1.square()).sub(&x1.mul(x2))))
        .add(&x2.mul(&diff).mul(&x0.sub(&x1.mul(x2))).mul_i64(r_plus_s + 1))
        .add(&x1.mul(&x1.add(x2)).mul(&diff.square()).mul_i64(r_times_s))
}

/// True when `W₁·conj(W₁)ᵀ` is constant on each relation, i.e. lies in the
/// Bose–Mesner algebra.
pub fn core_gram_in_algebra(g: &RelationMatrix, w: &CoreWeights) -> bool {
    let core = build_core(g, w);
    let n = core.len();
    let mut by_rel: [Option<QuadExt>; 3] = [None, None, None];
    for i in 0..n {
        for j in 0..n {
            let mut acc = QuadExt::zero();
            for l in 0..n {
                acc = &acc + &(&core[i][l] * &core[j][l].conj());
            }
            let slot = &mut by_rel[g.get(i, j) as usize];
            match slot {
                None => *slot = Some(acc),
                Some(v) if *v != acc => return false,
                Some(_) => {}
            }
        }
    }
    true
}
