//! Mechanical checks of the identities, sign conditions and root locations
//! that the classification rests on, over parameter grids and seeded
//! random samples.

mod mpoly;
mod points;

pub use mpoly::{MPoly, R, S, X};
pub use points::{conference_s_pm, quadratic_from_pair, CriticalPoints, PositiveSumPoints};

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, rat, rational::is_integer, QuadExt, Ring};
use crate::classify::{l_coeffs, lms_at_k1, lms_conference, lms_zero_sum, m_coeffs, necessity_residuals, s_coeffs};
use crate::hadamard::{f1, f2, theorem_weights, Family};
use crate::poly::{count_real_roots, tarski_query, Interval, RatPoly, SturmChain};
use crate::srg::{conference_tuple, params_from_nklm, SrgParams};

/// Identifiers accepted by [`run_audit`], in the order [`run_all`] uses.
pub const AUDIT_IDS: [&str; 18] = [
    "factorization",
    "m-relation",
    "specializations",
    "critical-order",
    "lms-at-minus-rs",
    "square-dominance",
    "root-locations",
    "sturm-table",
    "beta-signs",
    "second-derivative-roots",
    "g-positive",
    "kappa",
    "psi-phi",
    "n-bound",
    "sandwich-window",
    "conference-window",
    "zero-sum",
    "necessity-identities",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AuditError {
    #[error("unknown audit id {0}")]
    UnknownId(String),
}

/// Grid extents and sampling parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    /// Largest integer `r` on integer grids.
    pub grid_max: i64,
    /// Largest `k₁ = 2r(r+1)` on the conference grid.
    pub conference_k_max: i64,
    /// Random rational samples for the factorization identities.
    pub samples: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            grid_max: 25,
            conference_k_max: 700,
            samples: 100,
            seed: 0,
        }
    }
}

/// First failing grid point with an exact witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditFailure {
    pub point: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditResult {
    pub id: &'static str,
    pub grid: String,
    pub checked: u64,
    pub failure: Option<AuditFailure>,
}

impl AuditResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.checked > 0
    }
}

impl fmt::Display for AuditResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: {} points pass ({})", self.id, self.checked, self.grid),
            Some(x) => write!(f, "{}: FAIL at {}: {}", self.id, x.point, x.witness),
        }
    }
}

type Check = Result<(), String>;

fn ok<T, E: fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(alloc::format!($($fmt)+));
        }
    };
}

struct Tally {
    id: &'static str,
    grid: String,
    checked: u64,
    failure: Option<AuditFailure>,
}

impl Tally {
    fn new(id: &'static str, grid: String) -> Self {
        Self {
            id,
            grid,
            checked: 0,
            failure: None,
        }
    }

    fn point(&mut self, label: impl FnOnce() -> String, result: Check) {
        self.checked += 1;
        if let Err(witness) = result {
            if self.failure.is_none() {
                self.failure = Some(AuditFailure { point: label(), witness });
            }
        }
    }

    fn finish(self) -> AuditResult {
        AuditResult {
            id: self.id,
            grid: self.grid,
            checked: self.checked,
            failure: self.failure,
        }
    }
}

fn lms_rational(r: &BigRational, s: &BigRational) -> (RatPoly, RatPoly, RatPoly) {
    (
        RatPoly::new(l_coeffs(r, s)),
        RatPoly::new(m_coeffs(r, s)),
        RatPoly::new(s_coeffs(r, s)),
    )
}

fn lms_int(r: i64, s: i64) -> (RatPoly, RatPoly, RatPoly) {
    lms_rational(&int(r), &int(s))
}

fn sign(x: &QuadExt) -> Result<Ordering, String> {
    ok(x.signum())
}

fn lt(a: &QuadExt, b: &QuadExt) -> Result<bool, String> {
    Ok(ok(a.cmp_real(b))? == Ordering::Less)
}

fn q(x: &BigRational) -> QuadExt {
    QuadExt::from_rational(x.clone())
}

/// `M ≤ ε√S/2 ≤ L` for rational values with `S ≥ 0`, decided by squaring
/// instead of taking the root.
pub fn sandwich_holds(l: &BigRational, m: &BigRational, s: &BigRational, plus: bool) -> bool {
    let zero = int(0);
    let four = int(4);
    if plus {
        (*m <= zero || &four * m * m <= *s) && (*l >= zero && *s <= &four * l * l)
    } else {
        (*m <= zero && &four * m * m >= *s) && (*l >= zero || &four * l * l <= *s)
    }
}

/// Integer pairs `r_min ≤ r ≤ r_max`, `s_lo(r) ≤ s ≤ s_hi`.
fn int_grid(r_min: i64, r_max: i64, s_lo: impl Fn(i64) -> i64, s_hi: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for r in r_min..=r_max {
        for s in s_lo(r)..=s_hi {
            out.push((r, s));
        }
    }
    out
}

/// `(r, u)` with `3 ≤ r ≤ r_max` and `u_min ≤ u ≤ r − 2`.
fn ru_grid(r_max: i64, u_min: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for r in 3..=r_max {
        for u in u_min..=r - 2 {
            out.push((r, u));
        }
    }
    out
}

fn sym_lms() -> (MPoly, MPoly, MPoly) {
    let r = MPoly::var(R);
    let s = MPoly::var(S);
    (
        MPoly::from_x_coeffs(&l_coeffs(&r, &s)),
        MPoly::from_x_coeffs(&m_coeffs(&r, &s)),
        MPoly::from_x_coeffs(&s_coeffs(&r, &s)),
    )
}

fn audit_factorization(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "factorization",
        alloc::format!("symbolic in Q[r,s,X] plus {} seeded rational samples (seed {})", cfg.samples, cfg.seed),
    );
    // Symbolic: with σ = r+s, π = rs the root pairs expand to
    // (X−α₋)(X−α₊) = X² − (σ−1)X + 2π, (X−β₋)(X−β₊) = X² + (2π+1)X − πσ,
    // (X−γ₋)(X−γ₊) = X² − (σ+3)X − 2π, (X−β₋−1)(X−β₊−1) = X² + (2π−1)X − π(σ+2).
    let (l, m, s) = sym_lms();
    let (rv, sv, x) = (MPoly::var(R), MPoly::var(S), MPoly::var(X));
    let sigma = rv.add(&sv);
    let pi = rv.mul(&sv);
    let x2 = x.square();
    let qa = x2.sub(&sigma.add_i64(-1).mul(&x)).add(&pi.mul_i64(2));
    let qb = x2.add(&pi.mul_i64(2).add_i64(1).mul(&x)).sub(&pi.mul(&sigma));
    let qg = x2.sub(&sigma.add_i64(3).mul(&x)).sub(&pi.mul_i64(2));
    let qb1 = x2.add(&pi.mul_i64(2).add_i64(-1).mul(&x)).sub(&pi.mul(&sigma.add_i64(2)));
    let quarter = rat(1, 4);
    let d1 = l.square().sub(&s.scale(&quarter)).sub(&qa.mul(&qb.square()));
    t.point(|| "symbolic L^2 - S/4".into(), if d1.is_zero() { Ok(()) } else { Err(mpoly::show(&d1)) });
    let d2 = m.square().sub(&s.scale(&quarter)).sub(&qg.mul(&qb1.square()));
    t.point(|| "symbolic M^2 - S/4".into(), if d2.is_zero() { Ok(()) } else { Err(mpoly::show(&d2)) });

    // Sampled: r > 0, s = −1 − v·r with 0 < v ≤ 1, so s < −1 and r + s ≥ −1.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let r = rat(rng.gen_range(1..=60), rng.gen_range(1..=6));
        let vd = rng.gen_range(1..=7);
        let v = rat(rng.gen_range(1..=vd), vd);
        let s = -int(1) - &v * &r;
        let res = (|| -> Check {
            let cp = ok(CriticalPoints::from_sum_product(&(&r + &s), &(&r * &s)))?;
            let (l, m, sp) = lms_rational(&r, &s);
            let qa = ok(quadratic_from_pair(&cp.alpha))?;
            let qb = ok(quadratic_from_pair(&(cp.beta_minus.clone(), cp.beta_plus.clone())))?;
            let qg = ok(quadratic_from_pair(&cp.gamma))?;
            let qb1 = ok(quadratic_from_pair(&cp.beta_shifted()))?;
            let lhs = &(&l * &l) - &sp.scale(&rat(1, 4));
            let rhs = &qa * &(&qb * &qb);
            ensure!(lhs.degree() == Some(6) && lhs == rhs, "L^2 - S/4 = {lhs}, product = {rhs}");
            let lhs = &(&m * &m) - &sp.scale(&rat(1, 4));
            let rhs = &qg * &(&qb1 * &qb1);
            ensure!(lhs.degree() == Some(6) && lhs == rhs, "M^2 - S/4 = {lhs}, product = {rhs}");
            Ok(())
        })();
        t.point(|| alloc::format!("(r, s) = ({r}, {s})"), res);
    }
    t.finish()
}

fn audit_m_relation(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "m-relation",
        alloc::format!(
            "symbolic; conference forms k1 <= {}; zero-sum forms r <= {}",
            cfg.conference_k_max, cfg.grid_max
        ),
    );
    let (l, m, _) = sym_lms();
    let shift = MPoly::var(X).add(&MPoly::var(R).mul(&MPoly::var(S)));
    let d = m.sub(&l.sub(&shift.square().mul_i64(4)));
    t.point(|| "symbolic".into(), if d.is_zero() { Ok(()) } else { Err(mpoly::show(&d)) });
    for k in 1..=cfg.conference_k_max {
        let tt = rat(k, 2);
        let (l, m, _) = lms_conference(&tt);
        let sq = RatPoly::linear_root(&tt).pow(2).scale(&int(4));
        let res = if m == &l - &sq { Ok(()) } else { Err(alloc::format!("M = {m}")) };
        t.point(|| alloc::format!("conference k1 = {k}"), res);
    }
    for r in 2..=cfg.grid_max {
        let (l, m, _) = lms_zero_sum(r);
        let sq = RatPoly::linear_root(&int(r * r)).pow(2).scale(&int(4));
        let res = if m == &l - &sq { Ok(()) } else { Err(alloc::format!("M = {m}")) };
        t.point(|| alloc::format!("zero-sum r = {r}"), res);
    }
    t.finish()
}

fn audit_specializations(cfg: &AuditConfig) -> AuditResult {
    // Coefficients of L, M, S are polynomials of degree at most 8 in r once
    // s is eliminated, so agreement at 9 or more values of r is an identity.
    let mut t = Tally::new(
        "specializations",
        alloc::format!("s = -1-r at r = j/3, 1 <= j <= 30; s = -r at 1 <= r <= {}", cfg.grid_max.max(9)),
    );
    for j in 1..=30 {
        let r = rat(j, 3);
        let s = -int(1) - &r;
        let general = lms_rational(&r, &s);
        let special = lms_conference(&(&r * (&r + int(1))));
        let res = if general == special {
            Ok(())
        } else {
            Err(alloc::format!("general {:?} vs {:?}", general.0.to_csv(), special.0.to_csv()))
        };
        t.point(|| alloc::format!("conference r = {r}"), res);
    }
    for r in 1..=cfg.grid_max.max(9) {
        let res = if lms_int(r, -r) == lms_zero_sum(r) {
            Ok(())
        } else {
            Err("zero-sum form differs".into())
        };
        t.point(|| alloc::format!("zero-sum r = {r}"), res);
    }
    t.finish()
}

/// `(σ, π)` pairs of the integer grid `1 ≤ r ≤ N, −r−1 ≤ s ≤ −2` and the
/// conference grid `σ = −1, π = −k₁/2` with `k₁ ≥ 2`. At `k₁ = 1` the pair
/// `γ±` is the double root `1 > −rs = 1/2`.
fn section4_grid(cfg: &AuditConfig) -> Vec<(String, BigRational, BigRational)> {
    let mut out = Vec::new();
    for (r, s) in int_grid(1, cfg.grid_max, |r| -r - 1, -2) {
        out.push((alloc::format!("(r, s) = ({r}, {s})"), int(r + s), int(r * s)));
    }
    for k in 2..=cfg.conference_k_max {
        out.push((alloc::format!("conference k1 = {k}"), int(-1), rat(-k, 2)));
    }
    out
}

fn audit_critical_order(cfg: &AuditConfig) -> AuditResult {
    let grid = section4_grid(cfg);
    let mut t = Tally::new(
        "critical-order",
        alloc::format!(
            "integer 1 <= r <= {}, -r-1 <= s <= -2; conference 2 <= k1 <= {}",
            cfg.grid_max, cfg.conference_k_max
        ),
    );
    for (label, sigma, pi) in grid {
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_sum_product(&sigma, &pi))?;
            let mrs = c.minus_rs();
            let (am, ap) = &c.alpha;
            ensure!(am.is_real() && ap.is_real(), "alpha is not real: {ap}");
            ensure!(lt(am, &mrs)? && lt(ap, &mrs)?, "alpha = ({am}, {ap}) not below -rs = {mrs}");
            let (bm1, bp1) = c.beta_shifted();
            ensure!(lt(&bm1, &mrs)?, "beta_- + 1 = {bm1} not below -rs");
            ensure!(lt(&mrs, &c.beta_plus)?, "beta_+ = {} not above -rs", c.beta_plus);
            ensure!(lt(&c.beta_plus, &c.delta)?, "beta_+ = {} not below delta = {}", c.beta_plus, c.delta);
            ensure!(lt(&c.delta, &bp1)?, "delta = {} not below beta_+ + 1 = {bp1}", c.delta);
            let (gm, gp) = &c.gamma;
            if gm.is_real() {
                ensure!(lt(gm, &mrs)? && lt(gp, &mrs)?, "gamma = ({gm}, {gp}) not below -rs");
            }
            Ok(())
        })();
        t.point(|| label, res);
    }
    t.finish()
}

fn audit_lms_at_minus_rs(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "lms-at-minus-rs",
        alloc::format!(
            "symbolic; integer 1 <= r <= {}, -r-1 <= s <= -2; conference 2 <= k1 <= {}",
            cfg.grid_max, cfg.conference_k_max
        ),
    );
    let (l, m, s) = sym_lms();
    let (rv, sv) = (MPoly::var(R), MPoly::var(S));
    let minus_rs = rv.mul(&sv).neg();
    let rho = rv.mul(&rv.add_i64(1)).mul(&sv).mul(&sv.add_i64(1));
    let closed = rho
        .mul(&sv.mul_i64(2).add_i64(1).mul(&rv).add(&sv).add_i64(1))
        .scale(&rat(1, 2));
    let s_closed = rho.mul(&rv.add(&sv).add_i64(1)).square();
    for (name, poly, expect) in [("L", &l, &closed), ("M", &m, &closed), ("S", &s, &s_closed)] {
        let d = poly.subst_x(&minus_rs).sub(expect);
        t.point(
            || alloc::format!("symbolic {name}(-rs)"),
            if d.is_zero() { Ok(()) } else { Err(mpoly::show(&d)) },
        );
    }
    for (label, sigma, pi) in section4_grid(cfg) {
        let res = (|| -> Check {
            let one = int(1);
            let rho = &pi * (&pi + &sigma + &one);
            let l_val = &rho * (int(2) * &pi + &sigma + &one) / int(2);
            // (2s+1)r + s + 1 = 2π + σ + 1.
            ensure!(l_val < int(0), "L(-rs) = {l_val} is not negative");
            let root = &rho * (&sigma + &one);
            ensure!(root >= int(0), "sqrt S(-rs) closed form {root} is negative");
            let gap = int(-2) * &l_val - &root;
            let expect = int(-2) * &pi * (&pi + &sigma + &one) * (&pi + &sigma + &one);
            ensure!(gap == expect, "2|L(-rs)| - sqrt S(-rs) = {gap}, expected {expect}");
            ensure!(gap > int(0), "2|L(-rs)| - sqrt S(-rs) = {gap} is not positive");
            Ok(())
        })();
        t.point(|| label, res);
    }
    t.finish()
}

/// Integer grid of the `r + s ≥ 0` section: `2 ≤ r ≤ N`, `−r ≤ s ≤ −2`.
fn section6_grid(cfg: &AuditConfig) -> Vec<(i64, i64)> {
    int_grid(2, cfg.grid_max, |r| -r, -2)
}

fn audit_square_dominance(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "square-dominance",
        alloc::format!("integer 2 <= r <= {}, -r <= s <= -2", cfg.grid_max),
    );
    for (r, s) in section6_grid(cfg) {
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_ints(r, s))?;
            let (l, m, sp) = lms_int(r, s);
            let quarter = rat(1, 4);
            let dl = &(&l * &l) - &sp.scale(&quarter);
            let dm = &(&m * &m) - &sp.scale(&quarter);
            let qa = ok(quadratic_from_pair(&c.alpha))?;
            let qb = ok(quadratic_from_pair(&(c.beta_minus.clone(), c.beta_plus.clone())))?;
            let qg = ok(quadratic_from_pair(&c.gamma))?;
            let bs = c.beta_shifted();
            let qb1 = ok(quadratic_from_pair(&bs))?;
            ensure!(dl == &qa * &(&qb * &qb), "L^2 - S/4 does not factor");
            ensure!(dm == &qg * &(&qb1 * &qb1), "M^2 - S/4 does not factor");
            let mrs = c.minus_rs();
            let above = Interval::above(&mrs);
            // The quadratic factors without a square stay positive on [−rs, ∞).
            for (name, f) in [("alpha", &qa), ("gamma", &qg)] {
                ensure!(sign(&f.eval_quad(&mrs))? == Ordering::Greater, "{name} factor not positive at -rs");
                let n = ok(count_real_roots(f, &above))?;
                ensure!(n == 0, "{name} factor has {n} roots above -rs");
            }
            // The squared factors vanish on [−rs, ∞) only at β₊, resp. β₊ + 1.
            ensure!(lt(&c.beta_minus, &mrs)? && lt(&mrs, &c.beta_plus)?, "beta_- < -rs < beta_+ fails");
            ensure!(lt(&bs.0, &mrs)? && lt(&mrs, &bs.1)?, "beta_- + 1 < -rs < beta_+ + 1 fails");
            ensure!(dl.eval_quad(&c.beta_plus).is_zero(), "L^2 - S/4 nonzero at beta_+");
            ensure!(dm.eval_quad(&bs.1).is_zero(), "M^2 - S/4 nonzero at beta_+ + 1");
            Ok(())
        })();
        t.point(|| alloc::format!("(r, s) = ({r}, {s})"), res);
    }
    t.finish()
}

fn audit_root_locations(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "root-locations",
        alloc::format!(
            "L, M: 2 <= r <= {n}, 0 <= u <= r-2; S and ordering: 3 <= r <= {n}, 1 <= u <= r-2",
            n = cfg.grid_max
        ),
    );
    let mut grid: Vec<(i64, i64)> = (2..=cfg.grid_max).map(|r| (r, 0)).collect();
    grid.extend(ru_grid(cfg.grid_max, 1));
    grid.sort();
    for (r, u) in grid {
        let s = u - r;
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_ints(r, s))?;
            let (l, m, sp) = lms_int(r, s);
            let mrs = c.minus_rs();
            let above = Interval::above(&mrs);
            let bp1 = c.beta_shifted().1;
            // ζ: the only root of L above −rs, with β₊ ≤ ζ < δ.
            ensure!(ok(count_real_roots(&l, &above))? == 1, "L does not have exactly one root above -rs");
            let l_beta = l.eval_quad(&c.beta_plus);
            ensure!(sign(&l_beta)? != Ordering::Greater, "L(beta_+) = {l_beta} > 0");
            ensure!(sign(&l.eval_quad(&c.delta))? == Ordering::Greater, "L(delta) <= 0");
            if !l_beta.is_zero() {
                let n = ok(count_real_roots(&l, &ok(Interval::between(&c.beta_plus, &c.delta))?))?;
                ensure!(n == 1, "L has {n} roots in (beta_+, delta)");
            }
            // η: the only root of M above −rs, with δ < η ≤ β₊ + 1.
            ensure!(ok(count_real_roots(&m, &above))? == 1, "M does not have exactly one root above -rs");
            let m_beta = m.eval_quad(&bp1);
            ensure!(sign(&m_beta)? != Ordering::Less, "M(beta_+ + 1) = {m_beta} < 0");
            ensure!(sign(&m.eval_quad(&c.delta))? == Ordering::Less, "M(delta) >= 0");
            if !m_beta.is_zero() {
                let n = ok(count_real_roots(&m, &ok(Interval::between(&c.delta, &bp1))?))?;
                ensure!(n == 1, "M has {n} roots in (delta, beta_+ + 1)");
            }
            if u == 0 {
                return Ok(());
            }
            // Two simple roots ξ₁ ∈ (β₊, δ), ξ₂ ∈ (δ, β₊ + 1) of S.
            let lower = ok(Interval::between(&c.beta_plus, &c.delta))?;
            let upper = ok(Interval::between(&c.delta, &bp1))?;
            ensure!(ok(count_real_roots(&sp, &Interval::whole_line()))? == 2, "S does not have two real roots");
            ensure!(ok(count_real_roots(&sp, &lower))? == 1, "no single root of S in (beta_+, delta)");
            ensure!(ok(count_real_roots(&sp, &upper))? == 1, "no single root of S in (delta, beta_+ + 1)");
            ensure!(sp.gcd(&sp.derivative()).degree() == Some(0), "S has a repeated root");
            // ξ₁ < ζ < η < ξ₂ through signs of L and M at the roots of S,
            // and of L at the root of M.
            ensure!(ok(tarski_query(&sp, &l, &lower))? == -1, "L(xi_1) is not negative");
            ensure!(ok(tarski_query(&sp, &l, &upper))? == 1, "L(xi_2) is not positive");
            ensure!(ok(tarski_query(&sp, &m, &lower))? == -1, "M(xi_1) is not negative");
            ensure!(ok(tarski_query(&sp, &m, &upper))? == 1, "M(xi_2) is not positive");
            ensure!(ok(tarski_query(&m, &l, &above))? == 1, "L(eta) is not positive");
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

fn audit_sturm_table(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new("sturm-table", alloc::format!("3 <= r <= {}, 1 <= u <= r-2", cfg.grid_max));
    for (r, u) in ru_grid(cfg.grid_max, 1) {
        let res = (|| -> Check {
            let (_, _, sp) = lms_int(r, u - r);
            let chain = ok(SturmChain::new(&sp))?;
            ensure!(chain.degrees() == [4, 3, 2, 1, 0], "degrees {:?}", chain.degrees());
            let pts = ok(PositiveSumPoints::new(r, u))?;
            let lead = chain.leading_coeffs();
            ensure!(lead == pts.sturm_leading(), "leading coefficients {lead:?}");
            ensure!(chain.signs_at_pos_inf() == [1, 1, 1, -1, -1], "row +inf {:?}", chain.signs_at_pos_inf());
            ensure!(chain.signs_at_neg_inf() == [1, -1, 1, 1, -1], "row -inf {:?}", chain.signs_at_neg_inf());
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

fn audit_beta_signs(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new("beta-signs", alloc::format!("3 <= r <= {}, 1 <= u <= r-2", cfg.grid_max));
    for (r, u) in ru_grid(cfg.grid_max, 1) {
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_ints(r, u - r))?;
            let (l, m, _) = lms_int(r, u - r);
            let lb = l.eval_quad(&c.beta_plus);
            let mb = m.eval_quad(&c.beta_shifted().1);
            ensure!(sign(&lb)? != Ordering::Greater, "L(beta_+) = {lb}");
            ensure!(sign(&mb)? != Ordering::Less, "M(beta_+ + 1) = {mb}");
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

/// `S''` as an explicit quadratic in `X` for `s = u − r`.
fn s_second_derivative(r: i64, u: i64) -> RatPoly {
    let (r, u) = (int(r), int(u));
    let u1 = &u + int(1);
    let w = &u * &u + int(2) * &u + int(2);
    let v = &u * &u + int(2) * &u + int(6);
    let c2 = int(12) * &u1 * &u1;
    let c1 = int(-12) * (int(2) * &w * &r * &r - int(2) * &u * &w * &r - &u1);
    let c0 = int(8) * &v * r.pow(4) - int(16) * &u * &v * r.pow(3)
        + int(4) * (int(2) * u.pow(4) + int(5) * u.pow(3) + int(15) * u.pow(2) - int(4) * &u - int(6)) * r.pow(2)
        - int(4) * &u * &u1 * (&u * &u + int(2) * &u - int(6)) * &r
        + int(2);
    RatPoly::new(alloc::vec![c0, c1, c2])
}

fn audit_second_derivative_roots(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "second-derivative-roots",
        alloc::format!("3 <= r <= {}, 1 <= u <= r-2", cfg.grid_max),
    );
    for (r, u) in ru_grid(cfg.grid_max, 1) {
        let res = (|| -> Check {
            let pts = ok(PositiveSumPoints::new(r, u))?;
            let c = ok(CriticalPoints::from_ints(r, u - r))?;
            let (_, _, sp) = lms_int(r, u - r);
            let dd = sp.derivative().derivative();
            ensure!(dd == s_second_derivative(r, u), "S'' = {dd}");
            ensure!(pts.c2 > int(0), "c2 = {} is not positive", pts.c2);
            ensure!(dd.eval_quad(&pts.tau_minus).is_zero(), "S''(tau_-) != 0");
            ensure!(dd.eval_quad(&pts.tau_plus).is_zero(), "S''(tau_+) != 0");
            ensure!(lt(&pts.tau_minus, &pts.tau_plus)?, "tau_- >= tau_+");
            ensure!(lt(&pts.tau_plus, &c.beta_plus)?, "tau_+ = {} not below beta_+ = {}", pts.tau_plus, c.beta_plus);
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

fn audit_g_positive(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new("g-positive", alloc::format!("3 <= r <= {}, 1 <= u <= r-2", cfg.grid_max));
    for (r, u) in ru_grid(cfg.grid_max, 1) {
        let res = (|| -> Check {
            let p = ok(PositiveSumPoints::new(r, u))?;
            let zero = int(0);
            ensure!(p.g1 > zero && p.g2 > zero && p.g3 > zero, "g = ({}, {}, {})", p.g1, p.g2, p.g3);
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

/// `κ(x) = (2s+1)²x³ − (2s+1)(8s³−2s²−s+2)x² − (16s⁵+8s²+2s−1)x + 4s² + s`.
pub fn kappa(s: i64, x: i64) -> BigRational {
    let (s, x) = (int(s), int(x));
    let t = int(2) * &s + int(1);
    &t * &t * x.pow(3) - &t * (int(8) * s.pow(3) - int(2) * s.pow(2) - &s + int(2)) * x.pow(2)
        - (int(16) * s.pow(5) + int(8) * s.pow(2) + int(2) * &s - int(1)) * &x
        + int(4) * s.pow(2)
        + &s
}

fn audit_kappa(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "kappa",
        alloc::format!("-{} <= s <= -2, integer -s+1 <= x < -2s+1", cfg.grid_max),
    );
    for s in -cfg.grid_max..=-2 {
        for x in (-s + 1)..(-2 * s + 1) {
            let v = kappa(s, x);
            let res = if v < int(0) { Ok(()) } else { Err(alloc::format!("kappa = {v}")) };
            t.point(|| alloc::format!("(s, x) = ({s}, {x})"), res);
        }
    }
    t.finish()
}

/// `ψ(x) = (s+1)(x+1)((2s+1)x − 1)`.
pub fn psi(s: i64, x: &BigRational) -> BigRational {
    let s = int(s);
    (&s + int(1)) * (x + int(1)) * ((int(2) * &s + int(1)) * x - int(1))
}

/// `φ(x) = 2ψ(x) − (2s+1)(x + 2s − 1)`.
pub fn phi(s: i64, x: &BigRational) -> BigRational {
    let sq = int(s);
    int(2) * psi(s, x) - (int(2) * &sq + int(1)) * (x + int(2) * &sq - int(1))
}

fn positive_sum_pairs(r_max: i64) -> Vec<(i64, i64)> {
    int_grid(3, r_max, |r| 1 - r, -2)
}

fn audit_psi_phi(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new("psi-phi", alloc::format!("3 <= r <= {}, 1-r <= s <= -2", cfg.grid_max));
    for (r, s) in positive_sum_pairs(cfg.grid_max) {
        let (p, f) = (psi(s, &int(r)), phi(s, &int(r)));
        let res = if p > int(0) && f > int(0) {
            Ok(())
        } else {
            Err(alloc::format!("psi = {p}, phi = {f}"))
        };
        t.point(|| alloc::format!("(r, s) = ({r}, {s})"), res);
    }
    t.finish()
}

fn audit_n_bound(cfg: &AuditConfig) -> AuditResult {
    // Integral h is rare, so this grid runs further out.
    let r_max = cfg.grid_max * 8;
    let mut t = Tally::new(
        "n-bound",
        alloc::format!("3 <= r <= {r_max}, 1-r <= s <= -2 with integral h, eps = +-1"),
    );
    for (r, s) in positive_sum_pairs(r_max) {
        let c = match CriticalPoints::from_ints(r, s) {
            Ok(c) => c,
            Err(e) => {
                t.point(|| alloc::format!("(r, s) = ({r}, {s})"), Err(e.to_string()));
                continue;
            }
        };
        let h = match c.h.to_rational() {
            Some(h) if is_integer(h) => h.clone(),
            _ => continue,
        };
        for eps in [-1, 1] {
            let res = (|| -> Check {
                let k1 = int(-r * s) + (&h + int(eps)) / int(2);
                let k2 = -&k1 * int((r + 1) * (s + 1)) / (&k1 + int(r * s));
                let n = int(1) + &k1 + &k2;
                let bound = int(-(2 * s + 1) * r + 2) + int(2) * psi(s, &int(r)) / (&h + int(1));
                ensure!(n >= bound, "n = {n} < {bound} at k1 = {k1}");
                Ok(())
            })();
            t.point(|| alloc::format!("(r, s, eps) = ({r}, {s}, {eps})"), res);
        }
    }
    t.finish()
}

/// A rational polynomial as integer numerators over one positive
/// denominator, for fast exact evaluation at small integers.
struct ScaledPoly {
    num: Vec<i128>,
    den: i128,
}

impl ScaledPoly {
    fn new(p: &RatPoly) -> Result<Self, String> {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let den = p.coeffs().iter().fold(num_bigint::BigInt::from(1), |d, c| d.lcm(c.denom()));
        let num = p
            .coeffs()
            .iter()
            .map(|c| (c.numer() * (&den / c.denom())).to_i128())
            .collect::<Option<Vec<_>>>()
            .ok_or("coefficient exceeds i128")?;
        Ok(Self { num, den: den.to_i128().ok_or("denominator exceeds i128")? })
    }

    /// Numerator of the value at `x`; the value is this over `den`.
    fn eval(&self, x: i128) -> Result<i128, String> {
        self.num.iter().rev().try_fold(0i128, |acc, c| {
            acc.checked_mul(x).and_then(|v| v.checked_add(*c)).ok_or_else(|| "i128 overflow".into())
        })
    }
}

/// [`sandwich_holds`] on values `l/dl`, `m/dm`, `s/ds` with positive
/// denominators.
fn sandwich_scaled(l: (i128, i128), m: (i128, i128), s: (i128, i128), plus: bool) -> Result<bool, String> {
    let sq = |v: (i128, i128)| -> Result<Ordering, String> {
        // 4v² against S, cleared of denominators.
        let lhs = v.0.checked_mul(v.0).and_then(|x| x.checked_mul(4 * s.1));
        let rhs = s.0.checked_mul(v.1 * v.1);
        match (lhs, rhs) {
            (Some(a), Some(b)) => Ok(a.cmp(&b)),
            _ => Err("i128 overflow".into()),
        }
    };
    let (lz, mz) = (l.0.cmp(&0), m.0.cmp(&0));
    Ok(if plus {
        (mz != Ordering::Greater || sq(m)? != Ordering::Greater)
            && (lz != Ordering::Less && sq(l)? != Ordering::Less)
    } else {
        (mz != Ordering::Greater && sq(m)? != Ordering::Less) && (lz != Ordering::Less || sq(l)? != Ordering::Greater)
    })
}

fn audit_sandwich_window(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "sandwich-window",
        alloc::format!(
            "3 <= r <= {}, 1 <= u <= r-2; integers in (-rs, 2(r^2 - rs) + 4] and the points beta_+, beta_+ + 1",
            cfg.grid_max
        ),
    );
    for (r, u) in ru_grid(cfg.grid_max, 1) {
        let s = u - r;
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_ints(r, s))?;
            let (l, m, sp) = lms_int(r, s);
            let (li, mi, si) = (ScaledPoly::new(&l)?, ScaledPoly::new(&m)?, ScaledPoly::new(&sp)?);
            let bp = &c.beta_plus;
            let bp1 = c.beta_shifted().1;
            let mrs = -r * s;
            let top = 2 * (mrs + r * r) + 4;
            // Both roots of S lie in (β₊, β₊ + 1), which holds at most one integer.
            let mut gap = None;
            for x in (mrs + 1)..=top {
                let xe = QuadExt::from_int(x);
                if lt(bp, &xe)? && lt(&xe, &bp1)? {
                    gap = Some(x);
                    break;
                }
                if !lt(&xe, bp)? {
                    break;
                }
            }
            for x in (mrs + 1)..=top {
                let xi = i128::from(x);
                let lx = (li.eval(xi)?, li.den);
                let mx = (mi.eval(xi)?, mi.den);
                let sx = (si.eval(xi)?, si.den);
                // A ∪ B membership: no root of S below x, or both.
                let in_ab = if gap == Some(x) && sx.0 != 0 {
                    let below = ok(count_real_roots(
                        &sp,
                        &ok(Interval::between(&c.minus_rs(), &QuadExt::from_int(x)))?,
                    ))?;
                    below != 1
                } else {
                    true
                };
                ensure!((sx.0 >= 0) == in_ab, "S({x}) = {}/{} but A-or-B membership is {in_ab}", sx.0, sx.1);
                if in_ab {
                    let plus = sandwich_scaled(lx, mx, sx, true)?;
                    let minus = sandwich_scaled(lx, mx, sx, false)?;
                    ensure!(plus == (QuadExt::from_int(x) == bp1), "+ sandwich at x = {x} is {plus}");
                    ensure!(minus == (QuadExt::from_int(x) == *bp), "- sandwich at x = {x} is {minus}");
                }
            }
            // At β₊ and β₊ + 1, √S/2 equals |L| and |M| respectively.
            let lb = l.eval_quad(bp);
            ensure!(sp.eval_quad(bp) == lb.pow(2).scale(&int(4)), "S(beta_+) != 4 L(beta_+)^2");
            ensure!(sign(&lb)? == Ordering::Less, "L(beta_+) = {lb} is not negative");
            ensure!(ok(count_real_roots(&sp, &ok(Interval::between(&c.minus_rs(), bp))?))? == 0, "beta_+ not in A");
            let mb = m.eval_quad(&bp1);
            ensure!(sp.eval_quad(&bp1) == mb.pow(2).scale(&int(4)), "S(beta_+ + 1) != 4 M(beta_+ + 1)^2");
            ensure!(sign(&mb)? == Ordering::Greater, "M(beta_+ + 1) = {mb} is not positive");
            ensure!(ok(count_real_roots(&sp, &Interval::above(&bp1)))? == 0, "beta_+ + 1 not in B");
            // − sandwich at β₊: M ≤ L = −√S/2 ≤ L; + fails since √S/2 = −L > L.
            ensure!(sign(&(&m.eval_quad(bp) - &lb))? != Ordering::Greater, "M(beta_+) > L(beta_+)");
            // + sandwich at β₊ + 1: M = √S/2 ≤ L; − fails since −√S/2 = −M < M.
            ensure!(sign(&(&l.eval_quad(&bp1) - &mb))? != Ordering::Less, "L(beta_+ + 1) < M(beta_+ + 1)");
            Ok(())
        })();
        t.point(|| alloc::format!("(r, u) = ({r}, {u})"), res);
    }
    t.finish()
}

fn audit_conference_window(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "conference-window",
        alloc::format!("k1 = 2r(r+1) in 1..={}, integers z in (r(r+1), k1 + 8]", cfg.conference_k_max),
    );
    for k in 1..=cfg.conference_k_max {
        let res = (|| -> Check {
            let tt = rat(k, 2);
            let (l, m, sp) = lms_conference(&tt);
            let (sm, spl) = ok(conference_s_pm(&tt))?;
            ensure!(lt(&q(&tt), &sm)?, "r(r+1) = {tt} not below s_- = {sm}");
            ensure!(lt(&sm, &spl)?, "s_- >= s_+");
            // Beyond k1 + 1 > s₊ the quartic S is negative (leading term −4tX³·X⁰…),
            // which rules out both sandwiches; checked below for z ≤ k1 + 8.
            ensure!(lt(&spl, &QuadExt::from_int(k + 1))?, "s_+ = {spl} not below k1 + 1");
            ensure!(sp.leading().map(|c| *c < int(0)) == Some(true), "leading coefficient of S not negative");
            let first = (k / 2) + 1;
            for z in first..=k + 8 {
                let zq = int(z);
                let (lz, mz, sz) = (l.eval(&zq), m.eval(&zq), sp.eval(&zq));
                let ze = QuadExt::from_int(z);
                let inside = !lt(&ze, &sm)? && !lt(&spl, &ze)?;
                ensure!((sz >= int(0)) == inside, "S({z}) = {sz} disagrees with [s_-, s_+]");
                ensure!(inside == (z == k), "integer {z} in [s_-, s_+]: {inside}");
                let either = sz >= int(0) && (sandwich_holds(&lz, &mz, &sz, true) || sandwich_holds(&lz, &mz, &sz, false));
                ensure!(either == (z == k), "sandwich at z = {z} is {either}");
            }
            let kq = int(k);
            let one = int(1);
            ensure!(l.eval(&kq) == &tt * (int(4) * &tt + &one) / int(2), "L(k1) closed form");
            ensure!(m.eval(&kq) == -(&tt * (int(4) * &tt - &one)) / int(2), "M(k1) closed form");
            ensure!(sp.eval(&kq) == &tt * &tt, "S(k1) = r(r+1)^2 closed form");
            Ok(())
        })();
        t.point(|| alloc::format!("k1 = {k}"), res);
    }
    t.finish()
}

fn audit_zero_sum(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "zero-sum",
        alloc::format!("2 <= r <= {}, s = -r, integers z in (r^2, 4r^2 + 4]", cfg.grid_max),
    );
    for r in 2..=cfg.grid_max {
        let res = (|| -> Check {
            let c = ok(CriticalPoints::from_ints(r, -r))?;
            let bp = 2 * r * r - 1;
            ensure!(c.beta_plus == QuadExt::from_int(bp), "beta_+ = {}", c.beta_plus);
            ensure!(c.beta_minus.is_zero(), "beta_- = {}", c.beta_minus);
            let alpha = ok(conference_free_alpha(r))?;
            ensure!(c.alpha == alpha, "alpha = {:?}", c.alpha);
            let (l, m, sp) = lms_zero_sum(r);
            let r2 = QuadExt::from_int(r * r);
            let above = Interval::above(&r2);
            ensure!(ok(count_real_roots(&l, &above))? == 1 && l.eval(&int(bp)) == int(0), "zeta != beta_+");
            ensure!(ok(count_real_roots(&m, &above))? == 1 && m.eval(&int(bp + 1)) == int(0), "eta != beta_+ + 1");
            // τ± = (−1 ± √(16r²+1))/4 < r², and 2X² − 5X + 2r² + 1 has no real root.
            let root = ok(QuadExt::sqrt_rational(&int(16 * r * r + 1)))?;
            let tau_plus = (&root - &QuadExt::one()).scale(&rat(1, 4));
            ensure!(lt(&tau_plus, &r2)?, "tau_+ = {tau_plus} not below r^2");
            ensure!(17 - 16 * r * r < 0, "discriminant of 2X^2 - 5X + 2r^2 + 1 not negative");
            for z in (r * r + 1)..=(4 * r * r + 4) {
                let zq = int(z);
                let (lz, mz, sz) = (l.eval(&zq), m.eval(&zq), sp.eval(&zq));
                let nonneg = sz >= int(0);
                let i = nonneg && sandwich_holds(&lz, &mz, &sz, true);
                let ii = nonneg && sandwich_holds(&lz, &mz, &sz, false);
                let iii = sz == int(0);
                let iv = z == bp || z == bp + 1;
                ensure!(i == iv && ii == iv && iii == iv, "z = {z}: ({i}, {ii}, {iii}, {iv})");
            }
            Ok(())
        })();
        t.point(|| alloc::format!("r = {r}"), res);
    }
    t.finish()
}

/// `α± = (−1 ± √(8r²+1))/2` when `s = −r`.
fn conference_free_alpha(r: i64) -> Result<(QuadExt, QuadExt), crate::arith::ArithError> {
    let root = QuadExt::sqrt_rational(&int(8 * r * r + 1))?.scale(&rat(1, 2));
    let c = QuadExt::from_rational(rat(-1, 2));
    Ok((c.try_sub(&root)?, c.try_add(&root)?))
}

fn solution_points(cfg: &AuditConfig) -> Vec<(SrgParams, Family)> {
    let mut out = Vec::new();
    for tt in 1..=100 {
        let (n, k, l, m) = conference_tuple(tt);
        if let Ok(p) = params_from_nklm(n, k, l, m) {
            for f in [Family::IaPlus, Family::IaMinus, Family::IbPlus, Family::IbMinus] {
                out.push((p.clone(), f));
            }
        }
    }
    for r in 2..=cfg.grid_max.max(30) {
        let r2 = r * r;
        if let Ok(p) = params_from_nklm(4 * r2 - 1, 2 * r2, r2, r2) {
            out.push((p, Family::Ii));
        }
    }
    out
}

fn audit_necessity(cfg: &AuditConfig) -> AuditResult {
    let mut t = Tally::new(
        "necessity-identities",
        alloc::format!(
            "all closed-form solutions: conference 1 <= t <= 100, (4r^2-1, 2r^2, r^2, r^2) for 2 <= r <= {}",
            cfg.grid_max.max(30)
        ),
    );
    for (p, family) in solution_points(cfg) {
        let res = (|| -> Check {
            let w = ok(theorem_weights(&p, family))?;
            let e = ok(lms_at_k1(&p))?;
            let a = w.w().clone().map(|x| QuadExt::from_rational(x.a().clone()));
            let resid = ok(necessity_residuals(&e, &p, &a))?;
            ensure!(resid.iter().all(QuadExt::is_zero), "residuals {resid:?}");
            let [x0, x1, x2] = w.w();
            let v1 = f1(p.r_plus_s(), x0, x1, x2);
            let v2 = f2(p.r_plus_s(), p.r_times_s(), x0, x1, x2);
            ensure!(v1.is_zero() && v2.is_zero(), "f1 = {v1}, f2 = {v2}");
            Ok(())
        })();
        t.point(|| alloc::format!("{} {}", p, family), res);
    }
    t.finish()
}

/// Runs one audit by identifier.
pub fn run_audit(id: &str, cfg: &AuditConfig) -> Result<AuditResult, AuditError> {
    Ok(match id {
        "factorization" => audit_factorization(cfg),
        "m-relation" => audit_m_relation(cfg),
        "specializations" => audit_specializations(cfg),
        "critical-order" => audit_critical_order(cfg),
        "lms-at-minus-rs" => audit_lms_at_minus_rs(cfg),
        "square-dominance" => audit_square_dominance(cfg),
        "root-locations" => audit_root_locations(cfg),
        "sturm-table" => audit_sturm_table(cfg),
        "beta-signs" => audit_beta_signs(cfg),
        "second-derivative-roots" => audit_second_derivative_roots(cfg),
        "g-positive" => audit_g_positive(cfg),
        "kappa" => audit_kappa(cfg),
        "psi-phi" => audit_psi_phi(cfg),
        "n-bound" => audit_n_bound(cfg),
        "sandwich-window" => audit_sandwich_window(cfg),
        "conference-window" => audit_conference_window(cfg),
        "zero-sum" => audit_zero_sum(cfg),
        "necessity-identities" => audit_necessity(cfg),
        other => return Err(AuditError::UnknownId(other.to_string())),
    })
}

/// Every audit, in [`AUDIT_IDS`] order.
pub fn run_all(cfg: &AuditConfig) -> Vec<AuditResult> {
    AUDIT_IDS
        .iter()
        .map(|id| run_audit(id, cfg).expect("listed ids are known"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> AuditConfig {
        AuditConfig {
            grid_max: 7,
            conference_k_max: 40,
            samples: 10,
            seed: 3,
        }
    }

    #[test]
    fn every_audit_passes_on_a_small_grid() {
        let results = run_all(&small());
        let failed: Vec<String> = results.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn gamma_above_minus_rs_at_k1_one() {
        let c = CriticalPoints::from_sum_product(&int(-1), &rat(-1, 2)).unwrap();
        assert_eq!(c.gamma, (QuadExt::from_int(1), QuadExt::from_int(1)));
        assert_eq!(c.minus_rs(), QuadExt::from_rational(rat(1, 2)));
        let c = CriticalPoints::from_sum_product(&int(-1), &int(-1)).unwrap();
        assert!(!c.gamma.0.is_real());
    }

    #[test]
    fn kappa_example() {
        assert!(kappa(-2, 3) < int(0));
    }

    #[test]
    fn sandwich_by_squaring() {
        // Paley(9) at k1 = 4: L = 9, M = −7, S = 4; both branches hold.
        assert!(sandwich_holds(&int(9), &int(-7), &int(4), true));
        assert!(sandwich_holds(&int(9), &int(-7), &int(4), false));
        // √S/2 = 3 > L = 2.
        assert!(!sandwich_holds(&int(2), &int(-7), &int(36), true));
    }

    #[test]
    fn scaled_sandwich_matches_rational() {
        for (l, m, sv) in [(9i64, -7i64, 4i64), (2, -7, 36), (-3, -5, 36), (4, 3, 36), (0, 0, 0)] {
            let (li, mi, si) = (i128::from(l), i128::from(m), i128::from(sv));
            for plus in [true, false] {
                assert_eq!(
                    sandwich_scaled((2 * li, 2), (3 * mi, 3), (si, 1), plus).unwrap(),
                    sandwich_holds(&int(l), &int(m), &int(sv), plus),
                    "({l}, {m}, {sv}) {plus}"
                );
            }
        }
    }

    #[test]
    fn unknown_id() {
        assert!(run_audit("nope", &small()).is_err());
    }

    #[test]
    fn seed_determinism() {
        let a = run_audit("factorization", &small()).unwrap();
        let b = run_audit("factorization", &small()).unwrap();
        assert_eq!(a, b);
    }
}
