//! Sparse polynomials in `r`, `s`, `X` over the rationals, used to check
//! identities symbolically.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{format_rational, Ring};

/// Variable indices.
pub const R: usize = 0;
pub const S: usize = 1;
pub const X: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl MPoly {
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, <BigRational as One>::one());
        Self { terms }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert([0; 3], c);
        }
        Self { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: [&BigRational; 3]) -> BigRational {
        self.terms.iter().fold(<BigRational as Zero>::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (v, &k) in point.iter().zip(e) {
                t *= num_traits::pow((*v).clone(), k as usize);
            }
            acc + t
        })
    }

    /// `Σ_i c_i X^i` from coefficients that are polynomials in `r, s`.
    pub fn from_x_coeffs(coeffs: &[MPoly]) -> Self {
        let x = MPoly::var(X);
        let mut acc = MPoly::zero();
        let mut pw = MPoly::one();
        for c in coeffs {
            acc = acc.add(&c.mul(&pw));
            pw = pw.mul(&x);
        }
        acc
    }

    /// Substitutes a polynomial for `X`.
    pub fn subst_x(&self, value: &MPoly) -> Self {
        let mut acc = MPoly::zero();
        for (e, c) in &self.terms {
            let mono = MPoly {
                terms: BTreeMap::from([([e[0], e[1], 0], c.clone())]),
            };
            acc = acc.add(&mono.mul(&value.pow(e[2])));
        }
        acc
    }
}

impl Ring for MPoly {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(q.clone())
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(<BigRational as Zero>::zero);
            *entry += c;
            if Zero::is_zero(entry) {
                terms.remove(e);
            }
        }
        Self { terms }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<[u32; 3], BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *terms.entry(e).or_insert_with(<BigRational as Zero>::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        Self { terms }
    }

    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&format_rational(c))?;
            for (name, k) in ["r", "s", "X"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Display helper for witnesses.
pub fn show(p: &MPoly) -> String {
    alloc::format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Ring};

    #[test]
    fn ring_basics() {
        let r = MPoly::var(R);
        let s = MPoly::var(S);
        let lhs = r.add(&s).square();
        let rhs = r.square().add(&r.mul(&s).mul_i64(2)).add(&s.square());
        assert_eq!(lhs, rhs);
        assert!(lhs.sub(&rhs).is_zero());
        assert_eq!(lhs.num_terms(), 3);
        assert_eq!(lhs.eval([&int(2), &int(3), &int(0)]), int(25));
    }

    #[test]
    fn substitution() {
        let x = MPoly::var(X);
        let p = x.square().add_i64(1);
        let q = p.subst_x(&MPoly::var(R).add_i64(1));
        assert_eq!(q.eval([&int(2), &int(0), &int(0)]), int(10));
        assert_eq!(q.degree_in(X), 0);
    }
}
