//! Concrete strongly regular graphs as 2-class relation matrices.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::srg::{params_from_nklm, SrgError, SrgParams};

/// Largest field order accepted by [`paley_graph`].
pub const PALEY_ORDER_CAP: u64 = 2000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("relation matrix is malformed at ({0}, {1})")]
    Malformed(usize, usize),
    #[error("unsupported field order {0}: need q = p or p^2, p an odd prime, q = 1 mod 4, q <= {cap}", cap = PALEY_ORDER_CAP)]
    UnsupportedOrder(u64),
    #[error("triangular graph needs m >= 5, got {0}")]
    TooSmall(usize),
    #[error("not strongly regular: {0}")]
    NotStronglyRegular(RegularityWitness),
    #[error("graph text line {line}: {reason}")]
    Parse { line: usize, reason: &'static str },
    #[error(transparent)]
    Srg(#[from] SrgError),
}

/// Which count fails to be constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    Degree,
    /// Common neighbours of adjacent vertices.
    Lambda,
    /// Common neighbours of non-adjacent vertices.
    Mu,
}

/// Two vertex pairs of the same kind with different counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityWitness {
    pub kind: CountKind,
    pub first: (usize, usize, usize),
    pub other: (usize, usize, usize),
}

impl fmt::Display for RegularityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.first;
        let (x, y, z) = self.other;
        write!(
            f,
            "{:?} count {c} at ({a},{b}) but {z} at ({x},{y})",
            self.kind
        )
    }
}

/// Symmetric `n × n` matrix over `{0, 1, 2}`: 0 exactly on the diagonal,
/// 1 for edges (relation `R₁`), 2 for non-edges (relation `R₂`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationMatrix {
    n: usize,
    rel: Vec<u8>,
}

impl RelationMatrix {
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut rel = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::Malformed(i, row.len().min(n)));
            }
            rel.extend_from_slice(row);
        }
        let m = Self { n, rel };
        m.validate()?;
        Ok(m)
    }

    /// Relation matrix of a simple graph given by an adjacency predicate.
    pub fn from_adjacency(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut rel = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    rel[i * n + j] = if adjacent(i, j) { 1 } else { 2 };
                }
            }
        }
        Self { n, rel }
    }

    fn validate(&self) -> Result<(), GraphError> {
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                let ok = if i == j { v == 0 } else { (v == 1 || v == 2) && v == self.get(j, i) };
                if !ok {
                    return Err(GraphError::Malformed(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rel[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.rel.chunks(self.n.max(1)).take(self.n)
    }

    /// Text form: `n` on the first line, then `n` lines of `n` digits from
    /// `{0, 1, 2}`.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1) + 8);
        out.push_str(&self.n.to_string());
        out.push('\n');
        for row in self.rows() {
            out.extend(row.iter().map(|&v| char::from(b'0' + v)));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`RelationMatrix::to_text`]. Blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(GraphError::Parse { line: 1, reason: "empty input" })?;
        let n: usize = first.trim().parse().map_err(|_| GraphError::Parse {
            line: 1,
            reason: "first line must be the vertex count",
        })?;
        let mut rows = Vec::with_capacity(n);
        for (idx, line) in lines {
            let row: Option<Vec<u8>> = line
                .trim()
                .bytes()
                .map(|b| matches!(b, b'0'..=b'2').then(|| b - b'0'))
                .collect();
            let row = row.ok_or(GraphError::Parse { line: idx + 1, reason: "entries must be 0, 1 or 2" })?;
            if row.len() != n {
                return Err(GraphError::Parse { line: idx + 1, reason: "row length differs from n" });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(GraphError::Parse { line: rows.len() + 2, reason: "expected n rows" });
        }
        Self::from_rows(&rows)
    }

    /// Swaps relations 1 and 2.
    pub fn complement(&self) -> Self {
        let rel = self
            .rel
            .iter()
            .map(|&v| match v {
                1 => 2,
                2 => 1,
                v => v,
            })
            .collect();
        Self { n: self.n, rel }
    }

    /// Entrywise `A₀ + A₁ + A₂`; equals the all-ones matrix for every valid
    /// relation matrix.
    pub fn adjacency_sum(&self) -> Vec<u8> {
        self.rel
            .iter()
            .map(|&v| (v == 0) as u8 + (v == 1) as u8 + (v == 2) as u8)
            .collect()
    }

    fn neighbour_sets(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64);
        (0..self.n)
            .map(|i| {
                let mut set = vec![0u64; words];
                for j in 0..self.n {
                    if self.get(i, j) == 1 {
                        set[j / 64] |= 1 << (j % 64);
                    }
                }
                set
            })
            .collect()
    }
}

/// Checks `A₁² = k₁I + λA₁ + μA₂` entrywise and returns the normalized
/// parameters. When the complement is the better-ordered relation the
/// returned parameters say so through `complemented`.
pub fn verify_srg(g: &RelationMatrix) -> Result<SrgParams, GraphError> {
    let n = g.n;
    let sets = g.neighbour_sets();
    let mut seen: [Option<(usize, usize, usize)>; 3] = [None; 3];
    for i in 0..n {
        for j in i..n {
            let count: usize = sets[i]
                .iter()
                .zip(&sets[j])
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            let (slot, kind) = match g.get(i, j) {
                0 => (0, CountKind::Degree),
                1 => (1, CountKind::Lambda),
                _ => (2, CountKind::Mu),
            };
            match seen[slot] {
                None => seen[slot] = Some((i, j, count)),
                Some(first) if first.2 != count => {
                    return Err(GraphError::NotStronglyRegular(RegularityWitness {
                        kind,
                        first,
                        other: (i, j, count),
                    }))
                }
                Some(_) => {}
            }
        }
    }
    let (Some(k), Some(l), Some(m)) = (seen[0], seen[1], seen[2]) else {
        return Err(GraphError::Malformed(0, 0));
    };
    Ok(params_from_nklm(n as i64, k.2 as i64, l.2 as i64, m.2 as i64)?)
}

/// `GF(p)` or `GF(p²) = Z_p[x]/(x² − t)` with `t` the smallest quadratic
/// non-residue mod `p`. Elements are pairs `c₀ + c₁·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteField {
    pub p: u64,
    pub degree: u32,
    pub t: u64,
}

/// Element `c₀ + c₁·x` of a [`FiniteField`]; `c₁ = 0` in degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFieldElement {
    pub c0: u64,
    pub c1: u64,
}

impl FiniteField {
    /// Field of order `q = p` or `q = p²`, `p` an odd prime.
    pub fn new(q: u64) -> Option<Self> {
        let (p, degree) = if is_prime(q) {
            (q, 1)
        } else {
            let p = integer_sqrt(q);
            if p * p != q || !is_prime(p) {
                return None;
            }
            (p, 2)
        };
        if p == 2 {
            return None;
        }
        let t = (2..p).find(|&t| !is_residue(t, p))?;
        Some(Self { p, degree, t })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree)
    }

    /// Elements in index order `c₀ + p·c₁`.
    pub fn elements(&self) -> Vec<FiniteFieldElement> {
        let c1_range = if self.degree == 2 { self.p } else { 1 };
        (0..c1_range)
            .flat_map(|c1| (0..self.p).map(move |c0| FiniteFieldElement { c0, c1 }))
            .collect()
    }

    pub fn index(&self, x: FiniteFieldElement) -> usize {
        (x.c0 + self.p * x.c1) as usize
    }

    pub fn sub(&self, x: FiniteFieldElement, y: FiniteFieldElement) -> FiniteFieldElement {
        let p = self.p;
        FiniteFieldElement {
            c0: (x.c0 + p - y.c0) % p,
            c1: (x.c1 + p - y.c1) % p,
        }
    }

    pub fn mul(&self, x: FiniteFieldElement, y: FiniteFieldElement) -> FiniteFieldElement {
        let p = self.p;
        FiniteFieldElement {
            c0: (x.c0 * y.c0 + self.t * (x.c1 * y.c1 % p)) % p,
            c1: (x.c0 * y.c1 + x.c1 * y.c0) % p,
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn is_residue(a: u64, p: u64) -> bool {
    (1..p).any(|x| x * x % p == a % p)
}

/// Paley graph on `GF(q)`: `x ~ y` iff `x − y` is a nonzero square.
pub fn paley_graph(q: u64) -> Result<RelationMatrix, GraphError> {
    if q > PALEY_ORDER_CAP || q % 4 != 1 {
        return Err(GraphError::UnsupportedOrder(q));
    }
    let field = FiniteField::new(q).ok_or(GraphError::UnsupportedOrder(q))?;
    let elems = field.elements();
    let mut square = vec![false; elems.len()];
    for &x in &elems[1..] {
        square[field.index(field.mul(x, x))] = true;
    }
    Ok(RelationMatrix::from_adjacency(elems.len(), |i, j| {
        square[field.index(field.sub(elems[i], elems[j]))]
    }))
}

/// Triangular graph `T(m)`: 2-subsets of an `m`-set, adjacent when they
/// meet. Vertices are listed in lexicographic order.
pub fn triangular_graph(m: usize) -> Result<RelationMatrix, GraphError> {
    if m < 5 {
        return Err(GraphError::TooSmall(m));
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect();
    Ok(RelationMatrix::from_adjacency(pairs.len(), |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a == c || a == d || b == c || b == d
    }))
}

/// Cycle `C_n`, used as a non-example.
pub fn cycle_graph(n: usize) -> RelationMatrix {
    RelationMatrix::from_adjacency(n, |i, j| (i + 1) % n == j || (j + 1) % n == i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_parameters() {
        for (q, t) in [(5, (5, 2, 0, 1)), (9, (9, 4, 1, 2)), (13, (13, 6, 2, 3)), (25, (25, 12, 5, 6)), (49, (49, 24, 11, 12))] {
            let p = verify_srg(&paley_graph(q).unwrap()).unwrap();
            assert_eq!(p.tuple(), t);
            assert!(p.is_conference());
        }
    }

    #[test]
    fn paley_rejects_bad_orders() {
        for q in [7, 21, 81, 15, 3, 2009] {
            assert_eq!(paley_graph(q), Err(GraphError::UnsupportedOrder(q)));
        }
    }

    #[test]
    fn field_of_nine() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!((f.p, f.degree, f.t), (3, 2, 2));
        // x² = t.
        let x = FiniteFieldElement { c0: 0, c1: 1 };
        assert_eq!(f.mul(x, x), FiniteFieldElement { c0: 2, c1: 0 });
    }

    #[test]
    fn triangular_parameters() {
        let t6 = verify_srg(&triangular_graph(6).unwrap()).unwrap();
        assert_eq!(t6.tuple(), (15, 8, 4, 4));
        assert_eq!(t6.integer_eigenvalues(), Some((2, -2)));
        assert_eq!(triangular_graph(6).unwrap().order(), 15);
        let t5 = verify_srg(&triangular_graph(5).unwrap()).unwrap();
        assert_eq!(t5.tuple(), (10, 6, 3, 4));
        assert!(triangular_graph(4).is_err());
    }

    #[test]
    fn hexagon_is_not_strongly_regular() {
        match verify_srg(&cycle_graph(6)) {
            Err(GraphError::NotStronglyRegular(w)) => {
                assert_eq!(w.kind, CountKind::Mu);
                assert_ne!(w.first.2, w.other.2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn paley_is_self_complementary_in_parameters() {
        let g = paley_graph(13).unwrap();
        let a = verify_srg(&g).unwrap();
        let b = verify_srg(&g.complement()).unwrap();
        assert_eq!(a.tuple(), b.tuple());
        assert_eq!(a.r, b.r);
    }

    #[test]
    fn adjacency_matrices_sum_to_all_ones() {
        for g in [paley_graph(9).unwrap(), triangular_graph(5).unwrap()] {
            assert!(g.adjacency_sum().iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn text_round_trip() {
        let g = paley_graph(5).unwrap();
        let text = g.to_text();
        assert_eq!(text.lines().next(), Some("5"));
        assert_eq!(text.lines().nth(1), Some("01221"));
        assert_eq!(RelationMatrix::parse_text(&text).unwrap(), g);
        assert!(matches!(
            RelationMatrix::parse_text("2\n01\n13\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(RelationMatrix::parse_text("3\n012\n").is_err());
        assert!(matches!(RelationMatrix::parse_text("2\n01\n20\n"), Err(GraphError::Malformed(..))));
    }

    #[test]
    fn malformed_input() {
        let rows = vec![vec![0, 1], vec![2, 0]];
        assert_eq!(RelationMatrix::from_rows(&rows), Err(GraphError::Malformed(0, 1)));
    }
}
