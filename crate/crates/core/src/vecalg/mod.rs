//! The graded Lie algebra of formal vector fields vanishing at the origin.
//!
//! Elements are finite sums of monomial fields `x^alpha d_i` with
//! `|alpha| >= 1`. The Euler field `E = sum_i x_i d_i` acts diagonally:
//! `[E, x^alpha d_i] = (|alpha| - 1) x^alpha d_i`, which makes the algebra
//! graded by `|alpha| - 1`. A [`Truncation`] models the finite dimensional
//! quotient by all degrees above a fixed bound.

mod cocycle;
mod ideal;

pub use cocycle::{cocycle_check, cocycle_residual, density_change_check, divergence, CocycleError, CocycleReport, DensityReport, OneForm};
pub use ideal::{
    enumerate_graded_ideals_vec1, graded_ideal_closure, sl_basis, sl_span_check, GradedSubspace, IdealError, SlSpanReport,
    MAX_EXHAUSTIVE_DEGREE,
};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::PolyVectorField;
use crate::poly::{exponents_of_degree, Poly, Rational};
use crate::syntax::{self, ParseError, VarNames};

/// Exponent vector `(alpha_1, .., alpha_n)` of a monomial `x^alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }
}

/// Basis element `x^alpha d_dir` (direction is zero based).
///
/// Ordering is lexicographic on `(dir, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecMonomial {
    pub dir: usize,
    pub alpha: MultiIndex,
}

impl VecMonomial {
    /// Panics unless `|alpha| >= 1` and `dir < alpha.dim()`.
    pub fn new(alpha: Vec<u32>, dir: usize) -> Self {
        let alpha = MultiIndex::new(alpha);
        assert!(alpha.order() >= 1, "monomials of Vec_n vanish at the origin");
        assert!(dir < alpha.dim(), "direction out of range");
        VecMonomial { dir, alpha }
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    /// Eigenvalue of `ad(E)`, i.e. `|alpha| - 1`.
    pub fn euler_degree(&self) -> u32 {
        self.alpha.order() - 1
    }
}

/// `|alpha| - 1` for the monomial `x^alpha d_i`.
pub fn euler_degree(m: &VecMonomial) -> u32 {
    m.euler_degree()
}

/// All basis monomials of `Vec_n` of Euler degree `deg`, in canonical order.
pub fn basis_of_degree(n: usize, deg: u32) -> Vec<VecMonomial> {
    let alphas = exponents_of_degree(n, deg + 1);
    let mut out = Vec::with_capacity(n * alphas.len());
    for dir in 0..n {
        for a in &alphas {
            out.push(VecMonomial { dir, alpha: MultiIndex::new(a.clone()) });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VecError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("element of degree {degree} lies outside truncation level {level}")]
    OutsideTruncation { degree: u32, level: u32 },
    #[error("field does not vanish at the origin")]
    NotVanishing,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A finite exact-rational combination of monomial fields in `Vec_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VecElem {
    n: usize,
    terms: BTreeMap<VecMonomial, Rational>,
}

impl VecElem {
    pub fn zero(n: usize) -> Self {
        VecElem { n, terms: BTreeMap::new() }
    }

    pub fn monomial(m: VecMonomial) -> Self {
        Self::term(m, Rational::from_integer(BigInt::from(1)))
    }

    pub fn term(m: VecMonomial, c: Rational) -> Self {
        let mut v = Self::zero(m.dim());
        v.add_term(m, c);
        v
    }

    /// Shorthand for `c * x^alpha d_dir`.
    pub fn mono(alpha: &[u32], dir: usize, c: i64) -> Self {
        Self::term(VecMonomial::new(alpha.to_vec(), dir), Rational::from_integer(BigInt::from(c)))
    }

    /// The Euler field `sum_i x_i d_i`.
    pub fn euler(n: usize) -> Self {
        let mut v = Self::zero(n);
        for i in 0..n {
            let mut a = vec![0; n];
            a[i] = 1;
            v.add_term(VecMonomial::new(a, i), Rational::from_integer(BigInt::from(1)));
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VecMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &VecMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: VecMonomial, c: Rational) {
        assert_eq!(m.dim(), self.n, "monomial dimension mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::from_integer(BigInt::from(1))))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        VecElem { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Largest Euler degree present; `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(VecMonomial::euler_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(VecMonomial::euler_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components keyed by Euler degree.
    pub fn grade_decompose(&self) -> BTreeMap<u32, VecElem> {
        let mut out: BTreeMap<u32, VecElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.euler_degree()).or_insert_with(|| VecElem::zero(self.n)).add_term(m.clone(), c.clone());
        }
        out
    }

    /// Drops every component of degree above `level`.
    pub fn truncate(&self, level: u32) -> Self {
        VecElem {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.euler_degree() <= level).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Exact Lie bracket.
    pub fn bracket(&self, other: &Self) -> Result<Self, VecError> {
        if self.n != other.n {
            return Err(VecError::DimensionMismatch(self.n, other.n));
        }
        let mut out = VecElem::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in bracket_monomials(ma, mb) {
                    out.add_term(m, &c * Rational::from_integer(BigInt::from(k)));
                }
            }
        }
        Ok(out)
    }

    pub fn to_field(&self) -> PolyVectorField {
        let mut comps: Vec<Poly> = (0..self.n).map(|_| Poly::zero(self.n)).collect();
        for (m, c) in &self.terms {
            comps[m.dir].add_term(m.alpha.exponents().to_vec(), c.clone());
        }
        PolyVectorField::new(comps)
    }

    /// Fails if the field has a nonzero value at the origin.
    pub fn from_field(f: &PolyVectorField) -> Result<Self, VecError> {
        let n = f.dim();
        let mut v = VecElem::zero(n);
        for (dir, p) in f.components().iter().enumerate() {
            for (e, c) in p.terms() {
                if e.iter().all(|&k| k == 0) {
                    return Err(VecError::NotVanishing);
                }
                v.add_term(VecMonomial { dir, alpha: MultiIndex::new(e.clone()) }, c.clone());
            }
        }
        Ok(v)
    }

    /// Parses the canonical text syntax, e.g. `3*x1^2*x2 d1 - 1/2*x2 d2`.
    pub fn parse(s: &str, n: usize) -> Result<Self, VecError> {
        let comps = syntax::parse_field(s, &VarNames::coordinates(n), n)?;
        Self::from_field(&PolyVectorField::new(comps))
    }
}

impl fmt::Display for VecElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = syntax::format_field(self.to_field().components(), &VarNames::coordinates(self.n));
        f.write_str(&text)
    }
}

/// `[x^a d_i, x^b d_j] = b_i x^(a+b-e_i) d_j - a_j x^(a+b-e_j) d_i`, as a
/// list of (monomial, integer coefficient) with zero terms dropped.
pub fn bracket_monomials(a: &VecMonomial, b: &VecMonomial) -> Vec<(VecMonomial, i64)> {
    let (i, j) = (a.dir, b.dir);
    let sum: Vec<u32> = a.alpha.exponents().iter().zip(b.alpha.exponents()).map(|(x, y)| x + y).collect();
    let mut out = Vec::with_capacity(2);
    let bi = b.alpha.get(i);
    if bi > 0 {
        let mut e = sum.clone();
        e[i] -= 1;
        out.push((VecMonomial { dir: j, alpha: MultiIndex::new(e) }, bi as i64));
    }
    let aj = a.alpha.get(j);
    if aj > 0 {
        let mut e = sum;
        e[j] -= 1;
        let m = VecMonomial { dir: i, alpha: MultiIndex::new(e) };
        match out.iter_mut().find(|(x, _)| *x == m) {
            Some(slot) => slot.1 -= aj as i64,
            None => out.push((m, -(aj as i64))),
        }
    }
    out.retain(|(_, k)| *k != 0);
    out
}

/// The quotient `Vec_n / (degree > level)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Truncation(pub u32);

impl Truncation {
    pub fn level(self) -> u32 {
        self.0
    }

    pub fn check(self, v: &VecElem) -> Result<(), VecError> {
        match v.max_degree() {
            Some(d) if d > self.0 => Err(VecError::OutsideTruncation { degree: d, level: self.0 }),
            _ => Ok(()),
        }
    }

    /// Bracket in the truncated algebra; both arguments must lie within the level.
    pub fn bracket(self, a: &VecElem, b: &VecElem) -> Result<VecElem, VecError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.bracket(b)?.truncate(self.0))
    }

    /// Every basis monomial of degree `0..=level`.
    pub fn basis(self, n: usize) -> Vec<VecMonomial> {
        (0..=self.0).flat_map(|d| basis_of_degree(n, d)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use alloc::string::ToString;

    #[test]
    fn quoted_bracket_x1sq_d1_with_x1_d2() {
        let a = VecElem::mono(&[2, 0], 0, 1);
        let b = VecElem::mono(&[1, 0], 1, 1);
        assert_eq!(a.bracket(&b).unwrap(), VecElem::mono(&[2, 0], 1, 1));
    }

    #[test]
    fn order_bound_chain() {
        // [x1^2 d2, x1 x2 d1] = x1^3 d1 - 2 x1^2 x2 d2
        let a = VecElem::mono(&[2, 0], 1, 1);
        let b = VecElem::mono(&[1, 1], 0, 1);
        let expected = VecElem::mono(&[3, 0], 0, 1).add(&VecElem::mono(&[2, 1], 1, -2));
        assert_eq!(a.bracket(&b).unwrap(), expected);
    }

    #[test]
    fn euler_field_grades() {
        let e = VecElem::euler(2);
        let m = VecElem::mono(&[1, 3], 0, 1);
        assert_eq!(e.bracket(&m).unwrap(), m.scale(&int(3)));
        assert!(e.bracket(&e).unwrap().is_zero());
    }

    #[test]
    fn euler_degrees() {
        assert_eq!(euler_degree(&VecMonomial::new(vec![1], 0)), 0);
        assert_eq!(euler_degree(&VecMonomial::new(vec![2, 0], 1)), 1);
        assert_eq!(euler_degree(&VecMonomial::new(vec![1, 3], 0)), 3);
    }

    #[test]
    fn grade_decomposition_examples() {
        let v = VecElem::mono(&[1], 0, 1).add(&VecElem::mono(&[2], 0, 1));
        let parts = v.grade_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&0], VecElem::mono(&[1], 0, 1));
        assert_eq!(parts[&1], VecElem::mono(&[2], 0, 1));
        assert!(VecElem::zero(3).grade_decompose().is_empty());
        let h = VecElem::mono(&[1, 1], 1, 3).add(&VecElem::mono(&[0, 2], 0, -1));
        let parts = h.grade_decompose();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&1], h);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = VecElem::mono(&[1], 0, 1);
        let b = VecElem::mono(&[1, 0], 0, 1);
        assert_eq!(a.bracket(&b), Err(VecError::DimensionMismatch(1, 2)));
    }

    #[test]
    fn truncated_bracket_drops_high_degrees() {
        let t = Truncation(2);
        let a = VecElem::mono(&[2], 0, 1);
        let b = VecElem::mono(&[3], 0, 1);
        // [x^2 d, x^3 d] = x^4 d has degree 3
        assert!(t.bracket(&a, &b).unwrap().is_zero());
        let c = VecElem::mono(&[4], 0, 1);
        assert!(matches!(t.bracket(&a, &c), Err(VecError::OutsideTruncation { degree: 3, level: 2 })));
    }

    #[test]
    fn text_round_trip() {
        let v = VecElem::parse("3*x1^2*x2 d1 - 1/2*x2 d2", 2).unwrap();
        assert_eq!(v.to_string(), "3*x1^2*x2 d1 - 1/2*x2 d2");
        assert_eq!(VecElem::parse("1 d1", 1), Err(VecError::NotVanishing));
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(basis_of_degree(2, 0).len(), 4);
        assert_eq!(basis_of_degree(3, 1).len(), 18);
        assert_eq!(Truncation(3).basis(1).len(), 4);
    }
}
