//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exponent vector; its length is the number of variables of the owning ring.
pub type Exponents = Vec<u32>;

/// A polynomial in `nvars` variables over the rationals.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so equality,
/// hashing and iteration order are canonical. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable with index `i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector has wrong length");
        let mut p = Poly::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * x^exps` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Maximal combined degree in the variables `vars`.
    pub fn degree_in(&self, vars: core::ops::Range<usize>) -> Option<u32> {
        self.terms.keys().map(|e| e[vars.clone()].iter().sum()).max()
    }

    /// Drops every term whose combined degree in `vars` exceeds `max`.
    pub fn truncate_in(&self, vars: core::ops::Range<usize>, max: u32) -> Self {
        let terms =
            self.terms.iter().filter(|(e, _)| e[vars.clone()].iter().sum::<u32>() <= max).map(|(e, c)| (e.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Keeps only the terms whose combined degree in `vars` equals `deg`.
    pub fn homogeneous_part_in(&self, vars: core::ops::Range<usize>, deg: u32) -> Self {
        let terms =
            self.terms.iter().filter(|(e, _)| e[vars.clone()].iter().sum::<u32>() == deg).map(|(e, c)| (e.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * Rational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Re-expresses the polynomial in a ring of `target_nvars` variables,
    /// sending variable `i` to variable `map[i]`.
    pub fn rename(&self, target_nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Poly::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0u32; target_nvars];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; all images share one ring.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(p.nvars), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k];
            }
            out = out + term;
        }
        out
    }

    /// Applies the derivation `sum_j field[j] * d/dx_j`.
    pub fn directional(&self, field: &[Poly]) -> Self {
        assert_eq!(field.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (j, f) in field.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out = out + f * &self.derivative(j);
        }
        out
    }

    /// Largest absolute numerator or denominator, for diagnostics.
    pub fn height(&self) -> BigInt {
        self.terms.values().flat_map(|c| [c.numer().abs(), c.denom().abs()]).max().unwrap_or_else(BigInt::zero)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial rings differ");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.clone() + rhs.clone()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        Poly { nvars: self.nvars, terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial rings differ");
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial rings differ");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Multinomial-style factorial of a multi-index, `alpha!`.
pub fn multi_factorial(alpha: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    for &a in alpha {
        for k in 2..=a {
            acc *= BigInt::from(k);
        }
    }
    acc
}

/// All exponent vectors of length `n` with entries summing to `deg`, in
/// lexicographic order.
pub fn exponents_of_degree(n: usize, deg: u32) -> Vec<Exponents> {
    fn rec(n: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if prefix.len() == n - 1 {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=deg {
            prefix.push(k);
            rec(n, deg - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, deg, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let p = &(&x(0) * &x(1)) + &x(0);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.total_degree(), None);
    }

    #[test]
    fn derivative_of_power() {
        let p = Poly::monomial(2, vec![3, 1], int(2));
        assert_eq!(p.derivative(0), Poly::monomial(2, vec![2, 1], int(6)));
        assert_eq!(p.derivative(1), Poly::monomial(2, vec![3, 0], int(2)));
    }

    #[test]
    fn substitute_shift_expands_binomially() {
        // (x + y)^2 with x -> x + y, y -> 0 in a two variable ring
        let p = Poly::monomial(2, vec![2, 0], int(1));
        let images = [&x(0) + &x(1), Poly::zero(2)];
        let q = p.substitute(&images);
        let expected = Poly::from_terms(2, [(vec![2, 0], int(1)), (vec![1, 1], int(2)), (vec![0, 2], int(1))]);
        assert_eq!(q, expected);
    }

    #[test]
    fn exponent_enumeration_counts() {
        assert_eq!(exponents_of_degree(3, 2).len(), 6);
        assert_eq!(exponents_of_degree(1, 4), vec![vec![4]]);
        assert_eq!(exponents_of_degree(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn directional_derivative_is_leibniz() {
        let f = &x(0) * &x(1);
        let field = [Poly::one(2), Poly::zero(2)];
        assert_eq!(f.directional(&field), x(1));
    }
}
