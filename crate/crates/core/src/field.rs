//! Polynomial vector fields on R^n.

use alloc::vec::Vec;

use crate::poly::{Poly, Rational};

/// A vector field `sum_i u^i(x) d/dx_i` with polynomial components.
///
/// Every component lives in the ring `Q[x_1, .., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVectorField {
    components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn zero(n: usize) -> Self {
        PolyVectorField { components: (0..n).map(|_| Poly::zero(n)).collect() }
    }

    /// Panics if a component is not a polynomial in exactly `components.len()` variables.
    pub fn new(components: Vec<Poly>) -> Self {
        let n = components.len();
        assert!(components.iter().all(|c| c.nvars() == n), "components must be polynomials in n variables");
        PolyVectorField { components }
    }

    /// The field `p * d/dx_dir`.
    pub fn single(n: usize, dir: usize, p: Poly) -> Self {
        let mut f = Self::zero(n);
        f.components[dir] = p;
        f
    }

    /// The Euler field `sum_i x_i d/dx_i`.
    pub fn euler(n: usize) -> Self {
        PolyVectorField { components: (0..n).map(|i| Poly::var(n, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.components.iter().filter_map(Poly::total_degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        PolyVectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        PolyVectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyVectorField { components: self.components.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplies every component by the function `f`.
    pub fn mul_fn(&self, f: &Poly) -> Self {
        PolyVectorField { components: self.components.iter().map(|p| f * p).collect() }
    }

    /// `self(f) = sum_j u^j df/dx_j`.
    pub fn apply(&self, f: &Poly) -> Poly {
        f.directional(&self.components)
    }

    /// Lie bracket `[u, v]^i = u(v^i) - v(u^i)`.
    pub fn bracket(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let components = (0..self.dim()).map(|i| self.apply(&other.components[i]) - other.apply(&self.components[i])).collect();
        PolyVectorField { components }
    }

    /// Divergence with respect to the standard volume, `sum_i d u^i / dx_i`.
    pub fn divergence(&self) -> Poly {
        let n = self.dim();
        self.components.iter().enumerate().fold(Poly::zero(n), |acc, (i, c)| acc + c.derivative(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use alloc::vec;

    #[test]
    fn bracket_of_coordinate_fields() {
        // [x1 d2, x2 d1] = x1 d1 - x2 d2
        let a = PolyVectorField::single(2, 1, Poly::var(2, 0));
        let b = PolyVectorField::single(2, 0, Poly::var(2, 1));
        let expected = PolyVectorField::new(vec![Poly::var(2, 0), -Poly::var(2, 1)]);
        assert_eq!(a.bracket(&b), expected);
    }

    #[test]
    fn euler_divergence_is_dimension() {
        assert_eq!(PolyVectorField::euler(3).divergence(), Poly::constant(3, int(3)));
    }
}
