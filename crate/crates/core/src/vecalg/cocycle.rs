//! Divergence and the Lie-derivative 1-cocycle `f(v) = omega(v) + lambda * Div(v)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::VecElem;
use crate::field::PolyVectorField;
use crate::poly::{Poly, Rational};

/// Divergence with respect to `dx_1 ^ .. ^ dx_n`.
pub fn divergence(v: &VecElem) -> Poly {
    v.to_field().divergence()
}

/// A polynomial 1-form `sum_i w_i dx_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    coeffs: Vec<Poly>,
}

impl OneForm {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        let n = coeffs.len();
        assert!(coeffs.iter().all(|c| c.nvars() == n), "coefficients must be polynomials in n variables");
        OneForm { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        OneForm { coeffs: (0..n).map(|_| Poly::zero(n)).collect() }
    }

    /// `d(g)` for a polynomial `g`.
    pub fn exact(g: &Poly) -> Self {
        OneForm { coeffs: (0..g.nvars()).map(|i| g.derivative(i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `d omega = 0`, i.e. `d w_j / dx_i = d w_i / dx_j` for all pairs.
    pub fn is_closed(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.coeffs[j].derivative(i) == self.coeffs[i].derivative(j)))
    }

    pub fn eval(&self, v: &PolyVectorField) -> Poly {
        assert_eq!(v.dim(), self.dim());
        self.coeffs.iter().zip(v.components()).fold(Poly::zero(self.dim()), |acc, (w, c)| acc + w * c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CocycleError {
    #[error("omega not closed")]
    NotClosed,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("density must vanish at the origin")]
    DensityNotNormalised,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub checked: usize,
    /// Index of the first failing sample and its nonzero residual.
    pub first_failure: Option<(usize, Poly)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn cochain(omega: &OneForm, lambda: &Rational, v: &PolyVectorField) -> Poly {
    omega.eval(v) + v.divergence().scale(lambda)
}

/// `v(f(w)) - w(f(v)) - f([v, w])` for an arbitrary cochain `f`.
pub fn cocycle_residual<F: Fn(&PolyVectorField) -> Poly>(f: F, v: &PolyVectorField, w: &PolyVectorField) -> Poly {
    v.apply(&f(w)) - w.apply(&f(v)) - f(&v.bracket(w))
}

/// Checks `v(f(w)) - w(f(v)) - f([v, w]) = 0` exactly for every sample pair.
pub fn cocycle_check(
    omega: &OneForm,
    lambda: &Rational,
    samples: &[(PolyVectorField, PolyVectorField)],
) -> Result<CocycleReport, CocycleError> {
    if !omega.is_closed() {
        return Err(CocycleError::NotClosed);
    }
    for (idx, (v, w)) in samples.iter().enumerate() {
        if v.dim() != omega.dim() || w.dim() != omega.dim() {
            return Err(CocycleError::DimensionMismatch);
        }
        let residual = cocycle_residual(|f| cochain(omega, lambda, f), v, w);
        if !residual.is_zero() {
            return Ok(CocycleReport { checked: idx + 1, first_failure: Some((idx, residual)) });
        }
    }
    Ok(CocycleReport { checked: samples.len(), first_failure: None })
}

/// Result of [`density_change_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub checked: usize,
    pub degree_cap: u32,
    /// `Div_{e^h mu}(v) - Div_mu(v) = v(h)` below the cap, for every sample.
    pub shift_is_dh: bool,
    /// The shifted cochain still satisfies the cocycle identity below the cap.
    pub shifted_is_cocycle: bool,
}

impl DensityReport {
    pub fn passed(&self) -> bool {
        self.shift_is_dh && self.shifted_is_cocycle
    }
}

fn truncate_total(p: &Poly, cap: u32) -> Poly {
    p.truncate_in(0..p.nvars(), cap.saturating_sub(1))
}

/// `sum_{j < cap} (sign * h)^j / j!`, truncated below total degree `cap`.
fn exp_series(h: &Poly, sign: i64, cap: u32) -> Poly {
    let n = h.nvars();
    let hs = h.scale(&Rational::from_integer(BigInt::from(sign)));
    let mut out = Poly::one(n);
    let mut power = Poly::one(n);
    let mut fact = BigInt::one();
    for j in 1..cap {
        power = truncate_total(&(&power * &hs), cap);
        fact *= BigInt::from(j);
        out = out + power.scale(&Rational::new(BigInt::one(), fact.clone()));
    }
    truncate_total(&out, cap)
}

/// Replaces the volume `mu` by `e^h mu` and checks that the divergence
/// cocycle moves by the coboundary of the 0-cochain `lambda * h`.
///
/// The density is handled as a truncated power series: for each sample `v`
/// the new divergence is `(v(g) + g Div v) * g^{-1}` with `g = e^h`, all
/// computed modulo total degree `cap`. `h` must vanish at the origin so the
/// series is well defined at finite order.
pub fn density_change_check(
    h: &Poly,
    lambda: &Rational,
    samples: &[(PolyVectorField, PolyVectorField)],
    cap: u32,
) -> Result<DensityReport, CocycleError> {
    let n = h.nvars();
    if !h.coeff(&alloc::vec![0; n]).is_zero() {
        return Err(CocycleError::DensityNotNormalised);
    }
    // fields with constant terms lower degree by one, so carry one extra order
    let g = exp_series(h, 1, cap + 1);
    let g_inv = exp_series(h, -1, cap + 1);
    let new_div = |v: &PolyVectorField| -> Poly {
        let density_derivative = v.apply(&g) + &g * &v.divergence();
        truncate_total(&(&density_derivative * &g_inv), cap)
    };
    let mut shift_is_dh = true;
    let mut shifted_is_cocycle = true;
    for (v, w) in samples {
        if v.dim() != n || w.dim() != n {
            return Err(CocycleError::DimensionMismatch);
        }
        for f in [v, w] {
            let shift = new_div(f) - truncate_total(&f.divergence(), cap);
            // f'(v) - f(v) = lambda * (Div' v - Div v) = lambda * v(h)
            if shift != truncate_total(&f.apply(h), cap) {
                shift_is_dh = false;
            }
        }
        let residual = cocycle_residual(|f| new_div(f).scale(lambda), v, w);
        // differentiation lowers degree by at most one below the cap
        if !truncate_total(&residual, cap.saturating_sub(1)).is_zero() {
            shifted_is_cocycle = false;
        }
    }
    Ok(DensityReport { checked: samples.len(), degree_cap: cap, shift_is_dh, shifted_is_cocycle })
}
