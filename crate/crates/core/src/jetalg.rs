//! The Lie algebroid of k-jets of vector fields over R^n.
//!
//! A section `tau` of `J^k(TR^n)` assigns to each base point `m` a k-jet
//! `sum_{|alpha| <= k} c_{alpha,i}(m) (x - m)^alpha d_i`. It is stored as
//! one polynomial per direction in the variables `m_1..m_n, h_1..h_n` with
//! `h = x - m`, truncated at `h`-degree `k`. The `h`-free part is the
//! anchor `u(m)`; the remaining coefficients are the order `1..=k` part of
//! the jet. Relative to the prolongation `j^k`, every section splits as
//! `tau = j^k(u) + (tau - j^k(u))`, where the second summand vanishes at
//! each base point (a section of `J^{k,0}`).
//!
//! The bracket is defined on the three kinds of pairs:
//!
//! * `[j^k u, j^k u'] = j^k [u, u']`,
//! * `[tau, tau']_m = j^k_m [v_m, v'_m]` for vertical sections,
//! * `[j^k u, tau]_m = j^k_m [u, v_m] + j^k_m (d_u|_m (x -> v_x))`,
//!
//! extended bilinearly, where `m -> v_m` is any polynomial family of fields
//! with `v_m(m) = 0` whose k-jet at `m` is `tau_m`. Only the sum in the last
//! line is independent of the family; [`extension_independence_check`]
//! verifies that on explicit families.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PolyVectorField;
use crate::poly::{Exponents, Poly};
use crate::syntax::{self, ParseError, VarNames};

/// Default bound on the degree of coefficient polynomials.
pub const DEFAULT_DEGREE_CAP: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("jet order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("jet order must be at least 1")]
    ZeroOrder,
    #[error("coefficient degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("extension family does not vanish at its base point")]
    NotVanishingAtBasePoint,
    #[error("extension family does not represent the vertical part of the jet")]
    FamilyMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A section of `J^k(TR^n)` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JetField {
    n: usize,
    order: u32,
    /// One polynomial per direction in `(m, h)`, `h`-degree at most `order`.
    jet: Vec<Poly>,
}

fn m_vars(n: usize) -> core::ops::Range<usize> {
    0..n
}

fn h_vars(n: usize) -> core::ops::Range<usize> {
    n..2 * n
}

/// Embeds a polynomial in `x` into the `(m, h)` ring as a polynomial in `m`.
fn at_base_point(p: &Poly) -> Poly {
    let n = p.nvars();
    p.rename(2 * n, &(0..n).collect::<Vec<_>>())
}

/// `p(m + h)` in the `(m, h)` ring.
fn shifted(p: &Poly) -> Poly {
    let n = p.nvars();
    let images: Vec<Poly> = (0..n).map(|j| Poly::var(2 * n, j) + Poly::var(2 * n, n + j)).collect();
    p.substitute(&images)
}

fn truncate_jet(p: &Poly, order: u32) -> Poly {
    let n = p.nvars() / 2;
    p.truncate_in(h_vars(n), order)
}

/// `sum_j a^j d b / dh_j - b^j d a / dh_j`, componentwise over `i`.
fn h_bracket(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut acc = Poly::zero(2 * n);
            for j in 0..n {
                acc = acc + &a[j] * &b[i].derivative(n + j) - &b[j] * &a[i].derivative(n + j);
            }
            acc
        })
        .collect()
}

fn add_all(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_all(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Taylor jet of `u` at every base point, `h`-degree at most `order`.
fn taylor(u: &PolyVectorField, order: u32) -> Vec<Poly> {
    u.components().iter().map(|c| truncate_jet(&shifted(c), order)).collect()
}

impl JetField {
    /// Builds a section from its anchor and its order `1..=k` coefficients.
    ///
    /// Coefficients are keyed by `(alpha, direction)` and are polynomials in
    /// the base point `m` (an `n`-variable ring). Entries with `|alpha| = 0`
    /// or `|alpha| > order` are rejected by panic; those are programming
    /// errors rather than data errors.
    pub fn from_parts(order: u32, anchor: &PolyVectorField, coefficients: &BTreeMap<(Exponents, usize), Poly>) -> Self {
        let n = anchor.dim();
        let mut jet: Vec<Poly> = anchor.components().iter().map(at_base_point).collect();
        for ((alpha, dir), c) in coefficients {
            let k: u32 = alpha.iter().sum();
            assert!(alpha.len() == n && (1..=order).contains(&k), "coefficient index out of range");
            assert_eq!(c.nvars(), n, "coefficients are polynomials in the base point");
            let mut e = vec![0u32; 2 * n];
            e[n..].copy_from_slice(alpha);
            jet[*dir] = &jet[*dir] + &(&at_base_point(c) * &Poly::monomial(2 * n, e, crate::poly::int(1)));
        }
        JetField { n, order, jet }
    }

    pub fn zero(n: usize, order: u32) -> Self {
        JetField { n, order, jet: (0..n).map(|_| Poly::zero(2 * n)).collect() }
    }

    fn from_jet(n: usize, order: u32, jet: Vec<Poly>) -> Self {
        JetField { n, order, jet: jet.iter().map(|p| truncate_jet(p, order)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn anchor(&self) -> PolyVectorField {
        let n = self.n;
        PolyVectorField::new(
            self.jet
                .iter()
                .map(|p| {
                    let value = p.homogeneous_part_in(h_vars(n), 0);
                    Poly::from_terms(n, value.terms().map(|(e, c)| (e[..n].to_vec(), c.clone())))
                })
                .collect(),
        )
    }

    /// Coefficient `c_{alpha,dir}(m)` of `(x - m)^alpha d_dir`; `alpha` may be zero.
    pub fn coefficient(&self, alpha: &[u32], dir: usize) -> Poly {
        let n = self.n;
        let mut out = Poly::zero(n);
        for (e, c) in self.jet[dir].terms() {
            if e[n..] == *alpha {
                out.add_term(e[..n].to_vec(), c.clone());
            }
        }
        out
    }

    /// All nonzero order `1..=k` coefficients.
    pub fn coefficients(&self) -> BTreeMap<(Exponents, usize), Poly> {
        let n = self.n;
        let mut out: BTreeMap<(Exponents, usize), Poly> = BTreeMap::new();
        for (dir, p) in self.jet.iter().enumerate() {
            for (e, c) in p.terms() {
                if e[n..].iter().all(|&k| k == 0) {
                    continue;
                }
                out.entry((e[n..].to_vec(), dir)).or_insert_with(|| Poly::zero(n)).add_term(e[..n].to_vec(), c.clone());
            }
        }
        out
    }

    /// The `J^{k,0}` summand `tau - j^k(anchor(tau))`.
    pub fn vertical_part(&self) -> JetField {
        let t = taylor(&self.anchor(), self.order);
        JetField { n: self.n, order: self.order, jet: sub_all(&self.jet, &t) }
    }

    /// Whether the anchor vanishes, i.e. `tau` is a section of `J^{k,0}`.
    pub fn is_vertical(&self) -> bool {
        self.anchor().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.jet.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.order), (other.n, other.order));
        JetField { n: self.n, order: self.order, jet: add_all(&self.jet, &other.jet) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.order), (other.n, other.order));
        JetField { n: self.n, order: self.order, jet: sub_all(&self.jet, &other.jet) }
    }

    /// Maximal degree in the base point over anchor and coefficients.
    /// `f * self` for a function `f` of the base point.
    pub fn mul_base(&self, f: &Poly) -> Self {
        assert_eq!(f.nvars(), self.n, "base functions are polynomials in m");
        let g = at_base_point(f);
        JetField { n: self.n, order: self.order, jet: self.jet.iter().map(|p| p * &g).collect() }
    }

    pub fn coefficient_degree(&self) -> u32 {
        self.jet.iter().filter_map(|p| p.degree_in(m_vars(self.n))).max().unwrap_or(0)
    }

    fn check_cap(self, cap: u32) -> Result<Self, JetError> {
        let degree = self.coefficient_degree();
        if degree > cap {
            return Err(JetError::DegreeCap { degree, cap });
        }
        Ok(self)
    }
}

impl fmt::Display for JetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = VarNames::coordinates(self.n);
        let ms = VarNames::base_point(self.n);
        write!(f, "J^{}[anchor: {}", self.order, syntax::format_field(self.anchor().components(), &xs))?;
        for ((alpha, dir), c) in self.coefficients() {
            let idx: Vec<String> = alpha.iter().map(|a| format!("{a}")).collect();
            write!(f, "; ({}) d{}: {}", idx.join(","), dir + 1, syntax::format_poly(&c, &ms))?;
        }
        f.write_str("]")
    }
}

/// `j^k(u)`: anchor `u`, coefficients `(1/alpha!) d^alpha u(m)`.
pub fn jet_prolong(u: &PolyVectorField, order: u32) -> Result<JetField, JetError> {
    if order == 0 {
        return Err(JetError::ZeroOrder);
    }
    Ok(JetField { n: u.dim(), order, jet: taylor(u, order) })
}

pub fn anchor(t: &JetField) -> PolyVectorField {
    t.anchor()
}

/// `j^k_m [u, v_m] + j^k_m (d_u|_m (x -> v_x))` for the family given in `(m, h)`
/// coordinates by `family` and its base-point derivative `d_m family`.
fn mixed_term(u: &PolyVectorField, family: &[Poly], derivative_along_u: &[Poly], order: u32) -> (Vec<Poly>, Vec<Poly>) {
    let shifted_u: Vec<Poly> = u.components().iter().map(shifted).collect();
    let bracket: Vec<Poly> = h_bracket(&shifted_u, family).iter().map(|p| truncate_jet(p, order)).collect();
    let derivative: Vec<Poly> = derivative_along_u.iter().map(|p| truncate_jet(p, order)).collect();
    (bracket, derivative)
}

/// `d/ds v_{m + s u(m)}(x)` at `s = 0`, for `v_m(x) = V(m, x - m)`.
fn derivative_of_jet_family(u: &PolyVectorField, family: &[Poly]) -> Vec<Poly> {
    let n = u.dim();
    let um: Vec<Poly> = u.components().iter().map(at_base_point).collect();
    family
        .iter()
        .map(|v| um.iter().enumerate().fold(Poly::zero(2 * n), |acc, (j, uj)| acc + uj * &(v.derivative(j) - v.derivative(n + j))))
        .collect()
}

/// Bracket on `J^k(TR^n)` with the default degree cap.
pub fn bracket_jet(a: &JetField, b: &JetField) -> Result<JetField, JetError> {
    bracket_jet_capped(a, b, DEFAULT_DEGREE_CAP)
}

pub fn bracket_jet_capped(a: &JetField, b: &JetField, cap: u32) -> Result<JetField, JetError> {
    if a.n != b.n {
        return Err(JetError::DimensionMismatch(a.n, b.n));
    }
    if a.order != b.order {
        return Err(JetError::OrderMismatch(a.order, b.order));
    }
    let (n, k) = (a.n, a.order);
    let (ua, ub) = (a.anchor(), b.anchor());
    let (va, vb) = (a.vertical_part().jet, b.vertical_part().jet);

    let prolonged = taylor(&ua.bracket(&ub), k);
    let (br_ab, d_ab) = mixed_term(&ua, &vb, &derivative_of_jet_family(&ua, &vb), k);
    let (br_ba, d_ba) = mixed_term(&ub, &va, &derivative_of_jet_family(&ub, &va), k);
    let pointwise = h_bracket(&va, &vb);

    let mut jet = prolonged;
    jet = add_all(&jet, &add_all(&br_ab, &d_ab));
    jet = sub_all(&jet, &add_all(&br_ba, &d_ba));
    jet = add_all(&jet, &pointwise);
    JetField::from_jet(n, k, jet).check_cap(cap)
}

/// A polynomial family `m -> v_m` of vector fields with `v_m(m) = 0`.
///
/// Components are polynomials in `m_1..m_n, x_1..x_n` (in that order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFamily {
    n: usize,
    components: Vec<Poly>,
}

impl ExtensionFamily {
    pub fn new(components: Vec<Poly>) -> Result<Self, JetError> {
        let n = components.len();
        if let Some(c) = components.iter().find(|c| c.nvars() != 2 * n) {
            return Err(JetError::DimensionMismatch(2 * n, c.nvars()));
        }
        let fam = ExtensionFamily { n, components };
        if fam.in_jet_coordinates().iter().any(|p| !p.homogeneous_part_in(h_vars(n), 0).is_zero()) {
            return Err(JetError::NotVanishingAtBasePoint);
        }
        Ok(fam)
    }

    /// Parses e.g. `m1*x1 d1 - m1^2 d1` with `m` and `x` symbols.
    pub fn parse(s: &str, n: usize) -> Result<Self, JetError> {
        Self::new(syntax::parse_field(s, &VarNames::family(n), n)?)
    }

    /// The family `V(m, x - m)` given directly in `(m, h)` coordinates.
    pub fn from_jet_coordinates(components: Vec<Poly>) -> Result<Self, JetError> {
        let n = components.len();
        // x = m + h  <=>  h = x - m
        let images: Vec<Poly> =
            (0..2 * n).map(|j| if j < n { Poly::var(2 * n, j) } else { Poly::var(2 * n, j) - Poly::var(2 * n, j - n) }).collect();
        Self::new(components.iter().map(|p| p.substitute(&images)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn add(&self, other: &Self) -> Self {
        ExtensionFamily { n: self.n, components: add_all(&self.components, &other.components) }
    }

    /// Components rewritten with `x = m + h`.
    fn in_jet_coordinates(&self) -> Vec<Poly> {
        let n = self.n;
        let images: Vec<Poly> =
            (0..2 * n).map(|j| if j < n { Poly::var(2 * n, j) } else { Poly::var(2 * n, j - n) + Poly::var(2 * n, j) }).collect();
        self.components.iter().map(|p| p.substitute(&images)).collect()
    }

    /// `m -> j^k_m(v_m)`, a vertical jet field.
    pub fn jet(&self, order: u32) -> JetField {
        JetField::from_jet(self.n, order, self.in_jet_coordinates())
    }

    /// Whether the k-jets of the family agree with the vertical part of `t`.
    pub fn represents(&self, t: &JetField) -> bool {
        self.n == t.n && self.jet(t.order) == t.vertical_part()
    }

    /// The two right-hand terms of the mixed bracket, separately.
    pub fn mixed_terms(&self, u: &PolyVectorField, order: u32) -> (JetField, JetField) {
        let n = self.n;
        let um: Vec<Poly> = u.components().iter().map(|c| c.rename(2 * n, &(0..n).collect::<Vec<_>>())).collect();
        // derivative in m at fixed x, then move to (m, h)
        let dm: Vec<Poly> =
            self.components.iter().map(|v| (0..n).fold(Poly::zero(2 * n), |acc, j| acc + &um[j] * &v.derivative(j))).collect();
        let images: Vec<Poly> =
            (0..2 * n).map(|j| if j < n { Poly::var(2 * n, j) } else { Poly::var(2 * n, j - n) + Poly::var(2 * n, j) }).collect();
        let dm_jet: Vec<Poly> = dm.iter().map(|p| p.substitute(&images)).collect();
        let (bracket, derivative) = mixed_term(u, &self.in_jet_coordinates(), &dm_jet, order);
        (JetField::from_jet(n, order, bracket), JetField::from_jet(n, order, derivative))
    }
}

/// Outcome of [`extension_independence_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub pass: bool,
    /// The individual terms differ between the two families.
    pub terms_differ: bool,
    pub sum: JetField,
}

/// Computes `j^k_m [u, v_m] + j^k_m (d_u|_m (x -> v_x))` with both families
/// and compares the sums.
pub fn extension_independence_check(
    t: &JetField,
    fam1: &ExtensionFamily,
    fam2: &ExtensionFamily,
    u: &PolyVectorField,
) -> Result<ExtensionReport, JetError> {
    if u.dim() != t.n {
        return Err(JetError::DimensionMismatch(t.n, u.dim()));
    }
    if !fam1.represents(t) || !fam2.represents(t) {
        return Err(JetError::FamilyMismatch);
    }
    let (b1, d1) = fam1.mixed_terms(u, t.order);
    let (b2, d2) = fam2.mixed_terms(u, t.order);
    let s1 = b1.add(&d1);
    let s2 = b2.add(&d2);
    Ok(ExtensionReport { pass: s1 == s2, terms_differ: b1 != b2 || d1 != d2, sum: s1 })
}
