//! Seeded random polynomials, fields, jets and extension families.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinobstruct_core::jetalg::{ExtensionFamily, JetField};
use spinobstruct_core::poly::{exponents_of_degree, int};
use spinobstruct_core::{Poly, PolyVectorField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `terms` terms of total degree at most `deg`, coefficients in `-3..=3`.
pub fn poly(r: &mut ChaCha8Rng, n: usize, deg: u32, terms: usize) -> Poly {
    let mut p = Poly::zero(n);
    for _ in 0..terms {
        let d = r.gen_range(0..=deg);
        let monos = exponents_of_degree(n, d);
        let e = monos[r.gen_range(0..monos.len())].clone();
        p.add_term(e, int(r.gen_range(-3..=3)));
    }
    p
}

pub fn field(r: &mut ChaCha8Rng, n: usize, deg: u32) -> PolyVectorField {
    PolyVectorField::new((0..n).map(|_| poly(r, n, deg, 2)).collect())
}

/// A jet section with a random anchor and three random order `1..=k` coefficients.
pub fn jet(r: &mut ChaCha8Rng, n: usize, k: u32, deg: u32) -> JetField {
    let anchor = field(r, n, deg);
    let mut coeffs = BTreeMap::new();
    for _ in 0..3 {
        let order = r.gen_range(1..=k);
        let monos = exponents_of_degree(n, order);
        let alpha = monos[r.gen_range(0..monos.len())].clone();
        let dir = r.gen_range(0..n);
        coeffs.insert((alpha, dir), poly(r, n, deg, 2));
    }
    JetField::from_parts(k, &anchor, &coeffs)
}

/// `c(m) h^alpha` in the `(m, h)` ring.
fn lift(c: &Poly, alpha: &[u32]) -> Poly {
    let n = alpha.len();
    let mut e = vec![0u32; 2 * n];
    e[n..].copy_from_slice(alpha);
    &c.rename(2 * n, &(0..n).collect::<Vec<_>>()) * &Poly::monomial(2 * n, e, int(1))
}

/// The polynomial family whose k-jets are exactly the vertical part of `t`.
pub fn minimal_family(t: &JetField) -> ExtensionFamily {
    let n = t.dim();
    let mut comps = vec![Poly::zero(2 * n); n];
    for ((alpha, dir), c) in t.vertical_part().coefficients() {
        comps[dir] = &comps[dir] + &lift(&c, &alpha);
    }
    ExtensionFamily::from_jet_coordinates(comps).expect("vertical part vanishes at the base point")
}

/// Random terms `c(m) (x - m)^beta` with `|beta| = k + 1`, invisible to k-jets.
pub fn perturbation(r: &mut ChaCha8Rng, n: usize, k: u32, deg: u32) -> ExtensionFamily {
    let monos = exponents_of_degree(n, k + 1);
    let comps = (0..n)
        .map(|_| {
            (0..2).fold(Poly::zero(2 * n), |acc, _| {
                let beta = &monos[r.gen_range(0..monos.len())];
                acc + lift(&poly(r, n, deg, 2), beta)
            })
        })
        .collect();
    ExtensionFamily::from_jet_coordinates(comps).expect("h-degree k + 1 vanishes at the base point")
}
