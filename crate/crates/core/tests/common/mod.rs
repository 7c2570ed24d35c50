#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spinobstruct_core::jetalg::JetField;
use spinobstruct_core::poly::{exponents_of_degree, int};
use spinobstruct_core::{Poly, PolyVectorField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A polynomial in `n` variables with up to `terms` terms of degree at most `deg`.
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

/// A jet section with random anchor and random order `1..=k` coefficients.
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
