mod common;

use spinobstruct_core::jetalg::{anchor, bracket_jet_capped, jet_prolong, ExtensionFamily, JetField};
use spinobstruct_core::Poly;

const CAP: u32 = 40;

fn br(a: &JetField, b: &JetField) -> JetField {
    bracket_jet_capped(a, b, CAP).unwrap()
}

#[test]
fn jacobi_and_anchor_on_seeded_triples() {
    let mut r = common::rng(7);
    for _ in 0..40 {
        let a = common::jet(&mut r, 2, 2, 2);
        let b = common::jet(&mut r, 2, 2, 2);
        let c = common::jet(&mut r, 2, 2, 2);
        let j = br(&a, &br(&b, &c)).add(&br(&b, &br(&c, &a))).add(&br(&c, &br(&a, &b)));
        assert!(j.is_zero(), "Jacobi fails: {j}");
        assert_eq!(anchor(&br(&a, &b)), anchor(&a).bracket(&anchor(&b)));
        assert!(br(&a, &b).add(&br(&b, &a)).is_zero());
    }
}

#[test]
fn prolongation_is_a_homomorphism() {
    let mut r = common::rng(11);
    for k in 1..=3 {
        for _ in 0..10 {
            let u = common::field(&mut r, 2, 3);
            let v = common::field(&mut r, 2, 3);
            let lhs = jet_prolong(&u.bracket(&v), k).unwrap();
            let rhs = br(&jet_prolong(&u, k).unwrap(), &jet_prolong(&v, k).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

/// Leibniz rule of a Lie algebroid, built from prolongations and base
/// functions only: [f t, g s] = f g [t, s] + f rho(t)(g) s - g rho(s)(f) t.
#[test]
fn leibniz_rule_oracle() {
    let mut r = common::rng(13);
    for _ in 0..20 {
        let t = jet_prolong(&common::field(&mut r, 2, 2), 2).unwrap();
        let s = jet_prolong(&common::field(&mut r, 2, 2), 2).unwrap();
        let f = common::poly(&mut r, 2, 2, 2);
        let g = common::poly(&mut r, 2, 2, 2);
        let lhs = br(&t.mul_base(&f), &s.mul_base(&g));
        let fg = &f * &g;
        let rhs = br(&t, &s).mul_base(&fg).add(&s.mul_base(&(&f * &anchor(&t).apply(&g)))).sub(&t.mul_base(&(&g * &anchor(&s).apply(&f))));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn vertical_sections_form_an_ideal_of_the_anchor_kernel() {
    let mut r = common::rng(17);
    for _ in 0..10 {
        let a = common::jet(&mut r, 2, 2, 2);
        let v = common::jet(&mut r, 2, 2, 2).vertical_part();
        assert!(v.is_vertical());
        assert!(br(&a, &v).is_vertical());
    }
}

#[test]
fn extension_families_built_from_perturbations() {
    // any family with the same k-jets: add (x - m)^(k+1) terms
    let t = ExtensionFamily::parse("m1*x2 d1 - m1*m2 d1 + x1 d2 - m1 d2", 2).unwrap();
    let jet = t.jet(2);
    let h1 = Poly::var(4, 2) - Poly::var(4, 0);
    let bump = &(&h1 * &h1) * &h1;
    let pert = ExtensionFamily::new(vec![bump.clone(), Poly::zero(4)]).unwrap();
    let fam2 = t.add(&pert);
    assert!(fam2.represents(&jet));
    let u = spinobstruct_core::PolyVectorField::new(vec![Poly::var(2, 1), Poly::one(2)]);
    let rep = spinobstruct_core::jetalg::extension_independence_check(&jet, &t, &fam2, &u).unwrap();
    assert!(rep.pass);
}
