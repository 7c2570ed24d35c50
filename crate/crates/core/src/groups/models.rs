//! Concrete finite groups: SL(2, p) over prime fields and the finite
//! subgroups of SU(2), each with its central `-1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::finite::FiniteGroup;
use super::todd_coxeter::{todd_coxeter_with_images, TcError, DEFAULT_MAX_COSETS};
use super::word::Presentation;

/// A finite group with a designated central involution playing the role of `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    pub name: String,
    pub group: FiniteGroup,
    pub z: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("element {0} is not a central involution")]
    NotCentralInvolution(usize),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Tc(#[from] TcError),
}

impl FiniteModel {
    pub fn new(name: impl Into<String>, group: FiniteGroup, z: usize) -> Result<Self, ModelError> {
        if z >= group.order() || group.element_order(z) != 2 || !group.is_central(z) {
            return Err(ModelError::NotCentralInvolution(z));
        }
        Ok(FiniteModel { name: name.into(), group, z })
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// SL(2, p) as 2x2 matrices `[[a, b], [c, d]]` over F_p, in lexicographic
/// order of `(a, b, c, d)`. Returns the group and the index of `-I`.
pub fn sl2(p: u32) -> Result<(FiniteGroup, usize), ModelError> {
    if !is_prime(p) || p > 31 {
        return Err(ModelError::Parameter(format!("sl2 needs a prime p <= 31, got {p}")));
    }
    let mut elems: Vec<[u32; 4]> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        elems.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let index: BTreeMap<[u32; 4], usize> = elems.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mul = |x: &[u32; 4], y: &[u32; 4]| -> [u32; 4] {
        [(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p]
    };
    let mut table = Vec::with_capacity(elems.len() * elems.len());
    for x in &elems {
        for y in &elems {
            table.push(index[&mul(x, y)] as u32);
        }
    }
    let labels = elems.iter().map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])).collect();
    let g = FiniteGroup::from_table(table, Some(labels)).expect("SL(2,p) is a group");
    let minus = index[&[p - 1, 0, 0, p - 1]];
    Ok((g, minus))
}

/// `< s t | (st)^2 = s^l = t^n >`, the binary polyhedral group of type (2, l, n).
pub fn binary_polyhedral_presentation(l: u32, n: u32) -> Presentation {
    Presentation::parse("s t", &[&format!("(st)^2 = s^{l} = t^{n}")]).expect("valid presentation")
}

/// Materializes a (2, l, n) binary polyhedral presentation; `-1` is `(st)^2`.
fn binary_polyhedral(name: String, l: u32, n: u32) -> Result<FiniteModel, ModelError> {
    let p = binary_polyhedral_presentation(l, n);
    let (g, images) = todd_coxeter_with_images(&p, DEFAULT_MAX_COSETS)?;
    let z = g.eval_word(&p.parse_word("(st)^2").expect("word"), &images);
    FiniteModel::new(name, g, z)
}

/// Cyclic group of even order `2k` with `-1 = k`.
pub fn cyclic_model(k: usize) -> Result<FiniteModel, ModelError> {
    if k == 0 {
        return Err(ModelError::Parameter("cyclic model needs k >= 1".into()));
    }
    FiniteModel::new(format!("Z/{}", 2 * k), FiniteGroup::cyclic(2 * k), k)
}

/// Binary dihedral (dicyclic) group of order `4n`; `n = 2` is the quaternion group.
pub fn binary_dihedral(n: u32) -> Result<FiniteModel, ModelError> {
    if n == 0 {
        return Err(ModelError::Parameter("binary dihedral needs n >= 1".into()));
    }
    binary_polyhedral(format!("BD{}", 4 * n), 2, n)
}

/// 2T as SL(2, 3).
pub fn binary_tetrahedral() -> FiniteModel {
    let (g, z) = sl2(3).expect("3 is prime");
    FiniteModel::new("SL(2,3)", g, z).expect("-I is central")
}

/// 2O via coset enumeration of `< s t | (st)^2 = s^3 = t^4 >`.
pub fn binary_octahedral() -> Result<FiniteModel, ModelError> {
    binary_polyhedral("2O".into(), 3, 4)
}

/// 2I as SL(2, 5).
pub fn binary_icosahedral() -> FiniteModel {
    let (g, z) = sl2(5).expect("5 is prime");
    FiniteModel::new("SL(2,5)", g, z).expect("-I is central")
}

/// Finite subgroups of SU(2) containing `-1` with order dividing `order_divides`
/// (or at most `max_order`), listed by increasing order then name.
pub fn su2_finite_models(filter: impl Fn(usize) -> bool) -> Result<Vec<FiniteModel>, ModelError> {
    let mut out = Vec::new();
    for k in 1..=60 {
        if filter(2 * k) {
            out.push(cyclic_model(k)?);
        }
    }
    for n in 2..=30u32 {
        if filter(4 * n as usize) {
            out.push(binary_dihedral(n)?);
        }
    }
    if filter(24) {
        out.push(binary_tetrahedral());
    }
    if filter(48) {
        out.push(binary_octahedral()?);
    }
    if filter(120) {
        out.push(binary_icosahedral());
    }
    out.sort_by(|a, b| a.group.order().cmp(&b.group.order()).then_with(|| a.name.cmp(&b.name)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::abelian::abelianization;
    use crate::groups::todd_coxeter::todd_coxeter;

    #[test]
    fn sl2_orders_and_centers() {
        let (g, z) = sl2(3).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.center(), {
            let mut c = alloc::vec![g.identity(), z];
            c.sort();
            c
        });
        let (g, _) = sl2(5).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.center().len(), 2);
        assert!(sl2(4).is_err());
    }

    #[test]
    fn binary_polyhedral_models() {
        let q8 = binary_dihedral(2).unwrap();
        assert_eq!(q8.group.order(), 8);
        assert_eq!(q8.group.central_involutions(), alloc::vec![q8.z]);
        assert_eq!(binary_dihedral(3).unwrap().group.order(), 12);
        let o = binary_octahedral().unwrap();
        assert_eq!(o.group.order(), 48);
        assert_eq!(o.group.center().len(), 2);
    }

    #[test]
    fn presentation_and_matrices_agree_for_2i() {
        let p = binary_polyhedral_presentation(3, 5);
        let tc = todd_coxeter(&p, DEFAULT_MAX_COSETS).unwrap();
        let m = binary_icosahedral();
        assert_eq!(tc.order(), m.group.order());
        assert_eq!(tc.center().len(), m.group.center().len());
        let (mp, _) = m.group.cayley_presentation();
        assert!(abelianization(&p, &super::super::word::Word::identity()).is_trivial());
        assert!(abelianization(&mp, &super::super::word::Word::identity()).is_trivial());
    }

    #[test]
    fn model_list_respects_filter() {
        let list = su2_finite_models(|n| 240 % n == 0).unwrap();
        assert!(list.iter().all(|m| 240 % m.group.order() == 0));
        assert!(list.iter().any(|m| m.name == "SL(2,5)"));
        assert!(list.windows(2).all(|w| w[0].group.order() <= w[1].group.order()));
        assert!(FiniteModel::new("bad", FiniteGroup::cyclic(4), 1).is_err());
    }
}
