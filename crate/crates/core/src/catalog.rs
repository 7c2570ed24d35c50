//! Framed-group fingerprints of example manifolds and models of example gauge groups.
//!
//! Space forms `S^3 / Gamma` use `Gamma` acting through the left SU(2)
//! factor of `Spin(4) = SU(2) x SU(2)`. The preimage of `Gamma` under
//! `Spin(4) -> SO(4)` is `{(e g, e) : g in Gamma, e = +-1}`, and
//! `(e g, e) -> (g, e)` is an isomorphism onto `Gamma x Z/2` taking the
//! fiber class `(-1, -1)` to `z = (1, -1)`. De Sitter quotients share
//! these fingerprints.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::groups::finite::{central_quotient, direct_product, FiniteGroup, GroupError};
use crate::groups::framed::{FramedError, FramedGroup};
use crate::groups::models::{self, FiniteModel, ModelError};
use crate::groups::sping::{GaugeTarget, ProductFactor};
use crate::groups::todd_coxeter::{todd_coxeter, TcError};
use crate::groups::word::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Tc(#[from] TcError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Framed(#[from] FramedError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite subgroup of SU(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSpec {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GammaSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            GammaSpec::Cyclic(_) => "cyclic",
            GammaSpec::BinaryDihedral(_) => "binary_dihedral",
            GammaSpec::BinaryTetrahedral => "binary_tetrahedral",
            GammaSpec::BinaryOctahedral => "binary_octahedral",
            GammaSpec::BinaryIcosahedral => "binary_icosahedral",
        }
    }

    pub fn name(&self) -> String {
        match self {
            GammaSpec::Cyclic(p) => format!("Z/{p}"),
            GammaSpec::BinaryDihedral(n) => format!("BD{}", 4 * n),
            GammaSpec::BinaryTetrahedral => "SL(2,3)".into(),
            GammaSpec::BinaryOctahedral => "2O".into(),
            GammaSpec::BinaryIcosahedral => "SL(2,5)".into(),
        }
    }

    /// The group and its central `-1`, if its order is even.
    pub fn materialize(&self, max_cosets: usize) -> Result<(FiniteGroup, Option<usize>), CatalogError> {
        Ok(match *self {
            GammaSpec::Cyclic(p) => {
                if p == 0 {
                    return Err(CatalogError::Parameter("cyclic order must be positive".into()));
                }
                let pres = Presentation::parse("g", &[&format!("g^{p}")]).expect("valid");
                let g = todd_coxeter(&pres, max_cosets)?;
                let minus = if p % 2 == 0 { Some(g.pow(g.generating_set().first().copied().unwrap_or(0), i64::from(p / 2))) } else { None };
                (g, minus)
            }
            GammaSpec::BinaryDihedral(n) => {
                if n == 0 {
                    return Err(CatalogError::Parameter("binary dihedral parameter must be positive".into()));
                }
                let pres = models::binary_polyhedral_presentation(2, n);
                let (g, images) = crate::groups::todd_coxeter::todd_coxeter_with_images(&pres, max_cosets)?;
                let z = g.eval_word(&pres.parse_word("(st)^2").expect("word"), &images);
                (g, Some(z))
            }
            GammaSpec::BinaryTetrahedral => {
                let m = models::binary_tetrahedral();
                (m.group, Some(m.z))
            }
            GammaSpec::BinaryOctahedral => {
                let pres = models::binary_polyhedral_presentation(3, 4);
                let (g, images) = crate::groups::todd_coxeter::todd_coxeter_with_images(&pres, max_cosets)?;
                let z = g.eval_word(&pres.parse_word("(st)^2").expect("word"), &images);
                (g, Some(z))
            }
            GammaSpec::BinaryIcosahedral => {
                let m = models::binary_icosahedral();
                (m.group, Some(m.z))
            }
        })
    }

    /// The group as an SU(2) model with its `-1`.
    pub fn model(&self, max_cosets: usize) -> Result<FiniteModel, CatalogError> {
        let (g, z) = self.materialize(max_cosets)?;
        let z = z.ok_or_else(|| CatalogError::Parameter(format!("{} has no central -1", self.name())))?;
        Ok(FiniteModel::new(self.name(), g, z)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldSpec {
    Torus(u32),
    Sphere(u32),
    CP2,
    LensSpace(u32),
    SphericalSpaceForm(GammaSpec),
    DeSitterQuotient(GammaSpec),
    Explicit(FramedGroup),
}

impl ManifoldSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            ManifoldSpec::Torus(_) => "torus",
            ManifoldSpec::Sphere(_) => "sphere",
            ManifoldSpec::CP2 => "cp2",
            ManifoldSpec::LensSpace(_) => "lens_space",
            ManifoldSpec::SphericalSpaceForm(_) => "spherical_space_form",
            ManifoldSpec::DeSitterQuotient(_) => "de_sitter_quotient",
            ManifoldSpec::Explicit(_) => "explicit",
        }
    }

    pub fn label(&self) -> String {
        match self {
            ManifoldSpec::Torus(n) => format!("T^{n}"),
            ManifoldSpec::Sphere(n) => format!("S^{n}"),
            ManifoldSpec::CP2 => "CP^2".into(),
            ManifoldSpec::LensSpace(p) => format!("L({p})"),
            ManifoldSpec::SphericalSpaceForm(g) => format!("S^3/{}", g.name()),
            ManifoldSpec::DeSitterQuotient(g) => format!("dS/{}", g.name()),
            ManifoldSpec::Explicit(f) => f.label().into(),
        }
    }
}

fn torus_presentation(n: u32) -> (Presentation, Word) {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("z".into());
    let k = n as usize;
    let mut rels = Vec::new();
    for i in 0..=k {
        for j in i + 1..=k {
            rels.push(Word::commutator(&Word::gen(i), &Word::gen(j)));
        }
    }
    rels.push(Word::gen(k).pow(2));
    (Presentation::new(names, rels).expect("valid"), Word::gen(k))
}

fn space_form(gamma: &GammaSpec, label: String, max_cosets: usize) -> Result<FramedGroup, CatalogError> {
    let (g, _) = gamma.materialize(max_cosets)?;
    let z2 = FiniteGroup::cyclic(2);
    let product = direct_product(&g, &z2);
    let z = g.identity() * 2 + 1;
    Ok(FramedGroup::finite(product, z, true, label)?)
}

pub fn build_framed(spec: &ManifoldSpec, max_cosets: usize) -> Result<FramedGroup, CatalogError> {
    let label = spec.label();
    match spec {
        ManifoldSpec::Torus(n) | ManifoldSpec::Sphere(n) if *n < 3 => {
            Err(CatalogError::Parameter(format!("dimension {n} < 3 is not supported")))
        }
        ManifoldSpec::Torus(n) => {
            let (p, z) = torus_presentation(*n);
            Ok(FramedGroup::presented(p, z, true, label)?)
        }
        ManifoldSpec::Sphere(_) => Ok(FramedGroup::finite(FiniteGroup::cyclic(2), 1, true, label)?),
        ManifoldSpec::CP2 => Ok(FramedGroup::finite(FiniteGroup::trivial(), 0, false, label)?),
        ManifoldSpec::LensSpace(p) => {
            if *p == 0 {
                return Err(CatalogError::Parameter("lens space order must be positive".into()));
            }
            space_form(&GammaSpec::Cyclic(*p), label, max_cosets)
        }
        ManifoldSpec::SphericalSpaceForm(g) | ManifoldSpec::DeSitterQuotient(g) => space_form(g, label, max_cosets),
        ManifoldSpec::Explicit(f) => Ok(f.clone()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaugeSpec {
    CircleClass,
    CyclicZ2m(u64),
    Su2FiniteModels,
    FiniteModel(FiniteModel),
    /// Factors with whether each carries `z`.
    Product(Vec<(GaugeSpec, bool)>),
    StandardModel,
    PatiSalam {
        a: GammaSpec,
        b: GammaSpec,
        c_order: u32,
    },
}

impl GaugeSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            GaugeSpec::CircleClass => "u1",
            GaugeSpec::CyclicZ2m(_) => "cyclic_z2m",
            GaugeSpec::Su2FiniteModels => "su2_finite_models",
            GaugeSpec::FiniteModel(_) => "finite_model",
            GaugeSpec::Product(_) => "product",
            GaugeSpec::StandardModel => "sm_model",
            GaugeSpec::PatiSalam { .. } => "pati_salam",
        }
    }

    pub fn pati_salam_default() -> Self {
        GaugeSpec::PatiSalam { a: GammaSpec::BinaryDihedral(2), b: GammaSpec::BinaryDihedral(2), c_order: 4 }
    }

    /// One of each tag, with default parameters.
    pub fn examples() -> Vec<GaugeSpec> {
        vec![
            GaugeSpec::CircleClass,
            GaugeSpec::CyclicZ2m(3),
            GaugeSpec::Su2FiniteModels,
            GaugeSpec::FiniteModel(models::binary_icosahedral()),
            GaugeSpec::Product(vec![(GaugeSpec::Su2FiniteModels, false), (GaugeSpec::CyclicZ2m(1), true)]),
            GaugeSpec::StandardModel,
            GaugeSpec::pati_salam_default(),
        ]
    }
}

/// `(A x B x C) / <(-1, -1, -1)>` with `z` the class of `(-1, -1, 1)`.
fn pati_salam(a: &GammaSpec, b: &GammaSpec, c_order: u32, max_cosets: usize) -> Result<FiniteModel, CatalogError> {
    if c_order == 0 || c_order % 2 == 1 {
        return Err(CatalogError::Parameter(format!("SU(4) stand-in Z/{c_order} needs even order")));
    }
    let ma = a.model(max_cosets)?;
    let mb = b.model(max_cosets)?;
    let mc = FiniteModel::new(format!("Z/{c_order}"), FiniteGroup::cyclic(c_order as usize), (c_order / 2) as usize)?;
    let ab = direct_product(&ma.group, &mb.group);
    let abc = direct_product(&ab, &mc.group);
    let nb = mb.group.order();
    let nc = mc.group.order();
    let triple = |x: usize, y: usize, w: usize| (x * nb + y) * nc + w;
    let n = triple(ma.z, mb.z, mc.z);
    let (q, proj) = central_quotient(&abc, &[abc.identity(), n])?;
    let z = proj[triple(ma.z, mb.z, mc.group.identity())];
    let name = format!("({} x {} x {})/Z2", ma.name, mb.name, mc.name);
    Ok(FiniteModel::new(name, q, z)?)
}

pub fn build_target(spec: &GaugeSpec, max_cosets: usize) -> Result<GaugeTarget, CatalogError> {
    Ok(match spec {
        GaugeSpec::CircleClass => GaugeTarget::CircleClass,
        GaugeSpec::CyclicZ2m(m) => {
            if *m == 0 {
                return Err(CatalogError::Parameter("cyclic_z2m needs m >= 1".into()));
            }
            GaugeTarget::CyclicZ2m(*m)
        }
        GaugeSpec::Su2FiniteModels => GaugeTarget::Su2FiniteModels,
        GaugeSpec::FiniteModel(m) => GaugeTarget::FiniteModel(m.clone()),
        GaugeSpec::Product(fs) => {
            if !fs.iter().any(|(_, c)| *c) {
                return Err(CatalogError::Parameter("no product factor carries z".into()));
            }
            let factors = fs
                .iter()
                .map(|(s, c)| Ok(ProductFactor { target: build_target(s, max_cosets)?, carries_z: *c }))
                .collect::<Result<Vec<_>, CatalogError>>()?;
            GaugeTarget::Product(factors)
        }
        // z lands in U(1)_B x U(1)_L as (-1, -1); SU(2)_L only contributes to witnesses
        GaugeSpec::StandardModel => GaugeTarget::Product(vec![
            ProductFactor { target: GaugeTarget::FiniteModel(models::binary_icosahedral()), carries_z: false },
            ProductFactor { target: GaugeTarget::CircleClass, carries_z: true },
            ProductFactor { target: GaugeTarget::CircleClass, carries_z: true },
        ]),
        GaugeSpec::PatiSalam { a, b, c_order } => GaugeTarget::FiniteModel(pati_salam(a, b, *c_order, max_cosets)?),
    })
}

/// Tag and one-line note for every manifold kind.
pub fn manifold_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("torus", "T^n, n >= 3: Z^n x Z/2 presented, z the fiber class; 2^n spin structures"),
        ("sphere", "S^n, n >= 3: Z/2 generated by z; one spin structure"),
        ("cp2", "CP^2: simply connected frame bundle, i* not injective; no Spin^G structure"),
        ("lens_space", "L(p) = S^3/(Z/p): Z/p x Z/2 with z = (1, -1)"),
        ("spherical_space_form", "S^3/Gamma for Gamma in SU(2)_l: Gamma x Z/2 with z = (1, -1)"),
        ("de_sitter_quotient", "Gamma\\H in de Sitter space: same fingerprint as S^3/Gamma"),
        ("explicit", "user-supplied presentation or table with z and the i* flag"),
    ]
}

/// Tag and one-line note for every finite subgroup of SU(2).
pub fn gamma_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("cyclic", "Z/p; has a central -1 only for even p"),
        ("binary_dihedral", "BD_4n of order 4n, presented (st)^2 = s^2 = t^n"),
        ("binary_tetrahedral", "2T = SL(2,3), order 24, as matrices over F_3"),
        ("binary_octahedral", "2O, order 48, presented (st)^2 = s^3 = t^4"),
        ("binary_icosahedral", "2I = SL(2,5), order 120, as matrices over F_5"),
    ]
}

/// Tag and one-line note for every gauge target kind.
pub fn gauge_catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("u1", "U(1): some character sends z to -1 (Spin^c)"),
        ("cyclic_z2m", "Z/2m with z -> m; m odd recovers spin"),
        ("su2_finite_models", "SU(2) through its finite subgroups containing -1"),
        ("finite_model", "any finite group with a designated central involution"),
        ("product", "direct product; z -> -1 in carrier factors, 1 elsewhere"),
        ("sm_model", "standard model: z -> (-1, -1) in U(1)_B x U(1)_L, SU(2)_L for witnesses"),
        ("pati_salam", "(A x B x C)/<(-1,-1,-1)> finite stand-in, z -> (-1, -1, 1)"),
    ]
}
