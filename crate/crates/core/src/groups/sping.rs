//! Spin^G decisions: homomorphisms `pi -> G` sending `z` to the central `-1` of `G`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::abelian::{abelianization, cyclic_character, smallest_circle_modulus};
use super::framed::{FramedGroup, FramedSource};
use super::homs::{enumerate_homs_with_orders, HomOptions};
use super::models::{su2_finite_models, FiniteModel, ModelError};
use super::word::{Presentation, Word};

/// Largest SU(2) model searched for sources that are only presented.
pub const DEFAULT_SU2_ORDER_BOUND: usize = 120;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaugeTarget {
    /// U(1), decided by characters of the abelianization.
    CircleClass,
    /// Z/2m with `-1 = m`.
    CyclicZ2m(u64),
    FiniteModel(FiniteModel),
    /// Every finite subgroup of SU(2) containing `-1`.
    Su2FiniteModels,
    /// Direct product; `z` goes to `-1` in the factors that carry it and to 1 elsewhere.
    Product(Vec<ProductFactor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub target: GaugeTarget,
    pub carries_z: bool,
}

impl GaugeTarget {
    pub fn name(&self) -> String {
        match self {
            GaugeTarget::CircleClass => "U(1)".into(),
            GaugeTarget::CyclicZ2m(m) => format!("Z/{}", 2 * m),
            GaugeTarget::FiniteModel(m) => m.name.clone(),
            GaugeTarget::Su2FiniteModels => "SU(2) finite models".into(),
            GaugeTarget::Product(fs) => fs.iter().map(|f| f.target.name()).collect::<Vec<_>>().join(" x "),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpinGError {
    #[error("malformed target: {0}")]
    MalformedTarget(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    IStarNotInjective,
    /// `z` dies in the abelianization, so no circle character sees it.
    ZTrivialInAbelianization,
    /// No character to Z/2m sends `z` to `m`.
    NoCyclicCharacter,
    /// No homomorphism into the finite model(s) sends `z` to `-1`.
    NoHomomorphism,
}

impl Obstruction {
    pub fn reason(&self) -> &'static str {
        match self {
            Obstruction::IStarNotInjective => "i_star_not_injective",
            Obstruction::ZTrivialInAbelianization => "z_trivial_in_abelianization",
            Obstruction::NoCyclicCharacter => "no_cyclic_character",
            Obstruction::NoHomomorphism => "no_homomorphism",
        }
    }
}

/// Generator images of a found homomorphism, as target labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub target: String,
    pub images: Vec<String>,
    pub z_image: String,
    /// Order of the image subgroup, when known.
    pub image_order: Option<usize>,
    /// Per-factor witnesses of a product.
    pub parts: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinGDecision {
    pub exists: bool,
    pub obstruction: Option<Obstruction>,
    pub witness: Option<Witness>,
    /// False when a negative answer rests on a bounded search.
    pub complete: bool,
    /// Names of the source generators the witness images refer to.
    pub source_generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    /// Stop at the first homomorphism in canonical order.
    First,
    /// Among up to `max_homs` per model, keep the one with the largest image.
    LargestImage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinGOptions {
    pub up_to_conjugacy: bool,
    pub witness: WitnessMode,
    pub max_homs: usize,
    pub su2_order_bound: usize,
}

impl Default for SpinGOptions {
    fn default() -> Self {
        SpinGOptions { up_to_conjugacy: true, witness: WitnessMode::First, max_homs: 10_000, su2_order_bound: DEFAULT_SU2_ORDER_BOUND }
    }
}

struct SourceView {
    presentation: Presentation,
    z: Word,
    generator_orders: Option<Vec<usize>>,
    order: Option<usize>,
}

struct Outcome {
    exists: bool,
    obstruction: Option<Obstruction>,
    witness: Option<Witness>,
    complete: bool,
}

impl Outcome {
    fn no(o: Obstruction, complete: bool) -> Self {
        Outcome { exists: false, obstruction: Some(o), witness: None, complete }
    }

    fn yes(w: Witness) -> Self {
        Outcome { exists: true, obstruction: None, witness: Some(w), complete: true }
    }
}

fn character_witness(target: String, images: Vec<BigInt>, z: &Word, modulus: &BigInt) -> Witness {
    let z_image = super::abelian::eval_character(z, &images, modulus);
    let g = images.iter().fold(modulus.clone(), |acc, x| acc.gcd(x));
    let image_order = (modulus / g).to_usize();
    Witness {
        target,
        images: images.iter().map(ToString::to_string).collect(),
        z_image: z_image.to_string(),
        image_order,
        parts: Vec::new(),
    }
}

fn decide_cyclic(src: &SourceView, m: &BigInt, carries: bool, target: String) -> Outcome {
    let n = m * 2;
    if !carries {
        let zeros = alloc::vec![BigInt::zero(); src.presentation.ngens()];
        return Outcome::yes(character_witness(target, zeros, &src.z, &n));
    }
    let inv = abelianization(&src.presentation, &src.z);
    if inv.z_is_trivial() {
        return Outcome::no(Obstruction::ZTrivialInAbelianization, true);
    }
    match cyclic_character(&inv, m) {
        Some(images) => Outcome::yes(character_witness(target, images, &src.z, &n)),
        None => Outcome::no(Obstruction::NoCyclicCharacter, true),
    }
}

fn decide_circle(src: &SourceView, carries: bool) -> Outcome {
    if !carries {
        return decide_cyclic(src, &BigInt::from(1), false, "U(1)".into());
    }
    let inv = abelianization(&src.presentation, &src.z);
    match smallest_circle_modulus(&inv) {
        Some(m) => {
            let name = format!("U(1) via Z/{}", &m * 2);
            decide_cyclic(src, &m, true, name)
        }
        None => Outcome::no(Obstruction::ZTrivialInAbelianization, true),
    }
}

/// Best hom into one model, or None; the flag reports truncation.
fn search_model(src: &SourceView, model: &FiniteModel, carries: bool, opts: &SpinGOptions) -> (Option<Witness>, bool) {
    let g = &model.group;
    let req = if carries { model.z } else { g.identity() };
    let limit = match opts.witness {
        WitnessMode::First => 1,
        WitnessMode::LargestImage => opts.max_homs.max(1),
    };
    let hopts = HomOptions { up_to_conjugacy: opts.up_to_conjugacy, limit: Some(limit) };
    let r = enumerate_homs_with_orders(&src.presentation, src.generator_orders.as_deref(), g, &[(src.z.clone(), req)], &hopts);
    let best = r.homs.iter().map(|h| (h.image_order(g), h)).fold(None::<(usize, &super::homs::Homomorphism)>, |acc, (o, h)| match acc {
        Some((bo, _)) if bo >= o => acc,
        _ => Some((o, h)),
    });
    let w = best.map(|(o, h)| Witness {
        target: model.name.clone(),
        images: h.images.iter().map(|&x| g.label(x).to_string()).collect(),
        z_image: g.label(h.apply(g, &src.z)).to_string(),
        image_order: Some(o),
        parts: Vec::new(),
    });
    (w, r.truncated && r.homs.len() == limit && opts.witness == WitnessMode::LargestImage)
}

fn decide_models(src: &SourceView, models: &[FiniteModel], carries: bool, complete_if_none: bool, opts: &SpinGOptions) -> Outcome {
    let mut best: Option<Witness> = None;
    for m in models {
        let (w, _) = search_model(src, m, carries, opts);
        if let Some(w) = w {
            if opts.witness == WitnessMode::First {
                return Outcome::yes(w);
            }
            if best.as_ref().is_none_or(|b| w.image_order > b.image_order) {
                best = Some(w);
            }
        }
    }
    match best {
        Some(w) => Outcome::yes(w),
        None => Outcome::no(Obstruction::NoHomomorphism, complete_if_none),
    }
}

fn decide(src: &SourceView, target: &GaugeTarget, carries: bool, opts: &SpinGOptions) -> Result<Outcome, SpinGError> {
    Ok(match target {
        GaugeTarget::CircleClass => decide_circle(src, carries),
        GaugeTarget::CyclicZ2m(m) => {
            if *m == 0 {
                return Err(SpinGError::MalformedTarget("Z/2m needs m >= 1".into()));
            }
            decide_cyclic(src, &BigInt::from(*m), carries, target.name())
        }
        GaugeTarget::FiniteModel(model) => decide_models(src, core::slice::from_ref(model), carries, true, opts),
        GaugeTarget::Su2FiniteModels => {
            let (models, complete) = match src.order {
                // the image of a finite source is a finite SU(2) subgroup of order dividing |source|
                Some(n) if carries => (su2_finite_models(|k| n % k == 0)?, true),
                Some(n) => (su2_finite_models(|k| k <= n.max(2) * 2)?, true),
                None => (su2_finite_models(|k| k <= opts.su2_order_bound)?, false),
            };
            let mut out = decide_models(src, &models, carries, complete, opts);
            if out.exists {
                out.complete = true;
            }
            out
        }
        GaugeTarget::Product(factors) => {
            if carries && !factors.iter().any(|f| f.carries_z) {
                return Err(SpinGError::MalformedTarget("no product factor carries z".into()));
            }
            let mut parts = Vec::new();
            for f in factors {
                let o = decide(src, &f.target, carries && f.carries_z, opts)?;
                if !o.exists {
                    return Ok(o);
                }
                parts.push(o.witness.expect("existing outcome has a witness"));
            }
            let n = src.presentation.ngens();
            let tuple = |xs: Vec<&str>| format!("({})", xs.join(", "));
            Outcome::yes(Witness {
                target: target.name(),
                images: (0..n).map(|k| tuple(parts.iter().map(|p| p.images[k].as_str()).collect())).collect(),
                z_image: tuple(parts.iter().map(|p| p.z_image.as_str()).collect()),
                image_order: None,
                parts,
            })
        }
    })
}

/// Decides whether some homomorphism sends `z` to the target's `-1`.
pub fn exists_sping(f: &FramedGroup, target: &GaugeTarget, opts: &SpinGOptions) -> Result<SpinGDecision, SpinGError> {
    let source_generators = f.generator_names();
    if !f.i_star_injective() {
        return Ok(SpinGDecision {
            exists: false,
            obstruction: Some(Obstruction::IStarNotInjective),
            witness: None,
            complete: true,
            source_generators,
        });
    }
    let (presentation, z) = f.presentation();
    let generator_orders = match f.source() {
        FramedSource::Finite { group, .. } => Some(group.generating_set().iter().map(|&g| group.element_order(g)).collect()),
        FramedSource::Presented { .. } => None,
    };
    let src = SourceView { presentation, z, generator_orders, order: f.order() };
    let o = decide(&src, target, true, opts)?;
    Ok(SpinGDecision { exists: o.exists, obstruction: o.obstruction, witness: o.witness, complete: o.complete, source_generators })
}
