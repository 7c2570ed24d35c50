//! Framed groups `(pi, z)` and the spin / Spin^c decisions.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::abelian::{abelianization, solve_mod2, AbelianInvariants, F2Solutions};
use super::finite::FiniteGroup;
use super::word::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FramedError {
    #[error("z does not have order dividing 2")]
    ZNotInvolution,
    #[error("z is not central")]
    ZNotCentral,
    #[error("z is not an element of the group")]
    BadZ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FramedSource {
    Presented { presentation: Presentation, z: Word },
    Finite { group: FiniteGroup, z: usize },
}

/// The fundamental group of the oriented frame bundle with its fiber class `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedGroup {
    source: FramedSource,
    i_star_injective: bool,
    label: String,
}

impl FramedGroup {
    /// `z^2 = 1` is checked in the abelianization; centrality is taken on trust.
    pub fn presented(presentation: Presentation, z: Word, i_star_injective: bool, label: impl Into<String>) -> Result<Self, FramedError> {
        if z.max_gen().is_some_and(|m| m >= presentation.ngens()) {
            return Err(FramedError::BadZ);
        }
        let inv = abelianization(&presentation, &z.pow(2));
        if !inv.z_is_trivial() {
            return Err(FramedError::ZNotInvolution);
        }
        Ok(FramedGroup { source: FramedSource::Presented { presentation, z }, i_star_injective, label: label.into() })
    }

    /// `z^2 = 1` and centrality are checked on the table.
    pub fn finite(group: FiniteGroup, z: usize, i_star_injective: bool, label: impl Into<String>) -> Result<Self, FramedError> {
        if z >= group.order() {
            return Err(FramedError::BadZ);
        }
        if group.mul(z, z) != group.identity() {
            return Err(FramedError::ZNotInvolution);
        }
        if !group.is_central(z) {
            return Err(FramedError::ZNotCentral);
        }
        Ok(FramedGroup { source: FramedSource::Finite { group, z }, i_star_injective, label: label.into() })
    }

    pub fn source(&self) -> &FramedSource {
        &self.source
    }

    pub fn i_star_injective(&self) -> bool {
        self.i_star_injective
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> Option<usize> {
        match &self.source {
            FramedSource::Finite { group, .. } => Some(group.order()),
            FramedSource::Presented { .. } => None,
        }
    }

    /// Whether `z` is the identity (finite case) or the empty word.
    pub fn z_is_identity(&self) -> bool {
        match &self.source {
            FramedSource::Finite { group, z } => *z == group.identity(),
            FramedSource::Presented { z, .. } => z.free_reduce().is_empty(),
        }
    }

    /// A presentation with `z` as a word; finite groups use the Cayley presentation.
    pub fn presentation(&self) -> (Presentation, Word) {
        match &self.source {
            FramedSource::Presented { presentation, z } => (presentation.clone(), z.clone()),
            FramedSource::Finite { group, z } => {
                let (p, words) = group.cayley_presentation();
                (p, words[*z].clone())
            }
        }
    }

    /// Source generator names: presentation generators, or element labels
    /// of the generating set of a finite group.
    pub fn generator_names(&self) -> Vec<String> {
        match &self.source {
            FramedSource::Presented { presentation, .. } => presentation.generators().to_vec(),
            FramedSource::Finite { group, .. } => group.generating_set().iter().map(|&g| group.label(g).into()).collect(),
        }
    }

    pub fn abelian_invariants(&self) -> AbelianInvariants {
        let (p, z) = self.presentation();
        abelianization(&p, &z)
    }

    pub fn mod2_solutions(&self) -> F2Solutions {
        let (p, z) = self.presentation();
        solve_mod2(&p, &z)
    }
}

/// Some circle character sends `z` to `-1`; false if `i*` is not injective.
pub fn spinc_exists(f: &FramedGroup) -> bool {
    f.i_star_injective() && !f.abelian_invariants().z_is_trivial()
}

/// A homomorphism to Z/2 sends `z` to the generator; false if `i*` is not injective.
pub fn spin_exists(f: &FramedGroup) -> bool {
    f.i_star_injective() && f.mod2_solutions().particular.is_some()
}

/// Number of homomorphisms to Z/2 with `z` nontrivial (0 if none or `i*` fails).
pub fn count_spin_structures(f: &FramedGroup) -> BigUint {
    if !f.i_star_injective() {
        return BigUint::zero();
    }
    f.mod2_solutions().count()
}

/// The spin structures as generator images in Z/2, lexicographically.
pub fn spin_structures(f: &FramedGroup) -> Vec<Vec<u8>> {
    if !f.i_star_injective() {
        return Vec::new();
    }
    f.mod2_solutions().all()
}

/// Smallest `m` such that some character to Z/2m sends `z` to `m`.
pub fn circle_modulus(f: &FramedGroup) -> Option<BigInt> {
    if !f.i_star_injective() {
        return None;
    }
    super::abelian::smallest_circle_modulus(&f.abelian_invariants())
}
