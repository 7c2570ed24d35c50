//! Finitely presented and finite groups, and the spin / Spin^c / Spin^G decisions.

pub mod abelian;
pub mod finite;
pub mod framed;
pub mod homs;
pub mod models;
pub mod snf;
pub mod sping;
pub mod todd_coxeter;
pub mod word;

pub use abelian::{abelianization, AbelianInvariants};
pub use finite::{central_quotient, direct_product, FiniteGroup, GroupError};
pub use framed::{count_spin_structures, spin_exists, spin_structures, spinc_exists, FramedError, FramedGroup, FramedSource};
pub use homs::{enumerate_homs, enumerate_homs_finite, HomOptions, HomSearch, Homomorphism};
pub use models::{FiniteModel, ModelError};
pub use snf::{smith_normal_form, IntMatrix, Snf};
pub use sping::{exists_sping, GaugeTarget, Obstruction, ProductFactor, SpinGDecision, SpinGError, SpinGOptions, Witness, WitnessMode};
pub use todd_coxeter::{todd_coxeter, TcError, DEFAULT_MAX_COSETS};
pub use word::{Letter, Presentation, PresentationError, Word};
