//! Exact kernels for deciding infinitesimally natural spin and Spin^G
//! structures and for checking the algebraic identities behind them.
//!
//! The crate is `no_std` and only needs `alloc`. It covers four areas:
//!
//! * [`vecalg`]: the graded Lie algebra of formal vector fields, its ideals,
//!   and the divergence cocycle.
//! * [`jetalg`]: the Lie algebroid of k-jets of vector fields on R^n.
//! * [`groups`]: finitely presented and finite groups, Smith normal form,
//!   Todd-Coxeter enumeration, homomorphism search and the spin / Spin^c /
//!   Spin^G decision procedures.
//! * [`catalog`]: framed-group fingerprints of example manifolds and the
//!   gauge-group models they are tested against.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod field;
pub mod groups;
pub mod jetalg;
pub mod linalg;
pub mod poly;
pub mod syntax;
pub mod vecalg;

pub use field::PolyVectorField;
pub use poly::{Poly, Rational};
