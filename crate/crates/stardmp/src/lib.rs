//! Exact computation of generalized inverses in rings with involution.
//!
//! The crate provides three concrete *-ring carriers — square matrices over
//! the Gaussian rationals Q(i) with a selectable involution (conjugate
//! transpose or plain transpose), the modular rings Z_n with the identity
//! involution, and k×k matrices over a prime field F_p with the transpose
//! involution — together with constructive and brute-force routes to the
//! full inverse family: Moore-Penrose, {1,3}, group, Drazin, core, pseudo
//! core and dual pseudo core inverses.
//!
//! On top of the carriers sit *-DMP classification ([`analysis`]), a catalog
//! of equational characterizations ([`catalog`]), the pseudo core and
//! core-nilpotent decompositions, the pseudo core pre-order, and a registry
//! ([`suite`]) that replays every statement of the catalog over exhaustive
//! finite universes and seeded random matrix samples.
//!
//! All arithmetic is exact; every witness returned by a constructive route
//! is re-checked against the defining equations before it is handed out.

pub mod analysis;
pub mod catalog;
pub mod finite;
pub mod matrix;
pub mod ring;
pub mod scalar;
pub mod suite;

pub use ring::{
    ExistenceResult, InverseKind, Inverses, InverseWitness, Involution, NotExistsReason,
    PenroseEqs, StarRing, StarRingDescriptor,
};

use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands do not live in the same carrier (or do not fit its shape).
    CarrierMismatch,
    /// Matrix shapes are incompatible for the requested comparison.
    ShapeMismatch,
    /// A carrier descriptor violates its invariants.
    BadDescriptor(String),
    /// An exhaustive operation would enumerate more elements than allowed.
    BudgetExceeded { needed: u64, budget: u64 },
    /// An identifier is not registered in the catalog or suite.
    UnknownId(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CarrierMismatch => write!(f, "operands belong to different carriers"),
            Error::ShapeMismatch => write!(f, "matrix shapes are incompatible"),
            Error::BadDescriptor(msg) => write!(f, "invalid carrier descriptor: {msg}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration of {needed} elements exceeds budget {budget}")
            }
            Error::UnknownId(id) => write!(f, "unknown statement id: {id}"),
        }
    }
}

impl std::error::Error for Error {}

/// Default cap on exhaustive enumeration, overridable per run.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
