//! Reidemeister pairs `(ψ, φ)`, their axiom checkers and the standard constructions.

mod axioms;
mod constructions;
mod pair;

use thiserror::Error;

use crate::xmod::XmodError;

pub use axioms::{
    check_framed, check_unframed, check_unframed_with, is_eisermann_lifting, r3_holds, r3_prime_holds, AxiomId,
    AxiomReport, FramedStructure, Violation, MAX_WITNESSES,
};
pub use constructions::{eisermann_pair, lifted_eisermann_pair, pair_from_rack, pair_from_rack_cocycle};
pub use pair::ReidemeisterPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("{table} table must be complete over G×G (|G| = {expected})")]
    IncompleteTable { table: &'static str, expected: usize },
    #[error("{table} table entry {index} is not an element of E")]
    EntryOutOfRange { table: &'static str, index: usize },
    #[error("rack has {rack} elements but the group law has order {group}")]
    SizeMismatch { rack: usize, group: usize },
    #[error(transparent)]
    Xmod(#[from] XmodError),
}

#[cfg(test)]
mod tests;
