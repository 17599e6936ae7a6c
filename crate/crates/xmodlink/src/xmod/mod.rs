//! Crossed modules, racks and quandles, rack 2-cocycles and central extensions.

mod cocycle;
mod crossed;
mod extension;
mod rack;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use cocycle::{all_cocycles, RackCocycle};
pub use crossed::{xmod_identity_conj, xmod_product, CrossedModule};
pub use extension::{xmod_from_central_extension, CentralExtension};
pub use rack::{conjugation_quandle, cyclic_rack, dihedral_quandle, eisermann_quandle, Rack};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XmodError {
    #[error("boundary map does not go from the fiber to the base")]
    BoundaryShape,
    #[error("action table has {found} entries, expected {expected}")]
    ActionShape { expected: usize, found: usize },
    #[error("not a left action: ({g}·{h}) ▷ {e} ≠ {g} ▷ ({h} ▷ {e})")]
    NotAnAction { g: String, h: String, e: String },
    #[error("{g} ▷ (−) is not an automorphism (witness {e}, {f})")]
    NotAutomorphisms { g: String, e: String, f: String },
    #[error("first Peiffer equation fails: ∂({g} ▷ {e}) ≠ {g} ∂({e}) {g}⁻¹")]
    Peiffer1Violation { g: String, e: String },
    #[error("second Peiffer equation fails: ∂({e}) ▷ {f} ≠ {e} {f} {e}⁻¹")]
    Peiffer2Violation { e: String, f: String },
    #[error("coefficient group {0} is not abelian")]
    NonAbelianV(String),
    #[error("rack table must be a nonempty square of size {0}")]
    RackShape(usize),
    #[error("rack table entry {value} is out of range for size {size}")]
    RackEntryOutOfRange { value: usize, size: usize },
    #[error("x ↦ x ◁ {y} is not a bijection")]
    NotBijective { y: String },
    #[error("self-distributivity fails at ({x}, {y}, {z})")]
    SelfDistributivityViolation { x: String, y: String, z: String },
    #[error("set is not closed under the operation ({0} falls outside)")]
    NotClosed(String),
    #[error("cocycle condition fails at ({x}, {y}, {z})")]
    CocycleViolation { x: String, y: String, z: String },
    #[error("boundary map is not surjective")]
    NotSurjective,
    #[error("kernel is not central: {kernel} does not commute with {other}")]
    KernelNotCentral { kernel: String, other: String },
    #[error("invalid section: {0}")]
    BadSection(String),
    #[error("brute-force search exceeds {limit} candidates")]
    SearchTooLarge { limit: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
