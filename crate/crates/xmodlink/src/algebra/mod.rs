//! Finite groups as Cayley tables, homomorphisms, subgroups, enhanced words
//! and the integral group algebra.

mod ga;
mod group;
mod hom;
mod matrix;
mod named;
mod perm;
mod word;

use thiserror::Error;

pub use ga::GroupAlgebraElement;
pub use group::{same_group, subgroup_closure, Elem, FiniteGroup, GroupRef};
pub use hom::{centralizer, commutator_subgroup, find_isomorphism, quotient, subgroup, GroupHom};
pub use matrix::{
    general_linear, group_from_matrix_generators, group_from_matrix_generators_capped, mat_det, mat_mul, mat_name,
    parse_mat, projective_normal_form, Mat2, DEFAULT_CLOSURE_CAP,
};
pub use named::{cyclic_group, dihedral_group, direct_product, gl_to_pgl, pgl_elem, quaternion_group};
pub use perm::{cycle_notation, parse_cycles, perm_elem, symmetric_group, symmetric_group_bounded, DEFAULT_SYMMETRIC_BOUND};
pub use word::{evaluate_word, EnhancedWord, Sign};
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("table dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("table entry ({row},{col}) = {value} is not an element index below {order}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("element index {index} is out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element `{element}` has no two-sided inverse")]
    NoInverse { element: String },
    #[error("multiplication is not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NonAssociative { a: String, b: String, c: String },
    #[error("unknown element `{name}` in group {group}")]
    UnknownElement { name: String, group: String },
    #[error("requested size {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("generator {0} is singular")]
    SingularGenerator(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("cannot parse matrix literal `{0}`")]
    BadMatrix(String),
    #[error("cannot parse permutation `{0}`")]
    BadPermutation(String),
    #[error("map is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: String, b: String },
    #[error("subset is not closed: {a}·{b} falls outside")]
    NotClosed { a: String, b: String },
    #[error("subgroup is not normal (witness {0})")]
    NotNormal(String),
    #[error("group algebra elements over different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },
}
