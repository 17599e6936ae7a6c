//! Reidemeister colourings, the state sum, and the harnesses around it:
//! move invariance, gluing, rack counts and the knot-group oracle.

mod moves;
mod rack;
mod solver;
mod state_sum;
mod tqft;
mod wirtinger;

use thiserror::Error;

use crate::catgroup::CatGroupError;
use crate::diagram::DiagramError;

pub use moves::{
    check_move_invariance, check_move_invariance_with, summarize_moves, MoveCheckConfig, MoveCounterexample,
    MoveOutcome,
};
pub use rack::{rack_colouring_count, rack_colouring_counts};
pub use state_sum::{
    enumerate_colourings, evaluate_diagram, invariant_matrix, matrix_to_tsv, state_sum, summed_labels, Colouring,
    InvariantResult, StateSum,
};
pub use tqft::tqft_check;
pub use wirtinger::{diagram_to_wirtinger, eisermann_oracle, trefoil_closed_form, WirtingerCrossing, WirtingerData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{side} word has signs {found} but the diagram needs {expected}")]
    WordSignatureMismatch { side: &'static str, expected: String, found: String },
    #[error("element index {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("not a string knot: top and bottom must each be a single downward strand")]
    NotAStringKnot,
    #[error("diagram has more than one component")]
    MultipleComponents,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    CatGroup(#[from] CatGroupError),
}
