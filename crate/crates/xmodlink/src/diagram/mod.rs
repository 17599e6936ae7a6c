//! Sliced oriented tangle diagrams, their text format, and fixture diagrams.

mod arcs;
mod fixtures;
mod generator;
mod sliced;

use thiserror::Error;

pub use arcs::{arc_index, ArcIndex, CrossingArcs};
pub use fixtures::{
    figure_eight_string, move_fixtures, trefoil_minus_string, trefoil_plus_string, unknot_string, MoveFixture, MoveId,
};
pub use generator::{signature_string, Generator, Orientation};
pub use sliced::{closure, compose, tensor, Slice, SlicedDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}, column {column}: unknown token `{token}`")]
    UnknownToken { line: usize, column: usize, token: String },
    #[error("line {line}: expected a `top:` header line")]
    MissingHeader { line: usize },
    #[error("{}slice {slice} expects top signature {found} but the level above is {expected}", line_prefix(*.line))]
    SignatureMismatch { slice: usize, line: Option<usize>, expected: String, found: String },
    #[error("{}slice {slice} has no pieces", line_prefix(*.line))]
    EmptySlice { slice: usize, line: Option<usize> },
    #[error("diagram has no slices")]
    EmptyDiagram,
    #[error("closure needs a single downward strand at top and bottom, found top {top} and bottom {bottom}")]
    ClosureShapeMismatch { top: String, bottom: String },
}

fn line_prefix(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

#[cfg(test)]
mod tests;
