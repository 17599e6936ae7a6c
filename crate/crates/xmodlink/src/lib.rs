//! State-sum invariants of oriented tangles built from finite crossed modules
//! equipped with Reidemeister pairs.

pub mod algebra;
pub mod builtins;
pub mod catgroup;
pub mod cli;
pub mod diagram;
pub mod invariant;
pub mod io;
pub mod xmod;
pub mod pairs;
pub mod par;
pub mod tables;
