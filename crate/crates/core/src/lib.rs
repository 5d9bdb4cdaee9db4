//! Exact computations for linear codes in the Niederreiter-Rosenbloom-Tsfasman
//! (NRT) metric: shape enumerators and their MacWilliams transform, invariant
//! theory of the associated matrix groups, self-dual constructions via the
//! ordered flip, and exhaustive classification of small self-dual codes.

pub mod algebra;
pub mod code;
pub mod constructions;
pub mod error;
pub mod invariants;
pub mod shape;

pub use error::{Error, Result};
