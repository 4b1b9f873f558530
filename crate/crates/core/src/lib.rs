//! Tableau calculus for Prym-Brill-Noether loci on folded chains of loops.
//!
//! Cells of the Prym-Brill-Noether locus are indexed by Prym tableaux on the
//! square `[r+1] x [r+1]`. Reflective tableaux are determined by their
//! restriction to the staircase `T_r`, and maximal cells correspond to
//! non-repeating tableaux supported on a strip. This crate implements those
//! objects, the counts and dimensions they predict, the one-dimensional
//! intersection graph and the chip-divisor dictionary.

pub mod acceptance;
pub mod complex;
pub mod counting;
pub mod dimension;
pub mod divisors;
mod error;
pub mod examples;
pub mod json;
pub mod reflection;
pub mod strips;
pub mod tableau;

pub use error::{Error, Result};
pub use tableau::{LatticeBox, PrymParams, Shape, ShapeKind, Tableau, Torsion};
