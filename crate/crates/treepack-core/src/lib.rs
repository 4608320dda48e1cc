//! Tree decompositions with bounded bag independence, geometric intersection
//! graphs, an exact dynamic program for maximum-weight independent packing,
//! and the approximation drivers built on top of them.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`geometry`] describes collections of disks, rectangles, axis-aligned
//!    boxes, and axis-parallel grid paths with exact rational coordinates,
//!    and turns them into intersection graphs.
//! 2. [`constructions`] builds tree decompositions whose bags have *small
//!    independence number* (rather than small width) for those graphs, plus
//!    layerings, graph-power decompositions, and general covers.
//! 3. [`solver`] runs an exact dynamic program over such a decomposition to
//!    compute a maximum-weight independent packing of a family of connected
//!    subgraphs (vertex-disjoint, no joining edge).
//! 4. [`ptas`] combines covers, powers, and slab shifting into approximation
//!    schemes with explicit worst-case guarantees.
//!
//! Everything is deterministic: all geometric predicates and weight
//! arithmetic use arbitrary-precision rationals (never floating point), all
//! tie-breaks are total orders, and the generators in [`generators`] are
//! seeded. The crate is `no_std` (with `alloc`); IO and file formats live in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod ptas;
pub mod rational;
pub mod solver;
pub mod treedec;

pub use error::Error;
pub use rational::Rational;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
