//! Dimer configurations (perfect matchings) on small lattice graphs, and the
//! local flip dynamics that switch alternating cycles.
//!
//! The crate provides:
//!
//! - lattice builders for hypercubic boxes, triangular boxes, and explicit
//!   edge-list graphs ([`lattice`]);
//! - dimer configurations, alternating cycles, and the switching move
//!   ([`matching`]);
//! - alternating-cycle search: bounded enumeration, the authorised-vertex
//!   machinery, and dense unit-cube extraction ([`cycles`]);
//! - exhaustive state-space enumeration and flip-graph analytics
//!   ([`statespace`]);
//! - vertex-boundary isoperimetry on the unit hypercube, the conserved
//!   red/blue colouring, and pyramid configurations ([`invariants`]);
//! - constructive canonicalizers emitting replayable flip sequences
//!   ([`canonical`]);
//! - Glauber dynamics with exact small-instance diagnostics ([`dynamics`]);
//! - the verification suites behind the `dimers verify` CLI ([`verify`]).
//!
//! Everything is exact: counts are integers, bounds are rationals, and the
//! test oracles are exhaustive searches at desk scale.

pub mod canonical;
pub mod cycles;
pub mod dynamics;
pub mod invariants;
pub mod lattice;
pub mod matching;
pub mod statespace;
pub mod verify;

pub use lattice::{Lattice, LatticeDescriptor, LatticeKind, Shape, VertexId};
pub use matching::{AlternatingCycle, ConfigKey, DimerConfig};
