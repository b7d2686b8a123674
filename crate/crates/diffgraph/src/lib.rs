//! Power, enhanced power, commuting and difference graphs of finite groups.
//!
//! The crate builds finite groups from a small description language
//! (cyclic, dihedral, dicyclic, symmetric and alternating atoms combined
//! with direct products, or raw Cayley tables), computes their cyclic
//! subgroup lattices, derives the four standard graphs on the element set,
//! and recognizes graph classes (cograph, chordal, split, threshold, star,
//! bipartite, Eulerian, planar, outerplanar) with witness certificates
//! that re-verify against the graph independently of the recognizer.
//!
//! The `theorems` module predicts class membership of the difference graph
//! from group structure (spectrum conditions, Sylow profiles, symmetric and
//! alternating families) and cross-checks predictions against the
//! recognizers.
//!
//! The crate is `no_std` (with `alloc`); all IO, the CLI and file formats
//! live in the companion `diffgraph-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod recognize;
pub mod spec;
pub mod theorems;

pub use graph::SimpleGraph;
pub use group::Group;
pub use lattice::CyclicLattice;
pub use recognize::{Status, Verdict, Witness};
pub use spec::GroupSpec;
pub use theorems::{ClassReport, GraphClass, StructuralProfile};

/// Hard ceiling on element counts; adjacency bitsets above this are not
/// desk scale.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;

/// Default subset cap for the naive forbidden-subgraph oracle.
pub const DEFAULT_ORACLE_CAP: usize = 64;

/// Default seed for sampled validation (Cayley table associativity).
pub const DEFAULT_SEED: u64 = 0x5eed_0001;
