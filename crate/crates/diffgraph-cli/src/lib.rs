//! IO companion for the `diffgraph` core: corpus generation, JSON report
//! rendering and DOT export. The binary in `main.rs` wires these into the
//! command-line interface.

pub mod corpus;
pub mod dot;
pub mod json;
