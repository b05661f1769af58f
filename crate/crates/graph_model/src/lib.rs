//! Λ_r-structured graphs: dual graphs of marked PLCW decompositions,
//! elementary isomorphisms, isomorphism testing and edge contraction.

mod error;
pub mod contract;
pub mod equivalence;
pub mod graph;
pub mod iso;
pub mod structure;

pub use error::GraphError;
pub use contract::contract_edge;
pub use equivalence::{check_model_equivalence, EquivalenceReport};
pub use graph::{dual_graph, Graph, HalfEdge, Label};
pub use iso::{apply_elementary_iso, apply_isos, structures_isomorphic, transport_to, IsoObject};
pub use structure::{marking_to_structure, LambdaStructure};
