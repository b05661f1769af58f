//! Marked PLCW decompositions of surfaces with boundary and punctures,
//! admissible markings, fixed and elementary moves, gluing and enumeration of
//! r-spin structures.

pub mod admissible;
pub mod complex;
pub mod elementary;
pub mod enumerate;
mod error;
pub mod fixed;
pub mod format;
pub mod glue;
pub mod marking;
pub mod radial;
pub mod surfaces;
pub mod walk;

pub use admissible::{check_admissible, is_admissible, AdmissibilityReport, VertexRecord};
pub use complex::{
    complex_from_words, BoundaryComponent, BoundaryKind, Corner, Direction, Edge, EdgeRole, Face, PlcwComplex, Side,
    VertexRole,
};
pub use error::PlcwError;
pub use fixed::{apply_fixed_move, apply_fixed_moves, FixedMove};
pub use marking::Marking;
pub use enumerate::{admissible_markings, candidate_count, enumerate_structures, generating_moves, Enumeration, DEFAULT_BUDGET};
pub use elementary::{apply_elementary_move, apply_elementary_move_normalized, prepare_merge_edge, ElementaryMove};
pub use glue::{disjoint_union, glue, glue_pairs, Bordism, BoundaryLabel};
pub use format::{parse_surface, write_bordism, write_surface, SurfaceFile};
pub use radial::{radialize_disk, RadialCells, Region};
pub use walk::{apply_move, candidate_moves, random_move, AnyMove};
