//! Annihilating-submodule graphs of finite modules over finite products of
//! integer residue rings.
//!
//! Pipeline: [`RingSpec`] and [`ModuleSpec`] describe the input,
//! [`enumerate_submodules`] builds the full lattice, [`build_ag`] turns it
//! into a graph, [`ParamReport`] computes exact invariants, and [`suite`]
//! checks the stated claims over instance families.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod module;
pub mod suite;

pub use algebra::{CombineMode, Ideal, RingElem, RingSpec, RingSummary};
pub use error::{Error, Result};
pub use graph::{build_ag, build_checked, export_graph, m_is_vertex, AGGraph, ExportFormat, Variant};
pub use invariants::{
    DomVariant, Param, ParamReport, SolverStatus, UGraph, DEFAULT_EXACT_CAP,
};
pub use module::{
    enumerate_submodules, structure_report, Caps, ModuleSpec, StructureReport, Submodule,
    SubmoduleLattice,
};
