//! Contractible non-edges of 3-connected graphs.
//!
//! A non-edge `{u, v}` of a 3-connected graph is contractible when merging
//! `u` and `v` into one vertex (adjacent to both neighborhoods) leaves the
//! graph 3-connected. This crate provides the graph machinery to decide that
//! (connectivity, smallest cuts, fragments, minimum 3-fans, semi-wheel and
//! semi-prism recognition), a canonical labeling for isomorphism work, and an
//! exhaustive generator of 3-connected graphs that classifies every graph up
//! to a given order and derives the exceptional catalogs.

pub mod canon;
pub mod cli;
pub mod connectivity;
pub mod contraction;
pub mod enumerate;
pub mod error;
mod flow;
pub mod graph;
pub mod graph6;
pub mod structure;
pub mod vset;

pub use canon::{are_isomorphic, canonical_form, CanonicalLabel};
pub use connectivity::{
    fragments_of, lemma5_check, smallest_cuts, vertex_connectivity, CutRecord, Fragment, FragmentMode,
};
pub use contraction::{classify, is_contractible, non_edges, Classification};
pub use error::{Error, Result};
pub use graph::{make_named, Graph, NamedFamily};
pub use graph6::{emit_graph6, parse_graph6, parse_line, parse_sparse6};
pub use structure::{
    lemma1_witness, min_fan_from, minimum_fan, recognize_family, reduced_structure, FamilyTag, Fan, StructureKind,
    StructureReport,
};
pub use vset::VertexSet;
