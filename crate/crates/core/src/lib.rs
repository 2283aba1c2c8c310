//! Contractible edges in k-connected chordal graphs.
//!
//! An edge is contractible when merging its endpoints keeps the vertex
//! connectivity κ. For chordal graphs this can be read off a clique tree:
//! an edge is contractible iff no tree-edge label (a minimal separator)
//! contains it, or every label that does has more than κ vertices. The
//! crate computes that classification and checks it, and the supporting
//! facts about clique trees and minimal separators, against brute-force
//! oracles on small graphs.

mod bits;
pub mod chordal;
pub mod clique_tree;
pub mod contractibility;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod separators;
pub mod verify;

use sha2::{Digest, Sha256};

pub use chordal::{is_chordal, mcs_order, Chordality, EliminationOrder};
pub use clique_tree::{build_clique_tree, CliqueTree, RelabeledTree, TreeDecomposition};
pub use contractibility::{
    full_report, ContractibilityReport, EdgeVerdict, ReportOptions, Verdict,
};
pub use error::{Error, Result};
pub use graph::{vset, ContractionResult, Edge, Graph, VertexSet};
pub use io::{parse_graph, serialize_graph, Format};
pub use separators::{vertex_connectivity, MinCutFamily, SeparatorFamily};

/// Short stable fingerprint: the first 16 hex digits of the SHA-256 of the
/// edge-list serialization.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(serialize_graph(g, Format::EdgeList).as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}
