//! t-clique spectral radius of small graphs, disjoint clique packing and
//! exhaustive scans for the spectral extremal graphs of `kK_{r+1}`-free graphs.

pub mod cli;
pub mod cliques;
pub mod error;
pub mod graph;
pub mod json;
pub mod lab;
pub mod packing;
pub mod tensor;

pub use cliques::{
    clique_components, clique_connected, count_cliques, count_join_turan_cliques,
    enumerate_cliques, is_clique_regular, Clique, CliqueComponents, CliqueSet,
};
pub use error::{Error, Result};
pub use graph::{
    are_isomorphic, chvatal_hanson_bound, complete_graph, complete_multipartite, disjoint_union,
    graph_from_graph6, graph_to_graph6, join, matching_number, turan_graph, Graph, PartitionSpec,
};
pub use lab::{
    check_lower_bound, conjectured_extremal, enumerate_graphs, maximizer_connectivity_check, scan,
    scan_all, verify_balancing, verify_monotonicity, ScanOptions, ScanParams, ScanRecord, Verdict,
};
pub use packing::{find_disjoint_packing, is_free, FreenessQuery, Packing};
pub use tensor::{
    apply_tensor, eigen_residual, rayleigh, spectral_radius, weakly_irreducible, SolverOptions,
    SpectralResult,
};
