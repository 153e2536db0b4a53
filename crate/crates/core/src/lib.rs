//! Long directed cycle detection.
//!
//! Decides whether a digraph has a simple cycle on at least `k` vertices by
//! combining a k-path black box (for cycles on `k..=2k` vertices) with a
//! polynomial BFS procedure run over vertex bipartitions (for longer ones).
//! Partitions come either from random draws or from universal sets.
//!
//! ```
//! use ldc_core::{answer_with_verification, DirectedGraph, SolverConfig};
//!
//! let c5 = DirectedGraph::cycle(5);
//! let answer = answer_with_verification(&c5, 2, &SolverConfig::deterministic()).unwrap();
//! assert!(answer.is_yes());
//! assert_eq!(answer.witness.unwrap().len(), 5);
//! ```

pub mod driver;
pub mod graph;
pub mod harness;
pub mod kpath;
pub mod partitioning;
pub mod polyalg;

pub use driver::{
    answer_with_verification, ldc_alg, short_cycle_scan, Counters, Decision, LdcAnswer, LdcError,
    Mode, Provenance, Solver, SolverConfig,
};
pub use graph::{
    bfs_shortest_path, parse_graph, validate_cycle, CycleWitness, DirectedGraph, ParseError,
    PathWitness, Vertex,
};
pub use harness::{brute_force_longest_cycle, generate_planted_instance, OracleResult};
pub use kpath::{
    extract_path_witness, kpath_decide, BackendKind, ColorCoding, KPathBackend, KPathQuery,
    KPathSolver, SubsetDp,
};
pub use partitioning::{
    build_universal_set, partitions_from_family, random_partition, verify_universal, PartitionLR,
    UniversalSetFamily, Verification,
};
pub use polyalg::{join_paths, poly_alg, PolyAlgOutcome};
