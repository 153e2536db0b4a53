//! Polynomial-time detection of long cycles that are compatible with a
//! given `(L, R)` split.
//!
//! For every ordered pair `v != u` in `L`, take a shortest `v -> u` path `P`
//! inside `G[L]`. Pairs whose shortest path does not have exactly `k`
//! vertices are skipped. Otherwise search any `u -> v` path avoiding the
//! interior of `P`; if one exists the two paths close a simple cycle on at
//! least `k` vertices.
//!
//! Accepting always yields a valid cycle on `>= k` vertices. Conversely, if
//! the graph has no cycle on `k..=2k` vertices but has a longer cycle
//! `v_1 .. v_t` with `v_1..v_k` in `L` and `v_{k+1}..v_{2k}` in `R`, the pair
//! `(v_1, v_k)` accepts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bfs_path_within, BfsTree, CycleWitness, DirectedGraph, PathWitness, Vertex};
use crate::partitioning::PartitionLR;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JoinError {
    #[error("paths do not meet end to end: {first:?} then {second:?}")]
    EndpointMismatch {
        first: (Vertex, Vertex),
        second: (Vertex, Vertex),
    },
    #[error("vertex {0} lies on both paths")]
    SharedVertex(Vertex),
    #[error("paths must have at least 2 vertices each")]
    Degenerate,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyAlgError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    PartitionSize { partition: usize, graph: usize },
    #[error(transparent)]
    Join(#[from] JoinError),
}

/// Closes `forward` (`v -> u`) and `backward` (`u -> v`) into a cycle.
/// The two paths must share exactly their endpoints.
pub fn join_paths(
    forward: &PathWitness,
    backward: &PathWitness,
) -> Result<CycleWitness, JoinError> {
    if forward.len() < 2 || backward.len() < 2 {
        return Err(JoinError::Degenerate);
    }
    let f = forward.vertices();
    let b = backward.vertices();
    let (v, u) = (f[0], f[f.len() - 1]);
    if b[0] != u || b[b.len() - 1] != v || v == u {
        return Err(JoinError::EndpointMismatch {
            first: (v, u),
            second: (b[0], b[b.len() - 1]),
        });
    }
    let interior = &b[1..b.len() - 1];
    if let Some(&shared) = interior.iter().find(|x| f.contains(x)) {
        return Err(JoinError::SharedVertex(shared));
    }
    let mut cycle = f.to_vec();
    cycle.extend_from_slice(interior);
    Ok(CycleWitness::new(cycle))
}

/// The accepting pair and the two paths that closed the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Acceptance {
    pub v: Vertex,
    pub u: Vertex,
    pub witness: CycleWitness,
    /// Vertices on the `v -> u` path inside `G[L]`; always `k`.
    pub forward_len: usize,
    /// Vertices on the returning `u -> v` path.
    pub backward_len: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyAlgOutcome {
    pub acceptance: Option<Acceptance>,
    /// BFS runs performed, for cost accounting.
    pub bfs_runs: usize,
}

impl PolyAlgOutcome {
    pub fn accepted(&self) -> bool {
        self.acceptance.is_some()
    }

    pub fn witness(&self) -> Option<&CycleWitness> {
        self.acceptance.as_ref().map(|a| &a.witness)
    }
}

/// Runs the pairwise BFS procedure on `(g, k, p)`.
///
/// Pairs are tried in lexicographic `(v, u)` order, so the reported witness
/// is deterministic. One BFS tree per `v` answers the shortest-path question
/// for every `u`; it yields the same paths as a separate search per pair
/// because BFS expands lower ids first either way.
pub fn poly_alg(
    g: &DirectedGraph,
    k: usize,
    p: &PartitionLR,
) -> Result<PolyAlgOutcome, PolyAlgError> {
    if k < 2 {
        return Err(PolyAlgError::InvalidK(k));
    }
    if p.vertex_count() != g.vertex_count() {
        return Err(PolyAlgError::PartitionSize {
            partition: p.vertex_count(),
            graph: g.vertex_count(),
        });
    }
    let mut outcome = PolyAlgOutcome::default();
    let left = p.left();
    if left.len() < k {
        return Ok(outcome);
    }
    let in_left = p.left_mask();
    let mut outside_path = vec![true; g.vertex_count()];

    for &v in &left {
        let tree = BfsTree::new(g, v, Some(in_left));
        outcome.bfs_runs += 1;
        for &u in &left {
            if u == v || tree.path_len(u) != Some(k) {
                continue;
            }
            let forward = tree.path_to(u).expect("length checked");
            for &x in &forward.vertices()[1..k - 1] {
                outside_path[x] = false;
            }
            let backward = bfs_path_within(g, u, v, &outside_path);
            outcome.bfs_runs += 1;
            for &x in &forward.vertices()[1..k - 1] {
                outside_path[x] = true;
            }
            if let Some(backward) = backward {
                let witness = join_paths(&forward, &backward)?;
                outcome.acceptance = Some(Acceptance {
                    v,
                    u,
                    witness,
                    forward_len: forward.len(),
                    backward_len: backward.len(),
                });
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}
