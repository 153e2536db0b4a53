//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the solver code paths it is used to check.

#![allow(dead_code)]

use ldc_core::DirectedGraph;
use rand::Rng;

/// `table[from][to][len]` is true iff a simple path on exactly `len`
/// vertices runs from `from` to `to`. Enumerates every simple path by DFS.
pub fn all_path_lengths(g: &DirectedGraph) -> Vec<Vec<Vec<bool>>> {
    let n = g.vertex_count();
    let mut table = vec![vec![vec![false; n + 1]; n]; n];
    fn dfs(
        g: &DirectedGraph,
        start: usize,
        cur: usize,
        len: usize,
        used: &mut [bool],
        table: &mut [Vec<Vec<bool>>],
    ) {
        table[start][cur][len] = true;
        for &x in g.out_neighbors(cur) {
            if !used[x] {
                used[x] = true;
                dfs(g, start, x, len + 1, used, table);
                used[x] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        dfs(g, s, s, 1, &mut used, &mut table);
    }
    table
}

/// Number of distinct vertex sets of simple `from -> to` paths on `len` vertices.
pub fn path_vertex_sets(g: &DirectedGraph, from: usize, to: usize, len: usize) -> usize {
    let mut sets = std::collections::BTreeSet::new();
    fn dfs(
        g: &DirectedGraph,
        path: &mut Vec<usize>,
        to: usize,
        len: usize,
        sets: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        let cur = *path.last().unwrap();
        if path.len() == len {
            if cur == to {
                let mut s = path.clone();
                s.sort();
                sets.insert(s);
            }
            return;
        }
        for &x in g.out_neighbors(cur) {
            if !path.contains(&x) {
                path.push(x);
                dfs(g, path, to, len, sets);
                path.pop();
            }
        }
    }
    dfs(g, &mut vec![from], to, len, &mut sets);
    sets.len()
}

/// Shortest path vertex count from `from` to `to` over all simple paths.
pub fn min_path_len(g: &DirectedGraph, from: usize, to: usize) -> Option<usize> {
    let table = all_path_lengths(g);
    (1..=g.vertex_count()).find(|&l| table[from][to][l])
}

/// Longest cycle by checking every ordered vertex sequence whose first
/// vertex is its minimum. Only for tiny graphs.
pub fn longest_cycle_by_permutations(g: &DirectedGraph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    fn extend(g: &DirectedGraph, seq: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut usize) {
        let n = g.vertex_count();
        if seq.len() >= 2 {
            let closes = (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]));
            if closes && seq.len() > *best {
                *best = seq.len();
            }
        }
        for v in seq[0] + 1..n {
            if !used[v] {
                used[v] = true;
                seq.push(v);
                extend(g, seq, used, best);
                seq.pop();
                used[v] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut best);
    }
    best
}

pub fn random_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> DirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edge_list(n, &edges).unwrap()
}

/// Random DAG: edges only go from lower to higher id.
pub fn random_dag<R: Rng>(n: usize, density: f64, rng: &mut R) -> DirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edge_list(n, &edges).unwrap()
}
