//! Exhaustive oracles, instance generators and Monte Carlo experiments.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bfs_shortest_path, CycleWitness, DirectedGraph, Vertex};
use crate::partitioning::random_partition;

/// Largest graph the exhaustive oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive search is capped at {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("need 2 <= t <= n, got n = {n}, t = {t}")]
    InvalidCycleLength { n: usize, t: usize },
    #[error("density must lie in [0, 1], got {0}")]
    InvalidDensity(f64),
    #[error(
        "only {achieved} of {target} extra edges fit without creating a cycle shorter than {t}"
    )]
    Infeasible {
        target: usize,
        achieved: usize,
        t: usize,
    },
}

/// Longest simple cycle of a graph, with one witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// 0 if the graph is acyclic.
    pub longest: usize,
    pub witness: Option<CycleWitness>,
}

impl fmt::Display for OracleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LONGEST {}", self.longest)?;
        if let Some(w) = &self.witness {
            for v in w.vertices() {
                write!(f, " {v}")?;
            }
        }
        Ok(())
    }
}

/// Walks every simple path that starts at its smallest vertex and reports
/// each closed cycle (as the current path) to `visit`. Returning `true` from
/// `visit` stops the search.
fn for_each_cycle(g: &DirectedGraph, mut visit: impl FnMut(&[Vertex]) -> bool) {
    fn dfs(
        g: &DirectedGraph,
        start: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        let last = *path.last().expect("path starts non-empty");
        for &next in g.out_neighbors(last) {
            if next == start {
                if visit(path) {
                    return true;
                }
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                path.push(next);
                let stop = dfs(g, start, path, on_path, visit);
                path.pop();
                on_path[next] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }

    let mut on_path = vec![false; g.vertex_count()];
    for start in 0..g.vertex_count() {
        let mut path = vec![start];
        on_path[start] = true;
        let stop = dfs(g, start, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        if stop {
            return;
        }
    }
}

fn check_cap(g: &DirectedGraph, cap: usize) -> Result<(), OracleError> {
    if g.vertex_count() > cap {
        return Err(OracleError::TooLarge {
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Exact longest cycle by exhaustive DFS over simple paths.
pub fn brute_force_longest_cycle(
    g: &DirectedGraph,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let mut best: Option<Vec<Vertex>> = None;
    for_each_cycle(g, |cycle| {
        if best.as_ref().is_none_or(|b| cycle.len() > b.len()) {
            best = Some(cycle.to_vec());
        }
        cycle.len() == n
    });
    Ok(OracleResult {
        longest: best.as_ref().map_or(0, Vec::len),
        witness: best.map(CycleWitness::new),
    })
}

/// Bitmask of the simple cycle lengths present in `g` (bit `l` set iff some
/// cycle has `l` vertices).
pub fn cycle_length_set(g: &DirectedGraph, cap: usize) -> Result<u64, OracleError> {
    check_cap(g, cap.min(63))?;
    let mut lengths = 0u64;
    for_each_cycle(g, |cycle| {
        lengths |= 1 << cycle.len();
        false
    });
    Ok(lengths)
}

/// Uniform random digraph: each ordered pair of distinct vertices is an edge
/// with probability `density`.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> DirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edge_list(n, &edges).expect("generated ids are in range")
}

/// A generated graph with the cycle that was planted in it.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub graph: DirectedGraph,
    pub cycle: CycleWitness,
}

/// Plants a directed cycle on `t` random vertices of an `n`-vertex graph,
/// then adds `round(density * candidates)` extra edges chosen uniformly from
/// the remaining ordered pairs.
///
/// With `forbid_short`, an extra edge `(a, b)` is only kept when the
/// shortest `b -> a` path already present has at least `t` vertices, so the
/// result has no cycle on fewer than `t` vertices. Candidates are tried once
/// each in random order; running out before the target count is an error.
pub fn generate_planted_instance<R: Rng + ?Sized>(
    n: usize,
    t: usize,
    density: f64,
    forbid_short: bool,
    rng: &mut R,
) -> Result<PlantedInstance, GenError> {
    if t < 2 || t > n {
        return Err(GenError::InvalidCycleLength { n, t });
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(GenError::InvalidDensity(density));
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let cycle = order[..t].to_vec();
    let cycle_edges: Vec<_> = (0..t).map(|i| (cycle[i], cycle[(i + 1) % t])).collect();
    let mut graph = DirectedGraph::from_edge_list(n, &cycle_edges).expect("ids are in range");

    let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && !graph.has_edge(a, b))
        .collect();
    let target = (density * candidates.len() as f64).round() as usize;
    candidates.shuffle(rng);

    let mut extra = Vec::with_capacity(target);
    for (a, b) in candidates {
        if extra.len() == target {
            break;
        }
        if forbid_short {
            let closes_short = bfs_shortest_path(&graph, b, a).is_some_and(|p| p.len() < t);
            if closes_short {
                continue;
            }
        }
        extra.push((a, b));
        let all: Vec<_> = graph.edges().chain(extra.last().copied()).collect();
        graph = DirectedGraph::from_edge_list(n, &all).expect("ids are in range");
    }
    if extra.len() < target {
        return Err(GenError::Infeasible {
            target,
            achieved: extra.len(),
            t,
        });
    }
    Ok(PlantedInstance {
        graph,
        cycle: CycleWitness::new(cycle),
    })
}

// ---------------------------------------------------------------------------
// Experiments

/// How an observed frequency is compared with its theoretical value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundTest {
    /// `|observed - theoretical| <= 3 sigma`.
    TwoSided,
    /// `observed >= theoretical - 3 sigma`.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub name: String,
    pub k: usize,
    pub ground_set: usize,
    pub trials: u64,
    pub amplification: Option<f64>,
    pub seed: u64,
    pub observed: f64,
    pub theoretical: f64,
    /// Binomial standard deviation at the theoretical value.
    pub sigma: f64,
    /// `observed +- 3 sigma`.
    pub interval: (f64, f64),
    pub test: BoundTest,
    pub pass: bool,
    /// Exact probability, when the theoretical value is only a bound.
    pub closed_form: Option<f64>,
    pub closed_form_pass: Option<bool>,
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} k={} trials={} seed={} observed={:.6} theoretical={:.6} interval=[{:.6}, {:.6}] {}",
            self.name,
            self.k,
            self.trials,
            self.seed,
            self.observed,
            self.theoretical,
            self.interval.0,
            self.interval.1,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if let (Some(c), Some(p)) = (self.closed_form, self.closed_form_pass) {
            write!(f, " closed_form={c:.6} {}", if p { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

fn binomial_sigma(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Does a random split put vertices `0..k` in L and `k..2k` in R?
fn split_hit<R: Rng + ?Sized>(k: usize, rng: &mut R) -> bool {
    let p = random_partition(2 * k, rng);
    (0..k).all(|v| p.is_left(v)) && (k..2 * k).all(|v| !p.is_left(v))
}

/// Exact probability of the target split, by enumerating all `2^(2k)`
/// side assignments of the `2k` designated vertices.
pub fn exact_split_probability(k: usize) -> f64 {
    let total = 1u64 << (2 * k);
    let target = (1u64 << k) - 1; // bit i set = vertex i in L
    let hits = (0..total).filter(|&mask| mask == target).count();
    hits as f64 / total as f64
}

/// Monte Carlo frequency of the split "first `k` in L, next `k` in R" on a
/// `2k`-vertex ground set, against `4^-k`.
pub fn estimate_split_probability(k: usize, trials: u64, seed: u64) -> ExperimentReport {
    let trials = trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..trials).filter(|_| split_hit(k, &mut rng)).count();
    let observed = hits as f64 / trials as f64;
    let theoretical = 4f64.powi(-(k as i32));
    let sigma = binomial_sigma(theoretical, trials);
    ExperimentReport {
        name: "split-probability".into(),
        k,
        ground_set: 2 * k,
        trials,
        amplification: None,
        seed,
        observed,
        theoretical,
        sigma,
        interval: (observed - 3.0 * sigma, observed + 3.0 * sigma),
        test: BoundTest::TwoSided,
        pass: (observed - theoretical).abs() <= 3.0 * sigma,
        closed_form: None,
        closed_form_pass: None,
    }
}

/// Draws per meta-trial in the amplification experiment: `ceil(c * 4^k)`.
pub fn amplification_draws(k: usize, c: f64) -> u64 {
    (c * 4f64.powi(k as i32)).ceil() as u64
}

/// `1 - (1 - 4^-k)^draws`.
pub fn amplification_closed_form(k: usize, c: f64) -> f64 {
    let miss = 1.0 - 4f64.powi(-(k as i32));
    1.0 - miss.powf(amplification_draws(k, c) as f64)
}

/// Fraction of meta-trials where at least one of `ceil(c * 4^k)` random
/// splits realizes the target, against the lower bound `1 - e^-c`.
pub fn estimate_amplification(k: usize, c: f64, meta_trials: u64, seed: u64) -> ExperimentReport {
    let meta_trials = meta_trials.max(1);
    let draws = amplification_draws(k, c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..meta_trials)
        .filter(|_| (0..draws).any(|_| split_hit(k, &mut rng)))
        .count();
    let observed = hits as f64 / meta_trials as f64;
    let bound = 1.0 - (-c).exp();
    let sigma = binomial_sigma(bound, meta_trials);
    let exact = amplification_closed_form(k, c);
    let exact_sigma = binomial_sigma(exact, meta_trials);
    ExperimentReport {
        name: "amplification".into(),
        k,
        ground_set: 2 * k,
        trials: meta_trials,
        amplification: Some(c),
        seed,
        observed,
        theoretical: bound,
        sigma,
        interval: (observed - 3.0 * sigma, observed + 3.0 * sigma),
        test: BoundTest::LowerBound,
        pass: observed >= bound - 3.0 * sigma,
        closed_form: Some(exact),
        closed_form_pass: Some((observed - exact).abs() <= 3.0 * exact_sigma),
    }
}
