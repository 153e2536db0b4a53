//! The k-path black box: decide whether a digraph has a simple path on
//! exactly `length` vertices from one given vertex to another.
//!
//! Two backends sit behind [`KPathSolver`]:
//!
//! * [`SubsetDp`]: exact dynamic programming over (vertex subset, last vertex)
//!   states, exponential in the vertex count and therefore capped.
//! * [`ColorCoding`]: randomized color coding with one-sided error. A `true`
//!   answer is always backed by a real colorful path; a `false` answer on a
//!   yes-instance happens with probability at most `(1 - e^-length)^repetitions`.
//!
//! [`extract_path_witness`] turns any backend into one that returns a
//! concrete path, by deleting edges whose removal keeps the answer positive.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{reachable_from, DirectedGraph, PathWitness, Vertex};

/// Default vertex cap for the subset DP.
pub const DEFAULT_SUBSET_DP_CAP: usize = 25;
/// Default `c` in the color-coding repetition count `ceil(c * e^length)`.
pub const DEFAULT_REPETITION_CONSTANT: f64 = 3.0;
/// Longest path (in vertices) the color-coding table supports.
pub const COLOR_CODING_MAX_LENGTH: usize = 20;
/// Default number of full edge-removal passes during witness extraction.
pub const DEFAULT_EXTRACTION_ATTEMPTS: u32 = 3;

/// "Is there a simple path on exactly `length` vertices from `from` to `to`?"
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KPathQuery {
    pub from: Vertex,
    pub to: Vertex,
    pub length: usize,
}

impl KPathQuery {
    pub fn new(from: Vertex, to: Vertex, length: usize) -> Self {
        Self { from, to, length }
    }

    fn validate(&self, g: &DirectedGraph) -> Result<(), KPathError> {
        let n = g.vertex_count();
        if self.from >= n || self.to >= n || self.length == 0 {
            return Err(KPathError::InvalidQuery { query: *self, n });
        }
        Ok(())
    }

    /// Answers the cases every backend handles the same way: single-vertex
    /// queries, and queries that cannot be satisfied for counting reasons.
    fn trivial_answer(&self, g: &DirectedGraph) -> Option<bool> {
        if self.length == 1 {
            return Some(self.from == self.to);
        }
        if self.from == self.to || self.length > g.vertex_count() {
            return Some(false);
        }
        None
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KPathError {
    #[error("invalid k-path query {query:?} on a graph with {n} vertices")]
    InvalidQuery { query: KPathQuery, n: usize },
    #[error(
        "subset DP is capped at {cap} vertices but the graph has {n}; use the color-coding backend"
    )]
    TooManyVertices { n: usize, cap: usize },
    #[error("color coding supports paths of at most {cap} vertices, {length} requested")]
    PathTooLong { length: usize, cap: usize },
    #[error("witness extraction for {query:?} did not converge after {attempts} passes")]
    ExtractionFailed { query: KPathQuery, attempts: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BackendKind {
    ColorCoding,
    SubsetDp,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::ColorCoding => "color-coding",
            BackendKind::SubsetDp => "subset-dp",
        })
    }
}

/// A k-path decision procedure.
pub trait KPathSolver {
    fn decide(&mut self, g: &DirectedGraph, q: &KPathQuery) -> Result<bool, KPathError>;

    /// Whether `false` answers are guaranteed correct.
    fn is_exact(&self) -> bool;

    fn kind(&self) -> BackendKind;
}

/// Decides `q` with `backend`.
pub fn kpath_decide(
    backend: &mut dyn KPathSolver,
    g: &DirectedGraph,
    q: &KPathQuery,
) -> Result<bool, KPathError> {
    backend.decide(g, q)
}

// ---------------------------------------------------------------------------
// Subset DP

/// Path-end table from a fixed start vertex: `ends[s - 1]` is the bitmask of
/// vertices `w` such that some simple path on `s` vertices runs from the start
/// to `w`.
fn end_masks(g: &DirectedGraph, from: Vertex, max_len: usize) -> Vec<u32> {
    let mut ends_by_size = vec![0u32; max_len];
    let start = 1u32 << from;
    let mut layer: HashMap<u32, u32> = HashMap::from([(start, start)]);
    ends_by_size[0] = start;
    for size in 2..=max_len {
        let mut next: HashMap<u32, u32> = HashMap::with_capacity(layer.len() * 2);
        for (&set, &ends) in &layer {
            for w in bits(ends) {
                for &x in g.out_neighbors(w) {
                    let bit = 1u32 << x;
                    if set & bit == 0 {
                        *next.entry(set | bit).or_insert(0) |= bit;
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        ends_by_size[size - 1] = next.values().fold(0, |acc, &e| acc | e);
        layer = next;
    }
    ends_by_size
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

fn check_dp_cap(g: &DirectedGraph, cap: usize) -> Result<(), KPathError> {
    // subsets are stored as u32 masks
    let cap = cap.min(32);
    if g.vertex_count() > cap {
        return Err(KPathError::TooManyVertices {
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Exact k-path decision by subset DP, without caching.
pub fn subsetdp_kpath(g: &DirectedGraph, q: &KPathQuery, cap: usize) -> Result<bool, KPathError> {
    q.validate(g)?;
    check_dp_cap(g, cap)?;
    if let Some(answer) = q.trivial_answer(g) {
        return Ok(answer);
    }
    let ends = end_masks(g, q.from, q.length);
    Ok(ends[q.length - 1] & (1 << q.to) != 0)
}

/// Number of DP states `(S, to)` with `|S| = length` that are realized by a
/// simple path from `from` covering exactly `S`, i.e. the number of distinct
/// vertex sets of satisfying paths.
pub fn subsetdp_count_states(
    g: &DirectedGraph,
    q: &KPathQuery,
    cap: usize,
) -> Result<usize, KPathError> {
    q.validate(g)?;
    check_dp_cap(g, cap)?;
    if q.length == 1 {
        return Ok(usize::from(q.from == q.to));
    }
    if q.length > g.vertex_count() {
        return Ok(0);
    }
    let start = 1u32 << q.from;
    let mut layer: HashMap<u32, u32> = HashMap::from([(start, start)]);
    for _ in 2..=q.length {
        let mut next: HashMap<u32, u32> = HashMap::new();
        for (&set, &ends) in &layer {
            for w in bits(ends) {
                for &x in g.out_neighbors(w) {
                    let bit = 1u32 << x;
                    if set & bit == 0 {
                        *next.entry(set | bit).or_insert(0) |= bit;
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.values().filter(|&&e| e & (1 << q.to) != 0).count())
}

/// Exact backend. Remembers the DP table of the most recent graph, one
/// entry per start vertex, so a batch of queries against the same graph
/// shares work.
#[derive(Clone, Debug)]
pub struct SubsetDp {
    cap: usize,
    cache_graph: Option<DirectedGraph>,
    cache: HashMap<Vertex, Vec<u32>>,
}

impl SubsetDp {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            cache_graph: None,
            cache: HashMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }
}

impl Default for SubsetDp {
    fn default() -> Self {
        Self::new(DEFAULT_SUBSET_DP_CAP)
    }
}

impl KPathSolver for SubsetDp {
    fn decide(&mut self, g: &DirectedGraph, q: &KPathQuery) -> Result<bool, KPathError> {
        q.validate(g)?;
        check_dp_cap(g, self.cap)?;
        if let Some(answer) = q.trivial_answer(g) {
            return Ok(answer);
        }
        if self.cache_graph.as_ref() != Some(g) {
            self.cache.clear();
            self.cache_graph = Some(g.clone());
        }
        let ends = self.cache.entry(q.from).or_default();
        if ends.len() < q.length {
            *ends = end_masks(g, q.from, q.length);
        }
        Ok(ends[q.length - 1] & (1 << q.to) != 0)
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn kind(&self) -> BackendKind {
        BackendKind::SubsetDp
    }
}

// ---------------------------------------------------------------------------
// Color coding

/// How many random colorings a color-coding query tries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Repetitions {
    Fixed(u64),
    /// `ceil(c * e^length)`.
    Scaled(f64),
}

impl Repetitions {
    pub fn for_length(self, length: usize) -> u64 {
        match self {
            Repetitions::Fixed(r) => r.max(1),
            Repetitions::Scaled(c) => ((c * (length as f64).exp()).ceil() as u64).max(1),
        }
    }
}

/// Vertices lying on some walk from `from` to `to`. Any simple path between
/// them stays inside this set.
pub fn corridor(g: &DirectedGraph, from: Vertex, to: Vertex) -> Vec<bool> {
    let forward = reachable_from(g, from);
    let backward = reachable_from(&g.reversed(), to);
    forward
        .iter()
        .zip(&backward)
        .map(|(&a, &b)| a && b)
        .collect()
}

/// Reusable DP table for colorful-path detection.
struct ColorfulTable {
    words: usize,
    rows: Vec<u64>,
}

impl ColorfulTable {
    fn new(n: usize, length: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            words,
            rows: vec![0; words << length],
        }
    }

    /// Is there a path from `q.from` to `q.to` on `q.length` vertices using
    /// each of the `q.length` colors exactly once, inside `allowed`?
    fn colorful_path(
        &mut self,
        g: &DirectedGraph,
        q: &KPathQuery,
        colors: &[u8],
        allowed: &[bool],
    ) -> bool {
        let words = self.words;
        let full = (1usize << q.length) - 1;
        self.rows.fill(0);
        let start_mask = 1usize << colors[q.from];
        self.rows[start_mask * words + q.from / 64] |= 1 << (q.from % 64);
        for mask in start_mask..full {
            if mask & start_mask == 0 {
                continue;
            }
            for word in 0..words {
                let mut row = self.rows[mask * words + word];
                while row != 0 {
                    let w = word * 64 + row.trailing_zeros() as usize;
                    row &= row - 1;
                    if w == q.to {
                        continue;
                    }
                    for &x in g.out_neighbors(w) {
                        let bit = 1usize << colors[x];
                        if !allowed[x] || mask & bit != 0 {
                            continue;
                        }
                        let next = mask | bit;
                        // `to` may only close the path, and nothing else may fill it
                        if (x == q.to) != (next == full) {
                            continue;
                        }
                        self.rows[next * words + x / 64] |= 1 << (x % 64);
                    }
                }
            }
        }
        self.rows[full * words + q.to / 64] & (1 << (q.to % 64)) != 0
    }
}

fn color_vertices<R: Rng + ?Sized>(n: usize, length: usize, rng: &mut R, colors: &mut Vec<u8>) {
    colors.clear();
    colors.extend((0..n).map(|_| rng.gen_range(0..length) as u8));
}

fn check_color_cap(q: &KPathQuery) -> Result<(), KPathError> {
    if q.length > COLOR_CODING_MAX_LENGTH {
        return Err(KPathError::PathTooLong {
            length: q.length,
            cap: COLOR_CODING_MAX_LENGTH,
        });
    }
    Ok(())
}

/// One color-coding round: color every vertex uniformly with `q.length`
/// colors and look for a colorful path. Succeeds on a fixed path with
/// probability at least `length! / length^length`.
pub fn colorful_trial<R: Rng + ?Sized>(
    g: &DirectedGraph,
    q: &KPathQuery,
    rng: &mut R,
) -> Result<bool, KPathError> {
    q.validate(g)?;
    check_color_cap(q)?;
    if let Some(answer) = q.trivial_answer(g) {
        return Ok(answer);
    }
    let mut colors = Vec::new();
    color_vertices(g.vertex_count(), q.length, rng, &mut colors);
    let allowed = vec![true; g.vertex_count()];
    Ok(ColorfulTable::new(g.vertex_count(), q.length).colorful_path(g, q, &colors, &allowed))
}

/// Randomized k-path decision with up to `repetitions` colorings.
pub fn colorcoding_kpath<R: Rng + ?Sized>(
    g: &DirectedGraph,
    q: &KPathQuery,
    repetitions: u64,
    rng: &mut R,
) -> Result<bool, KPathError> {
    q.validate(g)?;
    check_color_cap(q)?;
    if let Some(answer) = q.trivial_answer(g) {
        return Ok(answer);
    }
    let allowed = corridor(g, q.from, q.to);
    if allowed.iter().filter(|&&a| a).count() < q.length {
        return Ok(false);
    }
    let mut table = ColorfulTable::new(g.vertex_count(), q.length);
    let mut colors = Vec::with_capacity(g.vertex_count());
    for _ in 0..repetitions.max(1) {
        color_vertices(g.vertex_count(), q.length, rng, &mut colors);
        if table.colorful_path(g, q, &colors, &allowed) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Randomized backend with its own seeded RNG stream.
#[derive(Clone, Debug)]
pub struct ColorCoding {
    repetitions: Repetitions,
    rng: ChaCha8Rng,
}

impl ColorCoding {
    pub fn new(repetitions: Repetitions, seed: u64) -> Self {
        Self::with_rng(repetitions, ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn with_rng(repetitions: Repetitions, rng: ChaCha8Rng) -> Self {
        Self { repetitions, rng }
    }

    pub fn repetitions(&self) -> Repetitions {
        self.repetitions
    }
}

impl KPathSolver for ColorCoding {
    fn decide(&mut self, g: &DirectedGraph, q: &KPathQuery) -> Result<bool, KPathError> {
        let reps = self.repetitions.for_length(q.length);
        colorcoding_kpath(g, q, reps, &mut self.rng)
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn kind(&self) -> BackendKind {
        BackendKind::ColorCoding
    }
}

/// Either built-in backend, chosen at runtime.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum KPathBackend {
    SubsetDp(SubsetDp),
    ColorCoding(ColorCoding),
}

impl KPathSolver for KPathBackend {
    fn decide(&mut self, g: &DirectedGraph, q: &KPathQuery) -> Result<bool, KPathError> {
        match self {
            KPathBackend::SubsetDp(b) => b.decide(g, q),
            KPathBackend::ColorCoding(b) => b.decide(g, q),
        }
    }

    fn is_exact(&self) -> bool {
        match self {
            KPathBackend::SubsetDp(b) => b.is_exact(),
            KPathBackend::ColorCoding(b) => b.is_exact(),
        }
    }

    fn kind(&self) -> BackendKind {
        match self {
            KPathBackend::SubsetDp(b) => b.kind(),
            KPathBackend::ColorCoding(b) => b.kind(),
        }
    }
}

// ---------------------------------------------------------------------------
// Witness extraction

/// Follows the unique out-edge from `q.from` for `q.length - 1` steps.
fn walk_unique_path(g: &DirectedGraph, q: &KPathQuery) -> Option<PathWitness> {
    let mut path = vec![q.from];
    let mut cur = q.from;
    for _ in 1..q.length {
        match g.out_neighbors(cur) {
            [next] => cur = *next,
            _ => return None,
        }
        path.push(cur);
    }
    Some(PathWitness::new(path))
}

/// Finds a concrete path for `q` using only the decision oracle `backend`.
///
/// Edges off the `from`/`to` corridor are dropped first. Then each remaining
/// edge is deleted whenever the answer stays positive without it. Once no
/// edge can go, the survivors are exactly one path. Randomized backends can
/// wrongly keep an edge, so the pass is repeated up to `max_attempts` times.
pub fn extract_path_witness(
    backend: &mut dyn KPathSolver,
    g: &DirectedGraph,
    q: &KPathQuery,
    max_attempts: u32,
) -> Result<Option<PathWitness>, KPathError> {
    if !backend.decide(g, q)? {
        return Ok(None);
    }
    if q.length == 1 {
        return Ok(Some(PathWitness::new(vec![q.from])));
    }
    let inside = corridor(g, q.from, q.to);
    let (mut current, _) = DirectedGraph::from_edges(
        g.vertex_count(),
        g.edges().filter(|&(a, b)| inside[a] && inside[b]),
    )
    .expect("subgraph edges are in range");

    for _ in 0..max_attempts.max(1) {
        let edges: Vec<_> = current.edges().collect();
        for (a, b) in edges {
            if current.edge_count() < q.length {
                break;
            }
            let candidate = current.with_edge_removed(a, b);
            if backend.decide(&candidate, q)? {
                current = candidate;
            }
        }
        if let Some(path) = walk_unique_path(&current, q) {
            if path.check_query(g, q.from, q.to, q.length).is_ok() {
                return Ok(Some(path));
            }
        }
    }
    Err(KPathError::ExtractionFailed {
        query: *q,
        attempts: max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> DirectedGraph {
        DirectedGraph::path(3)
    }

    #[test]
    fn path_graph_queries() {
        let g = path3();
        assert!(subsetdp_kpath(&g, &KPathQuery::new(0, 2, 3), 25).unwrap());
        assert!(!subsetdp_kpath(&g, &KPathQuery::new(0, 2, 2), 25).unwrap());
        let mut cc = ColorCoding::new(Repetitions::Scaled(3.0), 7);
        assert!(cc.decide(&g, &KPathQuery::new(0, 2, 3)).unwrap());
        assert!(!cc.decide(&g, &KPathQuery::new(0, 2, 2)).unwrap());
    }

    #[test]
    fn single_vertex_queries() {
        let tri = DirectedGraph::cycle(3);
        assert!(subsetdp_kpath(&tri, &KPathQuery::new(0, 0, 1), 25).unwrap());
        assert!(!subsetdp_kpath(&tri, &KPathQuery::new(0, 1, 1), 25).unwrap());
        assert!(!subsetdp_kpath(&tri, &KPathQuery::new(0, 0, 3), 25).unwrap());
    }

    #[test]
    fn c5_full_path() {
        let c5 = DirectedGraph::cycle(5);
        assert!(subsetdp_kpath(&c5, &KPathQuery::new(0, 4, 5), 25).unwrap());
        assert!(!subsetdp_kpath(&c5, &KPathQuery::new(0, 4, 4), 25).unwrap());
    }

    #[test]
    fn too_long_is_false_not_error() {
        let g = path3();
        assert!(!subsetdp_kpath(&g, &KPathQuery::new(0, 2, 9), 25).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(!colorcoding_kpath(&g, &KPathQuery::new(0, 2, 9), 4, &mut rng).unwrap());
    }

    #[test]
    fn invalid_queries_error() {
        let g = path3();
        assert!(matches!(
            subsetdp_kpath(&g, &KPathQuery::new(0, 5, 2), 25),
            Err(KPathError::InvalidQuery { .. })
        ));
        assert!(matches!(
            subsetdp_kpath(&g, &KPathQuery::new(0, 1, 0), 25),
            Err(KPathError::InvalidQuery { .. })
        ));
    }

    #[test]
    fn subset_dp_cap() {
        let g = DirectedGraph::path(30);
        let err = subsetdp_kpath(&g, &KPathQuery::new(0, 2, 3), 25).unwrap_err();
        assert_eq!(err, KPathError::TooManyVertices { n: 30, cap: 25 });
        assert!(err.to_string().contains("color-coding"));
    }

    #[test]
    fn color_coding_cap() {
        let g = DirectedGraph::path(30);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            colorcoding_kpath(&g, &KPathQuery::new(0, 25, 26), 1, &mut rng),
            Err(KPathError::PathTooLong { .. })
        ));
    }

    #[test]
    fn k4_counts_one_state() {
        let k4 = DirectedGraph::complete(4);
        let q = KPathQuery::new(0, 3, 4);
        assert!(subsetdp_kpath(&k4, &q, 25).unwrap());
        assert_eq!(subsetdp_count_states(&k4, &q, 25).unwrap(), 1);
        // 3-vertex paths 0 -> x -> 3 with x in {1, 2}
        assert_eq!(
            subsetdp_count_states(&k4, &KPathQuery::new(0, 3, 3), 25).unwrap(),
            2
        );
    }

    #[test]
    fn cached_backend_tracks_graph_changes() {
        let mut dp = SubsetDp::default();
        let c5 = DirectedGraph::cycle(5);
        let q = KPathQuery::new(0, 4, 5);
        assert!(dp.decide(&c5, &q).unwrap());
        let cut = c5.with_edge_removed(1, 2);
        assert!(!dp.decide(&cut, &q).unwrap());
        assert!(dp.decide(&c5, &q).unwrap());
    }

    #[test]
    fn extraction_with_chord() {
        let g = DirectedGraph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let q = KPathQuery::new(0, 2, 3);
        let mut dp = SubsetDp::default();
        let w = extract_path_witness(&mut dp, &g, &q, 3).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2]);
        let mut cc = ColorCoding::new(Repetitions::Scaled(3.0), 11);
        let w = extract_path_witness(&mut cc, &g, &q, 3).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn extraction_on_no_instance() {
        let g = path3();
        let mut dp = SubsetDp::default();
        assert!(
            extract_path_witness(&mut dp, &g, &KPathQuery::new(2, 0, 3), 3)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn repetition_counts() {
        assert_eq!(Repetitions::Scaled(3.0).for_length(4), 164);
        assert_eq!(Repetitions::Fixed(0).for_length(4), 1);
    }

    #[test]
    fn color_coding_is_reproducible() {
        let g = DirectedGraph::complete(6);
        let q = KPathQuery::new(0, 5, 5);
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..50)
                .map(|_| colorful_trial(&g, &q, &mut rng).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(run(3), run(3));
    }
}
