//! Simple directed graphs on dense vertex ids, the edge-list text format,
//! BFS shortest paths and path/cycle witnesses.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier; vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// A simple digraph: no self-loops, no parallel edges.
///
/// Out-neighbor lists are kept sorted so that every traversal expands the
/// lowest vertex id first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Outcome of normalizing a raw edge list into a [`DirectedGraph`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Normalization {
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("edge ({from}, {to}) has an endpoint outside 0..{n}")]
pub struct VertexOutOfRange {
    pub from: Vertex,
    pub to: Vertex,
    pub n: usize,
}

impl DirectedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from raw edges, dropping self-loops and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<(Self, Normalization), VertexOutOfRange>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut report = Normalization::default();
        let mut raw = 0usize;
        for (from, to) in edges {
            if from >= n || to >= n {
                return Err(VertexOutOfRange { from, to, n });
            }
            if from == to {
                report.self_loops_dropped += 1;
                continue;
            }
            adjacency[from].push(to);
            raw += 1;
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        report.duplicates_dropped = raw - edge_count;
        Ok((
            Self {
                adjacency,
                edge_count,
            },
            report,
        ))
    }

    /// Like [`from_edges`](Self::from_edges) but discards the normalization report.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, VertexOutOfRange> {
        Self::from_edges(n, edges.iter().copied()).map(|(g, _)| g)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle edges are in range")
    }

    /// The directed path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges).expect("path edges are in range")
    }

    /// Complete digraph: every ordered pair of distinct vertices is an edge.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        Self::from_edge_list(n, &edges).expect("complete edges are in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted out-neighbors of `v`.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, from: Vertex, to: Vertex) -> bool {
        from < self.adjacency.len() && self.adjacency[from].binary_search(&to).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn with_edge_removed(&self, from: Vertex, to: Vertex) -> Self {
        let mut g = self.clone();
        if let Ok(pos) = g.adjacency[from].binary_search(&to) {
            g.adjacency[from].remove(pos);
            g.edge_count -= 1;
        }
        g
    }

    /// Reverse graph (every edge flipped).
    pub fn reversed(&self) -> Self {
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, v) in self.edges() {
            adjacency[v].push(u);
        }
        // edges() is lexicographic, so each list is already sorted
        Self {
            adjacency,
            edge_count: self.edge_count,
        }
    }

    /// The subgraph induced by `keep`, with vertices renumbered in
    /// increasing original-id order.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> InducedSubgraph {
        let mut original: Vec<Vertex> = keep.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); original.len()];
        let mut edge_count = 0;
        for (i, &v) in original.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if local[w] != usize::MAX {
                    adjacency[i].push(local[w]);
                    edge_count += 1;
                }
            }
        }
        InducedSubgraph {
            graph: DirectedGraph {
                adjacency,
                edge_count,
            },
            original,
        }
    }

    /// Serializes into the edge-list format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertex_count(), self.edge_count)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// An induced subgraph plus the map from its vertex ids back to the parent graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: DirectedGraph,
    /// `original[i]` is the parent-graph id of local vertex `i`.
    pub original: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn to_original(&self, local: Vertex) -> Vertex {
        self.original[local]
    }

    pub fn path_to_original(&self, path: &PathWitness) -> PathWitness {
        PathWitness::new(path.vertices().iter().map(|&v| self.original[v]).collect())
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: empty input, expected header `n m`")]
    MissingHeader { line: usize },
    #[error("line {line}: expected two whitespace-separated integers, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: negative count or vertex id {value}")]
    Negative { line: usize, value: i64 },
    #[error("line {line}: vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: header declares {expected} edges but {found} were given")]
    EdgeCountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
}

/// A parsed graph and the normalization that was applied to it.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: DirectedGraph,
    pub normalization: Normalization,
}

fn parse_pair(line_no: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError::Malformed {
        line: line_no,
        text: text.to_string(),
    };
    let mut tokens = text.split_whitespace();
    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(malformed());
    };
    let a: i64 = a.parse().map_err(|_| malformed())?;
    let b: i64 = b.parse().map_err(|_| malformed())?;
    for value in [a, b] {
        if value < 0 {
            return Err(ParseError::Negative {
                line: line_no,
                value,
            });
        }
    }
    Ok((a as usize, b as usize))
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Lines starting with `#` and blank lines are ignored. Self-loops and
/// duplicate edges are dropped and counted.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::MissingHeader {
            line: text.lines().count().max(1),
        });
    };
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                line: line_no,
                expected: m,
                found: m + 1,
            });
        }
        let (u, v) = parse_pair(line_no, line)?;
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::VertexOutOfRange {
                    line: line_no,
                    id,
                    n,
                });
            }
        }
        edges.push((u, v));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            expected: m,
            found: edges.len(),
        });
    }

    let (graph, normalization) =
        DirectedGraph::from_edges(n, edges).expect("ids validated while parsing");
    Ok(ParsedGraph {
        graph,
        normalization,
    })
}

// ---------------------------------------------------------------------------
// Witnesses

/// A simple path, listed vertex by vertex. Its length is the vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness(Vec<Vertex>);

/// A simple cycle `v_1 -> ... -> v_t -> v_1`; the closing edge is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(Vec<Vertex>);

/// Why a witness failed validation.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WitnessDefect {
    #[error("witness is empty")]
    Empty,
    #[error("cycle has {0} vertices, at least 2 are required")]
    TooFewForCycle(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
    #[error("vertex {0} repeats")]
    Repeated(Vertex),
    #[error("missing edge {0} -> {1}")]
    MissingEdge(Vertex, Vertex),
    #[error("witness has {actual} vertices, {required} required")]
    WrongLength { actual: usize, required: usize },
    #[error("witness has {actual} vertices, at least {required} required")]
    TooShort { actual: usize, required: usize },
    #[error("path endpoints are ({0}, {1})")]
    WrongEndpoints(Vertex, Vertex),
}

fn check_distinct_in_range(g: &DirectedGraph, vertices: &[Vertex]) -> Result<(), WitnessDefect> {
    let mut seen = vec![false; g.vertex_count()];
    for &v in vertices {
        if v >= g.vertex_count() {
            return Err(WitnessDefect::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(WitnessDefect::Repeated(v));
        }
    }
    Ok(())
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Checks distinctness and that consecutive vertices are joined by edges.
    pub fn check(&self, g: &DirectedGraph) -> Result<(), WitnessDefect> {
        if self.0.is_empty() {
            return Err(WitnessDefect::Empty);
        }
        check_distinct_in_range(g, &self.0)?;
        for pair in self.0.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(WitnessDefect::MissingEdge(pair[0], pair[1]));
            }
        }
        Ok(())
    }

    /// Full check against a k-path query: simple path from `from` to `to`
    /// on exactly `length` vertices.
    pub fn check_query(
        &self,
        g: &DirectedGraph,
        from: Vertex,
        to: Vertex,
        length: usize,
    ) -> Result<(), WitnessDefect> {
        self.check(g)?;
        if self.len() != length {
            return Err(WitnessDefect::WrongLength {
                actual: self.len(),
                required: length,
            });
        }
        let (first, last) = (self.0[0], self.0[self.0.len() - 1]);
        if (first, last) != (from, to) {
            return Err(WitnessDefect::WrongEndpoints(first, last));
        }
        Ok(())
    }
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The same cycle started at position `offset`.
    pub fn rotated(&self, offset: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let len = v.len();
            v.rotate_left(offset % len);
        }
        Self(v)
    }

    /// Checks that this is a simple cycle of `g` on at least `min_len` vertices.
    pub fn check(&self, g: &DirectedGraph, min_len: usize) -> Result<(), WitnessDefect> {
        if self.0.is_empty() {
            return Err(WitnessDefect::Empty);
        }
        if self.0.len() < 2 {
            return Err(WitnessDefect::TooFewForCycle(self.0.len()));
        }
        check_distinct_in_range(g, &self.0)?;
        let t = self.0.len();
        for i in 0..t {
            let (a, b) = (self.0[i], self.0[(i + 1) % t]);
            if !g.has_edge(a, b) {
                return Err(WitnessDefect::MissingEdge(a, b));
            }
        }
        if t < min_len {
            return Err(WitnessDefect::TooShort {
                actual: t,
                required: min_len,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.len())?;
        for v in &self.0 {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// `true` iff `w` is a simple cycle of `g` with at least `k` vertices.
pub fn validate_cycle(g: &DirectedGraph, w: &CycleWitness, k: usize) -> bool {
    w.check(g, k).is_ok()
}

// ---------------------------------------------------------------------------
// BFS

/// Breadth-first search tree rooted at one vertex, restricted to an allowed
/// vertex set.
#[derive(Clone, Debug)]
pub struct BfsTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    reached: Vec<bool>,
}

impl BfsTree {
    /// Runs BFS from `root` over vertices with `allowed[v] == true`.
    /// `root` itself is always visited.
    pub fn new(g: &DirectedGraph, root: Vertex, allowed: Option<&[bool]>) -> Self {
        Self::run(g, root, allowed, None)
    }

    fn run(
        g: &DirectedGraph,
        root: Vertex,
        allowed: Option<&[bool]>,
        stop: Option<Vertex>,
    ) -> Self {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut reached = vec![false; n];
        let mut queue = VecDeque::new();
        reached[root] = true;
        queue.push_back(root);
        'outer: while let Some(v) = queue.pop_front() {
            for &w in g.out_neighbors(v) {
                if reached[w] || allowed.is_some_and(|a| !a[w]) {
                    continue;
                }
                reached[w] = true;
                parent[w] = Some(v);
                if stop == Some(w) {
                    break 'outer;
                }
                queue.push_back(w);
            }
        }
        Self {
            root,
            parent,
            reached,
        }
    }

    pub fn reaches(&self, v: Vertex) -> bool {
        self.reached[v]
    }

    /// Shortest path from the root to `target`, if reached.
    pub fn path_to(&self, target: Vertex) -> Option<PathWitness> {
        if !self.reached[target] {
            return None;
        }
        let mut path = vec![target];
        let mut cur = target;
        while cur != self.root {
            cur = self.parent[cur].expect("reached vertices have parents");
            path.push(cur);
        }
        path.reverse();
        Some(PathWitness(path))
    }

    /// Number of vertices on the shortest path to `target`.
    pub fn path_len(&self, target: Vertex) -> Option<usize> {
        if !self.reached[target] {
            return None;
        }
        let mut len = 1;
        let mut cur = target;
        while cur != self.root {
            cur = self.parent[cur].expect("reached vertices have parents");
            len += 1;
        }
        Some(len)
    }
}

/// Minimum-vertex-count path from `from` to `to` inside the vertex set
/// `allowed` (both endpoints must be allowed). Ties are broken by expanding
/// lower vertex ids first.
pub fn bfs_path_within(
    g: &DirectedGraph,
    from: Vertex,
    to: Vertex,
    allowed: &[bool],
) -> Option<PathWitness> {
    if !allowed[from] || !allowed[to] {
        return None;
    }
    if from == to {
        return Some(PathWitness(vec![from]));
    }
    BfsTree::run(g, from, Some(allowed), Some(to)).path_to(to)
}

/// Minimum-vertex-count path from `from` to `to` in `g`; the single-vertex
/// path when `from == to`.
pub fn bfs_shortest_path(g: &DirectedGraph, from: Vertex, to: Vertex) -> Option<PathWitness> {
    if from == to {
        return Some(PathWitness(vec![from]));
    }
    BfsTree::run(g, from, None, Some(to)).path_to(to)
}

/// Vertices reachable from `root` (including `root`).
pub fn reachable_from(g: &DirectedGraph, root: Vertex) -> Vec<bool> {
    BfsTree::new(g, root, None).reached
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> DirectedGraph {
        DirectedGraph::cycle(3)
    }

    #[test]
    fn parses_triangle() {
        let parsed = parse_graph("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(parsed.graph, triangle());
        assert_eq!(parsed.normalization, Normalization::default());
    }

    #[test]
    fn drops_self_loop() {
        let parsed = parse_graph("2 1\n0 0").unwrap();
        assert_eq!(parsed.graph.vertex_count(), 2);
        assert_eq!(parsed.graph.edge_count(), 0);
        assert_eq!(parsed.normalization.self_loops_dropped, 1);
    }

    #[test]
    fn drops_duplicates_and_skips_comments() {
        let parsed = parse_graph("# a comment\n3 3\n0 1\n\n# mid\n0 1\n1 2\n").unwrap();
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(parsed.normalization.duplicates_dropped, 1);
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = parse_graph("1 1\n0 5").unwrap_err();
        assert_eq!(
            err,
            ParseError::VertexOutOfRange {
                line: 2,
                id: 5,
                n: 1
            }
        );
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse_graph("3 1\n0 x").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("-3 1\n0 1").unwrap_err(),
            ParseError::Negative { line: 1, value: -3 }
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1").unwrap_err(),
            ParseError::EdgeCountMismatch {
                expected: 2,
                found: 1,
                ..
            }
        ));
        assert!(matches!(
            parse_graph("3 1\n0 1\n1 2").unwrap_err(),
            ParseError::EdgeCountMismatch { line: 3, .. }
        ));
        assert!(matches!(
            parse_graph("3 1\n0 1 2").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("# only\n").unwrap_err(),
            ParseError::MissingHeader { .. }
        ));
    }

    #[test]
    fn induced_subgraph_of_triangle() {
        let sub = triangle().induced_subgraph(&[0, 1]);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(sub.original, vec![0, 1]);
    }

    #[test]
    fn induced_subgraph_identity_and_c5() {
        let c5 = DirectedGraph::cycle(5);
        let all = c5.induced_subgraph(&[4, 3, 2, 1, 0]);
        assert_eq!(all.graph, c5);
        let sub = c5.induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub.graph, DirectedGraph::path(3));
        let empty = c5.induced_subgraph(&[]);
        assert_eq!(empty.graph.vertex_count(), 0);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = DirectedGraph::cycle(5);
        let sub = c5.induced_subgraph(&[2, 3, 4]);
        let p = bfs_shortest_path(&sub.graph, 0, 2).unwrap();
        assert_eq!(sub.path_to_original(&p).vertices(), &[2, 3, 4]);
    }

    #[test]
    fn bfs_on_cycle_and_edgeless() {
        let c5 = DirectedGraph::cycle(5);
        assert_eq!(bfs_shortest_path(&c5, 0, 2).unwrap().vertices(), &[0, 1, 2]);
        assert_eq!(bfs_shortest_path(&c5, 3, 3).unwrap().vertices(), &[3]);
        assert!(bfs_shortest_path(&DirectedGraph::empty(2), 0, 1).is_none());
    }

    #[test]
    fn bfs_prefers_low_ids() {
        let g = DirectedGraph::from_edge_list(4, &[(0, 2), (0, 1), (1, 3), (2, 3)]).unwrap();
        assert_eq!(bfs_shortest_path(&g, 0, 3).unwrap().vertices(), &[0, 1, 3]);
    }

    #[test]
    fn bfs_within_respects_mask() {
        let g = DirectedGraph::from_edge_list(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let allowed = [true, false, true, true];
        assert_eq!(
            bfs_path_within(&g, 0, 3, &allowed).unwrap().vertices(),
            &[0, 2, 3]
        );
        assert!(bfs_path_within(&g, 0, 1, &allowed).is_none());
    }

    #[test]
    fn cycle_validation() {
        let c5 = DirectedGraph::cycle(5);
        assert!(validate_cycle(
            &c5,
            &CycleWitness::new(vec![0, 1, 2, 3, 4]),
            2
        ));
        assert_eq!(
            CycleWitness::new(vec![0, 2, 4]).check(&c5, 2),
            Err(WitnessDefect::MissingEdge(0, 2))
        );
        assert_eq!(
            CycleWitness::new(vec![0, 1, 2]).check(&triangle(), 4),
            Err(WitnessDefect::TooShort {
                actual: 3,
                required: 4
            })
        );
        assert_eq!(
            CycleWitness::new(vec![0]).check(&triangle(), 1),
            Err(WitnessDefect::TooFewForCycle(1))
        );
        assert_eq!(
            CycleWitness::new(vec![0, 1, 0]).check(&c5, 2),
            Err(WitnessDefect::Repeated(0))
        );
    }

    #[test]
    fn path_query_validation() {
        let g = DirectedGraph::path(3);
        let p = PathWitness::new(vec![0, 1, 2]);
        assert!(p.check_query(&g, 0, 2, 3).is_ok());
        assert!(matches!(
            p.check_query(&g, 0, 2, 2),
            Err(WitnessDefect::WrongLength { .. })
        ));
        assert!(matches!(
            p.check_query(&g, 1, 2, 3),
            Err(WitnessDefect::WrongEndpoints(0, 2))
        ));
    }

    #[test]
    fn display_round_trips() {
        let g = DirectedGraph::complete(4);
        let again = parse_graph(&g.to_edge_list()).unwrap().graph;
        assert_eq!(g, again);
    }
}
