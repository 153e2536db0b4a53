//! The long-directed-cycle solver.
//!
//! 1. Short-cycle scan: for every `l` in `k..=2k` and every edge `(u, v)`,
//!    ask the k-path backend for a `v -> u` path on exactly `l` vertices.
//!    A hit closes into an `l`-vertex cycle.
//! 2. Otherwise, run [`poly_alg`] over a sequence of `(L, R)` partitions:
//!    all members of a `(n, 2k)`-universal family (deterministic mode), or
//!    `ceil(c * 4^k)` independent random splits (randomized mode).
//!
//! Every yes-answer carries a cycle witness.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CycleWitness, DirectedGraph, Vertex, WitnessDefect};
use crate::kpath::{
    self, extract_path_witness, BackendKind, ColorCoding, KPathBackend, KPathError, KPathQuery,
    KPathSolver, Repetitions, SubsetDp,
};
use crate::partitioning::{
    self, build_universal_set, random_partition, PartitionError, UniversalSetFamily,
};
use crate::polyalg::{poly_alg, PolyAlgError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Det,
    Rand,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Det => "det",
            Mode::Rand => "rand",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub mode: Mode,
    pub seed: u64,
    /// `c` in the randomized trial count `ceil(c * 4^k)`.
    pub amplification: f64,
    /// k-path backend; `None` picks subset DP in det mode, color coding in rand mode.
    pub kpath: Option<BackendKind>,
    /// `c` in the color-coding repetition count `ceil(c * e^l)`.
    pub repetition_constant: f64,
    pub subset_dp_cap: usize,
    pub universal_cap: usize,
    pub extraction_attempts: u32,
}

impl SolverConfig {
    pub fn deterministic() -> Self {
        Self {
            mode: Mode::Det,
            seed: 0,
            amplification: 10.0,
            kpath: None,
            repetition_constant: kpath::DEFAULT_REPETITION_CONSTANT,
            subset_dp_cap: kpath::DEFAULT_SUBSET_DP_CAP,
            universal_cap: partitioning::DEFAULT_UNIVERSAL_CAP,
            extraction_attempts: kpath::DEFAULT_EXTRACTION_ATTEMPTS,
        }
    }

    pub fn randomized(seed: u64) -> Self {
        Self {
            mode: Mode::Rand,
            seed,
            ..Self::deterministic()
        }
    }

    pub fn backend_kind(&self) -> BackendKind {
        self.kpath.unwrap_or(match self.mode {
            Mode::Det => BackendKind::SubsetDp,
            Mode::Rand => BackendKind::ColorCoding,
        })
    }

    /// Backend choice that does not match the mode's default.
    pub fn is_mixed(&self) -> bool {
        !matches!(
            (self.mode, self.backend_kind()),
            (Mode::Det, BackendKind::SubsetDp) | (Mode::Rand, BackendKind::ColorCoding)
        )
    }

    /// Number of random partitions tried in rand mode.
    pub fn random_trials(&self, k: usize) -> u64 {
        (self.amplification * 4f64.powi(k as i32)).ceil() as u64
    }

    pub fn validate(&self) -> Result<(), LdcError> {
        let bad = |what: &str| Err(LdcError::InvalidConfig(what.to_string()));
        if !(self.amplification > 0.0 && self.amplification.is_finite()) {
            return bad("amplification must be positive");
        }
        if !(self.repetition_constant > 0.0 && self.repetition_constant.is_finite()) {
            return bad("repetition constant must be positive");
        }
        if self.subset_dp_cap == 0 || self.universal_cap == 0 {
            return bad("caps must be positive");
        }
        if self.extraction_attempts == 0 {
            return bad("extraction attempts must be positive");
        }
        Ok(())
    }

    fn build_backend(&self) -> KPathBackend {
        match self.backend_kind() {
            BackendKind::SubsetDp => KPathBackend::SubsetDp(SubsetDp::new(self.subset_dp_cap)),
            BackendKind::ColorCoding => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(1);
                KPathBackend::ColorCoding(ColorCoding::with_rng(
                    Repetitions::Scaled(self.repetition_constant),
                    rng,
                ))
            }
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::deterministic()
    }
}

#[derive(Debug, Error)]
pub enum LdcError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("k-path backend {backend} failed in {mode} mode: {source}")]
    KPath {
        mode: Mode,
        backend: BackendKind,
        #[source]
        source: KPathError,
    },
    #[error("partition family unavailable in {mode} mode: {source}")]
    Partition {
        mode: Mode,
        #[source]
        source: PartitionError,
    },
    #[error(transparent)]
    PolyAlg(#[from] PolyAlgError),
    #[error("internal error: produced witness {witness} does not validate: {defect}")]
    InvalidWitness {
        witness: CycleWitness,
        defect: WitnessDefect,
    },
}

impl LdcError {
    /// Resource limits rather than misuse or bugs.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            LdcError::KPath {
                source: KPathError::TooManyVertices { .. } | KPathError::PathTooLong { .. },
                ..
            } | LdcError::Partition {
                source: PartitionError::TCapExceeded { .. } | PartitionError::BudgetExceeded { .. },
                ..
            }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
}

/// Which stage produced the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "kebab-case")]
pub enum Provenance {
    ShortScan {
        length: usize,
        edge: (Vertex, Vertex),
    },
    Polyalg {
        partition_index: u64,
        pair: (Vertex, Vertex),
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub kpath_calls: u64,
    pub partitions_tried: u64,
    pub bfs_runs: u64,
    /// Size of the universal family used in det mode.
    pub family_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LdcAnswer {
    pub decision: Decision,
    pub k: usize,
    pub mode: Mode,
    pub backend: BackendKind,
    pub mixed_backend: bool,
    pub witness: Option<CycleWitness>,
    pub provenance: Option<Provenance>,
    pub counters: Counters,
}

impl LdcAnswer {
    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

/// `YES t v_1 .. v_t` or `NO`.
impl fmt::Display for LdcAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) if self.is_yes() => write!(f, "YES {w}"),
            _ => f.write_str("NO"),
        }
    }
}

/// Wraps a backend and counts decisions.
struct Counting<'a> {
    inner: &'a mut dyn KPathSolver,
    calls: u64,
}

impl KPathSolver for Counting<'_> {
    fn decide(&mut self, g: &DirectedGraph, q: &KPathQuery) -> Result<bool, KPathError> {
        self.calls += 1;
        self.inner.decide(g, q)
    }

    fn is_exact(&self) -> bool {
        self.inner.is_exact()
    }

    fn kind(&self) -> BackendKind {
        self.inner.kind()
    }
}

/// A cycle on `length` vertices found by the short-cycle scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanHit {
    pub witness: CycleWitness,
    pub length: usize,
    pub edge: (Vertex, Vertex),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanOutcome {
    pub hit: Option<ScanHit>,
    pub kpath_calls: u64,
}

/// Looks for a cycle on `l` vertices for `l = k..=2k`, in that order,
/// trying edges `(u, v)` lexicographically and asking for a `v -> u` path.
pub fn short_cycle_scan(
    g: &DirectedGraph,
    k: usize,
    backend: &mut dyn KPathSolver,
    extraction_attempts: u32,
) -> Result<ScanOutcome, KPathError> {
    let mut counting = Counting {
        inner: backend,
        calls: 0,
    };
    let edges: Vec<_> = g.edges().collect();
    let max_len = (2 * k).min(g.vertex_count());
    for length in k..=max_len {
        for &(u, v) in &edges {
            let q = KPathQuery::new(v, u, length);
            if let Some(path) = extract_path_witness(&mut counting, g, &q, extraction_attempts)? {
                return Ok(ScanOutcome {
                    hit: Some(ScanHit {
                        witness: CycleWitness::new(path.into_vertices()),
                        length,
                        edge: (u, v),
                    }),
                    kpath_calls: counting.calls,
                });
            }
        }
    }
    Ok(ScanOutcome {
        hit: None,
        kpath_calls: counting.calls,
    })
}

/// Solver with a cache of universal families keyed by `(n, t)`.
#[derive(Debug)]
pub struct Solver {
    cfg: SolverConfig,
    families: HashMap<(usize, usize), Arc<UniversalSetFamily>>,
}

impl Solver {
    pub fn new(cfg: SolverConfig) -> Result<Self, LdcError> {
        cfg.validate()?;
        Ok(Self {
            cfg,
            families: HashMap::new(),
        })
    }

    pub fn config(&self) -> &SolverConfig {
        &self.cfg
    }

    /// The universal family for `(n, t)`, built on first use.
    pub fn family(&mut self, n: usize, t: usize) -> Result<Arc<UniversalSetFamily>, LdcError> {
        if let Some(f) = self.families.get(&(n, t)) {
            return Ok(f.clone());
        }
        let fam = build_universal_set(n, t, self.cfg.universal_cap).map_err(|source| {
            LdcError::Partition {
                mode: self.cfg.mode,
                source,
            }
        })?;
        let fam = Arc::new(fam);
        self.families.insert((n, t), fam.clone());
        Ok(fam)
    }

    /// Solves `(g, k)` with the configured backend.
    pub fn solve(&mut self, g: &DirectedGraph, k: usize) -> Result<LdcAnswer, LdcError> {
        let mut backend = self.cfg.build_backend();
        self.solve_with(g, k, &mut backend)
    }

    /// Solves `(g, k)` with a caller-supplied k-path backend.
    pub fn solve_with(
        &mut self,
        g: &DirectedGraph,
        k: usize,
        backend: &mut dyn KPathSolver,
    ) -> Result<LdcAnswer, LdcError> {
        if k < 2 {
            return Err(LdcError::InvalidK(k));
        }
        let mode = self.cfg.mode;
        let mut answer = LdcAnswer {
            decision: Decision::No,
            k,
            mode,
            backend: backend.kind(),
            mixed_backend: self.cfg.is_mixed(),
            witness: None,
            provenance: None,
            counters: Counters::default(),
        };
        // no simple cycle can have more vertices than the graph
        if k > g.vertex_count() {
            return Ok(answer);
        }

        let kind = backend.kind();
        let scan =
            short_cycle_scan(g, k, backend, self.cfg.extraction_attempts).map_err(|source| {
                LdcError::KPath {
                    mode,
                    backend: kind,
                    source,
                }
            })?;
        answer.counters.kpath_calls = scan.kpath_calls;
        if let Some(hit) = scan.hit {
            answer.decision = Decision::Yes;
            answer.witness = Some(hit.witness);
            answer.provenance = Some(Provenance::ShortScan {
                length: hit.length,
                edge: hit.edge,
            });
            return Ok(answer);
        }

        let n = g.vertex_count();
        match mode {
            Mode::Det => {
                let fam = self.family(n, (2 * k).min(n))?;
                answer.counters.family_size = Some(fam.len());
                for i in 0..fam.len() {
                    let outcome = poly_alg(g, k, &fam.partition(i))?;
                    answer.counters.partitions_tried += 1;
                    answer.counters.bfs_runs += outcome.bfs_runs as u64;
                    if let Some(acc) = outcome.acceptance {
                        accept_polyalg(&mut answer, i as u64, acc);
                        return Ok(answer);
                    }
                }
            }
            Mode::Rand => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
                rng.set_stream(2);
                for i in 0..self.cfg.random_trials(k) {
                    let outcome = poly_alg(g, k, &random_partition(n, &mut rng))?;
                    answer.counters.partitions_tried += 1;
                    answer.counters.bfs_runs += outcome.bfs_runs as u64;
                    if let Some(acc) = outcome.acceptance {
                        accept_polyalg(&mut answer, i, acc);
                        return Ok(answer);
                    }
                }
            }
        }
        Ok(answer)
    }

    /// [`solve`](Self::solve), then re-validates any witness against `g`.
    /// A witness that fails validation becomes an error, never a yes.
    pub fn solve_verified(&mut self, g: &DirectedGraph, k: usize) -> Result<LdcAnswer, LdcError> {
        let answer = self.solve(g, k)?;
        verify_answer(g, answer)
    }
}

fn accept_polyalg(answer: &mut LdcAnswer, index: u64, acc: crate::polyalg::Acceptance) {
    answer.decision = Decision::Yes;
    answer.provenance = Some(Provenance::Polyalg {
        partition_index: index,
        pair: (acc.v, acc.u),
    });
    answer.witness = Some(acc.witness);
}

fn verify_answer(g: &DirectedGraph, answer: LdcAnswer) -> Result<LdcAnswer, LdcError> {
    match (&answer.decision, &answer.witness) {
        (Decision::Yes, Some(w)) => match w.check(g, answer.k) {
            Ok(()) => Ok(answer),
            Err(defect) => Err(LdcError::InvalidWitness {
                witness: w.clone(),
                defect,
            }),
        },
        (Decision::Yes, None) => Err(LdcError::InvalidWitness {
            witness: CycleWitness::new(Vec::new()),
            defect: WitnessDefect::Empty,
        }),
        (Decision::No, _) => Ok(answer),
    }
}

/// One-shot solve.
pub fn ldc_alg(g: &DirectedGraph, k: usize, cfg: &SolverConfig) -> Result<LdcAnswer, LdcError> {
    Solver::new(cfg.clone())?.solve(g, k)
}

/// One-shot solve with witness re-validation.
pub fn answer_with_verification(
    g: &DirectedGraph,
    k: usize,
    cfg: &SolverConfig,
) -> Result<LdcAnswer, LdcError> {
    Solver::new(cfg.clone())?.solve_verified(g, k)
}
