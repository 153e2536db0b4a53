//! Vertex bipartitions `(L, R)`: single random draws, and deterministic
//! sequences derived from `(n, t)`-universal sets.
//!
//! A family of functions `f: {0..n} -> {0, 1}` is `(n, t)`-universal when
//! for every index set `I` of size `t` and every 0/1 assignment to `I`, some
//! member agrees with that assignment on all of `I`. Each member `f` yields
//! the partition `L = {v : f(v) = 0}`, `R = V \ L`.

use std::fmt::Write as _;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Vertex;

/// Default cap on `t` for universal-set construction.
pub const DEFAULT_UNIVERSAL_CAP: usize = 12;
/// Upper bound on `C(n, t) * 2^t` for both construction and verification.
pub const DEFAULT_CONSTRAINT_BUDGET: u64 = 1 << 26;

const CANDIDATES_PER_ROUND: usize = 24;
const CONSTRUCTION_SEED: u64 = 0x756e_6976_6572_7361;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("universal set parameters need 1 <= t <= n, got n = {n}, t = {t}")]
    InvalidParameters { n: usize, t: usize },
    #[error("universal set with t = {t} exceeds the configured cap {cap}")]
    TCapExceeded { t: usize, cap: usize },
    #[error("(n = {n}, t = {t}) has {constraints} constraints, over the budget of {budget}")]
    BudgetExceeded {
        n: usize,
        t: usize,
        constraints: u64,
        budget: u64,
    },
    #[error("family is over {family_n} indices but the graph has {n} vertices")]
    DimensionMismatch { family_n: usize, n: usize },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A bipartition of `0..n` into `L` and `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionLR {
    in_left: Vec<bool>,
}

impl PartitionLR {
    pub fn from_left_mask(in_left: Vec<bool>) -> Self {
        Self { in_left }
    }

    /// Partition with exactly `left` on the L side.
    pub fn from_left_set(n: usize, left: &[Vertex]) -> Self {
        let mut in_left = vec![false; n];
        for &v in left {
            in_left[v] = true;
        }
        Self { in_left }
    }

    pub fn vertex_count(&self) -> usize {
        self.in_left.len()
    }

    pub fn is_left(&self, v: Vertex) -> bool {
        self.in_left[v]
    }

    pub fn left_mask(&self) -> &[bool] {
        &self.in_left
    }

    pub fn left(&self) -> Vec<Vertex> {
        (0..self.in_left.len())
            .filter(|&v| self.in_left[v])
            .collect()
    }

    pub fn right(&self) -> Vec<Vertex> {
        (0..self.in_left.len())
            .filter(|&v| !self.in_left[v])
            .collect()
    }

    /// Whether every vertex of `left` is in L and every vertex of `right` in R.
    pub fn realizes(&self, left: &[Vertex], right: &[Vertex]) -> bool {
        left.iter().all(|&v| self.in_left[v]) && right.iter().all(|&v| !self.in_left[v])
    }
}

/// Puts each vertex in L independently with probability 1/2.
pub fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PartitionLR {
    PartitionLR {
        in_left: (0..n).map(|_| rng.gen_bool(0.5)).collect(),
    }
}

/// A family of binary functions on `0..n`, meant to be `(n, t)`-universal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalSetFamily {
    n: usize,
    t: usize,
    functions: Vec<Vec<bool>>,
}

/// Result of checking a family against the universality definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Universal,
    /// First uncovered constraint in lexicographic order; indices are 0-based
    /// and `pattern[i]` is the required value at `indices[i]`.
    Violated {
        indices: Vec<usize>,
        pattern: Vec<bool>,
    },
}

impl Verification {
    pub fn is_universal(&self) -> bool {
        matches!(self, Verification::Universal)
    }
}

fn binomial(n: usize, t: usize) -> u64 {
    if t > n {
        return 0;
    }
    let t = t.min(n - t);
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}

/// `C(n, t) * 2^t`, saturating.
pub fn constraint_count(n: usize, t: usize) -> u64 {
    let patterns = if t >= 64 { u64::MAX } else { 1u64 << t };
    binomial(n, t).saturating_mul(patterns)
}

fn check_budget(n: usize, t: usize, budget: u64) -> Result<(), PartitionError> {
    let constraints = constraint_count(n, t);
    if constraints > budget {
        return Err(PartitionError::BudgetExceeded {
            n,
            t,
            constraints,
            budget,
        });
    }
    Ok(())
}

/// Index of the pattern `f|I` with the first index as the most significant bit.
fn pattern_index(f: &[bool], indices: &[usize]) -> usize {
    indices
        .iter()
        .fold(0, |acc, &i| (acc << 1) | usize::from(f[i]))
}

fn pattern_bits(index: usize, t: usize) -> Vec<bool> {
    (0..t).map(|i| index >> (t - 1 - i) & 1 == 1).collect()
}

/// Which patterns of each `t`-subset are matched so far.
struct Coverage {
    subsets: Vec<Vec<usize>>,
    words: usize,
    covered: Vec<u64>,
    uncovered: u64,
}

impl Coverage {
    fn new(n: usize, t: usize) -> Self {
        let subsets: Vec<Vec<usize>> = (0..n).combinations(t).collect();
        let patterns = 1usize << t;
        let words = patterns.div_ceil(64);
        Self {
            uncovered: subsets.len() as u64 * patterns as u64,
            covered: vec![0; subsets.len() * words],
            subsets,
            words,
        }
    }

    fn is_covered(&self, s: usize, p: usize) -> bool {
        self.covered[s * self.words + p / 64] >> (p % 64) & 1 == 1
    }

    fn gain(&self, f: &[bool]) -> u64 {
        self.subsets
            .iter()
            .enumerate()
            .filter(|(s, idx)| !self.is_covered(*s, pattern_index(f, idx)))
            .count() as u64
    }

    fn add(&mut self, f: &[bool]) {
        for s in 0..self.subsets.len() {
            let p = pattern_index(f, &self.subsets[s]);
            let slot = &mut self.covered[s * self.words + p / 64];
            if *slot >> (p % 64) & 1 == 0 {
                *slot |= 1 << (p % 64);
                self.uncovered -= 1;
            }
        }
    }

    /// First uncovered (subset, pattern) at or after subset `from`.
    fn first_uncovered(&self, from: usize) -> Option<(usize, usize)> {
        let patterns = 1usize << self.subsets.first().map_or(0, Vec::len);
        (from..self.subsets.len()).find_map(|s| {
            (0..self.words).find_map(|w| {
                let mut free = !self.covered[s * self.words + w];
                if w == self.words - 1 && !patterns.is_multiple_of(64) {
                    free &= (1u64 << (patterns % 64)) - 1;
                }
                (free != 0).then(|| (s, w * 64 + free.trailing_zeros() as usize))
            })
        })
    }
}

/// Builds an `(n, t)`-universal family greedily.
///
/// Each round takes the first still-unmatched constraint `(I, f')`, draws
/// random candidate vectors that agree with `f'` on `I`, improves the best
/// one by single-bit flips, and keeps it. Every round matches at least one
/// new constraint, so the loop ends with a universal family. The
/// construction is deterministic for a given `(n, t)`.
pub fn build_universal_set(
    n: usize,
    t: usize,
    cap: usize,
) -> Result<UniversalSetFamily, PartitionError> {
    if t == 0 || t > n {
        return Err(PartitionError::InvalidParameters { n, t });
    }
    if t > cap {
        return Err(PartitionError::TCapExceeded { t, cap });
    }
    check_budget(n, t, DEFAULT_CONSTRAINT_BUDGET)?;

    let mut rng = ChaCha8Rng::seed_from_u64(CONSTRUCTION_SEED ^ ((n as u64) << 32) ^ t as u64);
    let mut coverage = Coverage::new(n, t);
    let mut functions = Vec::new();
    let mut cursor = 0;

    while coverage.uncovered > 0 {
        let (s, p) = coverage
            .first_uncovered(cursor)
            .expect("uncovered count is positive");
        cursor = s;
        let target_indices = coverage.subsets[s].clone();
        let target = pattern_bits(p, t);
        let mut pinned = vec![false; n];
        for &i in &target_indices {
            pinned[i] = true;
        }

        let mut best: Option<(u64, Vec<bool>)> = None;
        for _ in 0..CANDIDATES_PER_ROUND {
            let mut f: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            for (&i, &b) in target_indices.iter().zip(&target) {
                f[i] = b;
            }
            let score = coverage.gain(&f);
            if best.as_ref().is_none_or(|(s, _)| score > *s) {
                best = Some((score, f));
            }
        }
        let (mut score, mut f) = best.expect("at least one candidate");
        for i in (0..n).filter(|&i| !pinned[i]) {
            f[i] = !f[i];
            let flipped = coverage.gain(&f);
            if flipped > score {
                score = flipped;
            } else {
                f[i] = !f[i];
            }
        }
        coverage.add(&f);
        functions.push(f);
    }

    Ok(UniversalSetFamily { n, t, functions })
}

impl UniversalSetFamily {
    /// Wraps explicit rows. Every row must have length `n`.
    pub fn from_functions(
        n: usize,
        t: usize,
        functions: Vec<Vec<bool>>,
    ) -> Result<Self, PartitionError> {
        if let Some(bad) = functions.iter().find(|f| f.len() != n) {
            return Err(PartitionError::DimensionMismatch {
                family_n: bad.len(),
                n,
            });
        }
        Ok(Self { n, t, functions })
    }

    /// All `2^n` functions on `0..n`.
    pub fn complete(n: usize, t: usize) -> Self {
        let functions = (0..1usize << n).map(|p| pattern_bits(p, n)).collect();
        Self { n, t, functions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn functions(&self) -> &[Vec<bool>] {
        &self.functions
    }

    /// The partition of member `i`: `L = {v : f(v) = 0}`.
    pub fn partition(&self, i: usize) -> PartitionLR {
        PartitionLR {
            in_left: self.functions[i].iter().map(|&b| !b).collect(),
        }
    }

    /// Text form: a `# universal-set n=.. t=..` comment, then one 0/1 row per function.
    pub fn to_text(&self) -> String {
        let mut out = format!("# universal-set n={} t={}\n", self.n, self.t);
        for f in &self.functions {
            for &b in f {
                out.push(if b { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. `t` comes from the header
    /// comment when present, otherwise from `t_hint`.
    pub fn parse(text: &str, t_hint: Option<usize>) -> Result<Self, PartitionError> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows = Vec::new();
        let mut last_line = 0;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(rest) = comment.trim().strip_prefix("universal-set") {
                    header = Some(parse_header(line_no, rest)?);
                }
                continue;
            }
            let row = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(PartitionError::Format {
                        line: line_no,
                        message: format!("unexpected character {other:?}"),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(PartitionError::Format {
                        line: line_no,
                        message: format!("row has {} entries, expected {first}", row.len()),
                    });
                }
            }
            rows.push(row);
        }
        let n = header
            .map(|(n, _)| n)
            .or_else(|| rows.first().map(Vec::len))
            .unwrap_or(0);
        let t = header
            .map(|(_, t)| t)
            .or(t_hint)
            .ok_or(PartitionError::Format {
                line: last_line,
                message: "no `# universal-set n=.. t=..` header and no t given".into(),
            })?;
        Self::from_functions(n, t, rows)
    }
}

fn parse_header(line: usize, rest: &str) -> Result<(usize, usize), PartitionError> {
    let mut n = None;
    let mut t = None;
    for token in rest.split_whitespace() {
        let value = |v: &str| {
            v.parse::<usize>().map_err(|_| PartitionError::Format {
                line,
                message: format!("bad header value {token:?}"),
            })
        };
        if let Some(v) = token.strip_prefix("n=") {
            n = Some(value(v)?);
        } else if let Some(v) = token.strip_prefix("t=") {
            t = Some(value(v)?);
        }
    }
    match (n, t) {
        (Some(n), Some(t)) => Ok((n, t)),
        _ => Err(PartitionError::Format {
            line,
            message: "header needs n= and t=".into(),
        }),
    }
}

/// Checks every `(I, f')` constraint by brute force. Refuses, rather than
/// answering, when `C(n, t) * 2^t` exceeds `budget`.
pub fn verify_universal(
    fam: &UniversalSetFamily,
    budget: u64,
) -> Result<Verification, PartitionError> {
    let (n, t) = (fam.n, fam.t);
    if t == 0 || t > n {
        return Err(PartitionError::InvalidParameters { n, t });
    }
    check_budget(n, t, budget)?;
    let patterns = 1usize << t;
    let mut seen = vec![false; patterns];
    for indices in (0..n).combinations(t) {
        seen.fill(false);
        for f in &fam.functions {
            seen[pattern_index(f, &indices)] = true;
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Ok(Verification::Violated {
                indices,
                pattern: pattern_bits(p, t),
            });
        }
    }
    Ok(Verification::Universal)
}

/// One partition per family member, in family order.
pub fn partitions_from_family(
    fam: &UniversalSetFamily,
    n: usize,
) -> Result<Vec<PartitionLR>, PartitionError> {
    if fam.n != n {
        return Err(PartitionError::DimensionMismatch { family_n: fam.n, n });
    }
    Ok((0..fam.len()).map(|i| fam.partition(i)).collect())
}

impl std::fmt::Display for Verification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verification::Universal => f.write_str("UNIVERSAL"),
            Verification::Violated { indices, pattern } => {
                let mut s = String::from("VIOLATED");
                for i in indices {
                    let _ = write!(s, " {i}");
                }
                s.push_str(" :");
                for &b in pattern {
                    s.push_str(if b { " 1" } else { " 0" });
                }
                f.write_str(&s)
            }
        }
    }
}
