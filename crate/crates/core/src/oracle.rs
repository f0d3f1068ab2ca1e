//! Brute-force reference answers for small instances.
//!
//! Exhaustive include/exclude enumeration with only the trivial
//! `|current| + |remaining| <= best` pruning. Deliberately shares nothing
//! with the bound machinery or the solver, so it can catch their bugs;
//! the only common code is the graph itself and [`is_kplex`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::kplex::is_kplex;

/// Largest whole-graph instance the oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 25;
/// Largest candidate set [`max_extension_bruteforce`] accepts.
pub const MAX_ORACLE_CANDIDATES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    GraphTooLarge { n: usize, limit: usize },
    TooManyCandidates { count: usize, limit: usize },
    SeedNotKplex,
    SeedOverlapsCandidates,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GraphTooLarge { n, limit } => {
                write!(f, "graph has {n} vertices, oracle accepts at most {limit}")
            }
            OracleError::TooManyCandidates { count, limit } => {
                write!(f, "{count} candidates, oracle accepts at most {limit}")
            }
            OracleError::SeedNotKplex => write!(f, "seed set is not a k-plex"),
            OracleError::SeedOverlapsCandidates => write!(f, "seed and candidate sets overlap"),
        }
    }
}

impl core::error::Error for OracleError {}

/// An exhaustively verified maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub size: usize,
    pub witness: Vec<u32>,
}

struct Enumerator<'g> {
    g: &'g Graph,
    k: u32,
    pool: Vec<u32>,
    current: Vec<u32>,
    /// Non-neighbor counts inside `current`, tracked independently of the
    /// solver's state machinery.
    delta: Vec<u32>,
    best_size: usize,
    best: Vec<u32>,
}

impl Enumerator<'_> {
    fn run(&mut self, idx: usize) {
        if self.current.len() + (self.pool.len() - idx) <= self.best_size {
            return;
        }
        if idx == self.pool.len() {
            if self.current.len() > self.best_size {
                self.best_size = self.current.len();
                self.best = self.current.clone();
            }
            return;
        }
        let v = self.pool[idx];
        // Include first, so the first maximum found is the one preferring
        // early pool vertices; only strictly larger sets replace it.
        if self.try_include(v) {
            self.run(idx + 1);
            self.undo_include(v);
        }
        self.run(idx + 1);
    }

    fn try_include(&mut self, v: u32) -> bool {
        let mut dv = 1u32; // v itself
        for &u in &self.current {
            if !self.g.has_edge(u, v) {
                if self.delta[u as usize] + 1 > self.k {
                    return false;
                }
                dv += 1;
            }
        }
        if dv > self.k {
            return false;
        }
        for &u in &self.current {
            if !self.g.has_edge(u, v) {
                self.delta[u as usize] += 1;
            }
        }
        self.delta[v as usize] = dv;
        self.current.push(v);
        true
    }

    fn undo_include(&mut self, v: u32) {
        self.current.pop();
        for &u in &self.current {
            if !self.g.has_edge(u, v) {
                self.delta[u as usize] -= 1;
            }
        }
    }
}

/// Exact maximum k-plex of the whole graph by exhaustive enumeration.
pub fn max_kplex_bruteforce(g: &Graph, k: u32) -> Result<OracleResult, OracleError> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::GraphTooLarge {
            n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let mut e = Enumerator {
        g,
        k,
        pool: (0..n as u32).collect(),
        current: Vec::new(),
        delta: vec![0; n],
        best_size: 0,
        best: Vec::new(),
    };
    e.run(0);
    debug_assert!(is_kplex(g, &e.best, k));
    Ok(OracleResult {
        size: e.best_size,
        witness: e.best,
    })
}

/// Size of the largest k-plex containing all of `seed` and otherwise drawing
/// only from `cand`, i.e. `|seed|` plus the most candidates that can join.
pub fn max_extension_bruteforce(
    g: &Graph,
    k: u32,
    seed: &[u32],
    cand: &[u32],
) -> Result<usize, OracleError> {
    if cand.len() > MAX_ORACLE_CANDIDATES {
        return Err(OracleError::TooManyCandidates {
            count: cand.len(),
            limit: MAX_ORACLE_CANDIDATES,
        });
    }
    if !is_kplex(g, seed, k) {
        return Err(OracleError::SeedNotKplex);
    }
    if cand.iter().any(|v| seed.contains(v)) {
        return Err(OracleError::SeedOverlapsCandidates);
    }
    let n = g.vertex_count();
    let mut delta = vec![0u32; n];
    for &v in seed {
        // counts v itself: has_edge(v, v) is always false
        delta[v as usize] = seed.iter().filter(|&&u| !g.has_edge(u, v)).count() as u32;
    }
    let mut e = Enumerator {
        g,
        k,
        pool: cand.to_vec(),
        current: seed.to_vec(),
        delta,
        best_size: seed.len(),
        best: seed.to_vec(),
    };
    e.run(0);
    Ok(e.best_size)
}
