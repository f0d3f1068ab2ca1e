//! Branch-and-bound driver: heuristic lower bound, degree peeling, binary
//! branching, and bound-based pruning.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::bitset::VertexSet;
use crate::bounds::BoundKind;
use crate::graph::{degeneracy_order, induced_subgraph, Graph};
use crate::kplex::SearchState;
use crate::oracle::max_extension_bruteforce;

/// How often the stop condition is polled, in nodes.
const STOP_CHECK_INTERVAL: u64 = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// `k` must be at least 1.
    InvalidK,
    /// Instance exceeds the exhaustive-check guard.
    GraphTooLarge { n: usize, limit: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::InvalidK => write!(f, "k must be >= 1"),
            SolveError::GraphTooLarge { n, limit } => {
                write!(f, "graph has {n} vertices, check accepts at most {limit}")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// Outcome of one solve.
#[derive(Clone, Debug)]
pub struct SolveReport {
    /// Best k-plex found, in original vertex ids.
    pub best: Vec<u32>,
    pub size: usize,
    /// True when the search space was exhausted; the size is then the exact
    /// maximum.
    pub optimal: bool,
    /// Branch-and-bound tree nodes visited.
    pub nodes: u64,
    pub bound_calls: u64,
    /// Seesaw rounds won by each extraction family, summed over all bound
    /// calls; zero for non-seesaw bounds.
    pub color_wins: u64,
    pub partition_wins: u64,
    /// Wall-clock time; zero unless a timed entry point filled it.
    pub elapsed: Duration,
}

/// Greedy k-plex used to seed the lower bound: every vertex is tried as a
/// start (in reverse degeneracy order), each start grows by repeatedly
/// adding the vertex with the most neighbors in the current set among those
/// that keep it a k-plex, ties by smallest id.
pub fn heuristic_lb(g: &Graph, k: u32) -> Vec<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let (order, _) = degeneracy_order(g);
    let mut best: Vec<u32> = Vec::new();
    let mut cnt = vec![0u32; n]; // neighbors in the growing set
    let mut delta = vec![0u32; n]; // non-neighbor counts, members only
    let mut saturated = VertexSet::new(n);
    let mut members = VertexSet::new(n);

    for &start in order.iter().rev() {
        let mut grown: Vec<u32> = vec![start];
        members.insert(start);
        delta[start as usize] = 1;
        if k == 1 {
            saturated.insert(start);
        }
        let mut touched: Vec<u32> = vec![start];
        for w in g.neighbors(start).iter() {
            cnt[w as usize] += 1;
            touched.push(w);
        }

        loop {
            // Most adjacent feasible candidate; ties broken by id order of
            // the scan.
            let mut pick: Option<(u32, u32)> = None; // (cnt, vertex)
            for v in 0..n as u32 {
                if members.contains(v) {
                    continue;
                }
                let dv = grown.len() as u32 - cnt[v as usize] + 1;
                if dv > k || !saturated.is_subset(g.neighbors(v)) {
                    continue;
                }
                if pick.is_none_or(|(c, _)| cnt[v as usize] > c) {
                    pick = Some((cnt[v as usize], v));
                }
            }
            let Some((_, v)) = pick else { break };
            delta[v as usize] = grown.len() as u32 - cnt[v as usize] + 1;
            for &u in &grown {
                if !g.has_edge(u, v) {
                    delta[u as usize] += 1;
                    if delta[u as usize] == k {
                        saturated.insert(u);
                    }
                }
            }
            if delta[v as usize] == k {
                saturated.insert(v);
            }
            members.insert(v);
            grown.push(v);
            for w in g.neighbors(v).iter() {
                cnt[w as usize] += 1;
                touched.push(w);
            }
        }

        if grown.len() > best.len() {
            best = grown.clone();
        }
        // reset scratch
        for &v in &touched {
            cnt[v as usize] = 0;
        }
        for &v in &grown {
            members.remove(v);
            delta[v as usize] = 0;
        }
        saturated.clear();
    }
    best
}

/// Iteratively removes every vertex whose degree proves it cannot lie in a
/// k-plex larger than `lb` (a k-plex of size `lb + 1` containing `v` needs
/// `deg(v) >= lb + 1 - k`). Returns the survivors.
pub fn peel(g: &Graph, k: u32, lb: usize) -> VertexSet {
    let n = g.vertex_count();
    let mut alive = VertexSet::full(n);
    let mut deg: Vec<usize> = (0..n as u32).map(|v| g.degree(v) as usize).collect();
    let mut queue: Vec<u32> = (0..n as u32)
        .filter(|&v| deg[v as usize] + k as usize <= lb)
        .collect();
    for &v in &queue {
        alive.remove(v);
    }
    while let Some(v) = queue.pop() {
        for w in g.neighbors(v).iter() {
            if alive.contains(w) {
                deg[w as usize] -= 1;
                if deg[w as usize] + (k as usize) <= lb {
                    alive.remove(w);
                    queue.push(w);
                }
            }
        }
    }
    alive
}

/// Per-node observer used by [`omega_upper_check`]; receives the node state
/// and the bound value just computed for it.
type NodeHook<'h> = &'h mut dyn FnMut(&SearchState<'_>, usize);

struct Search<'h, 'g, F: FnMut() -> bool> {
    st: SearchState<'g>,
    kind: BoundKind,
    lb: usize,
    best: Option<Vec<u32>>,
    nodes: u64,
    bound_calls: u64,
    color_wins: u64,
    partition_wins: u64,
    stop: F,
    stopped: bool,
    hook: Option<NodeHook<'h>>,
}

impl<F: FnMut() -> bool> Search<'_, '_, F> {
    fn node(&mut self) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(STOP_CHECK_INTERVAL) && (self.stop)() {
            self.stopped = true;
        }
        if self.stopped {
            return;
        }
        let removed = self.st.filter_candidates();
        self.node_body();
        self.st.restore_candidates(&removed);
    }

    fn node_body(&mut self) {
        let s_len = self.st.members().len();
        if s_len > self.lb {
            self.lb = s_len;
            self.best = Some(self.st.members().to_vec());
        }
        if s_len + self.st.candidates().count() <= self.lb {
            return;
        }
        let bound = self.kind.evaluate(&self.st);
        self.bound_calls += 1;
        self.color_wins += bound.color_wins;
        self.partition_wins += bound.partition_wins;
        if let Some(hook) = self.hook.as_mut() {
            hook(&self.st, bound.value);
        }
        if bound.value <= self.lb {
            return;
        }
        let v = self.pick_branch();
        let undo = self.st.add(v);
        self.node();
        self.st.undo_add(undo);
        if self.stopped {
            return;
        }
        self.st.remove_candidate(v);
        self.node();
        self.st.restore_candidate(v);
    }

    /// Most constrained candidate first: maximum non-neighbor count (that
    /// is, minimum slack), ties by fewest candidate neighbors, then id.
    fn pick_branch(&self) -> u32 {
        let cand = self.st.candidates();
        let mut pick: Option<(u32, usize, u32)> = None;
        for v in cand.iter() {
            let d = self.st.delta(v);
            let adj_in_c = self.st.graph().neighbors(v).intersection_count(cand);
            let better = match pick {
                None => true,
                Some((bd, bc, _)) => d > bd || (d == bd && adj_in_c < bc),
            };
            if better {
                pick = Some((d, adj_in_c, v));
            }
        }
        pick.expect("branching on empty candidate set").2
    }
}

fn solve_inner<F: FnMut() -> bool>(
    g: &Graph,
    k: u32,
    kind: BoundKind,
    stop: F,
    hook: Option<NodeHook<'_>>,
) -> Result<SolveReport, SolveError> {
    if k < 1 {
        return Err(SolveError::InvalidK);
    }
    let seed = heuristic_lb(g, k);
    let lb = seed.len();
    let survivors = peel(g, k, lb);
    let (reduced, map) = induced_subgraph(g, &survivors);

    let mut search = Search {
        st: SearchState::root(&reduced, k),
        kind,
        lb,
        best: None,
        nodes: 0,
        bound_calls: 0,
        color_wins: 0,
        partition_wins: 0,
        stop,
        stopped: false,
        hook,
    };
    search.node();

    let best = match search.best {
        Some(local) => local.iter().map(|&v| map[v as usize]).collect(),
        None => seed,
    };
    Ok(SolveReport {
        size: best.len(),
        best,
        optimal: !search.stopped,
        nodes: search.nodes,
        bound_calls: search.bound_calls,
        color_wins: search.color_wins,
        partition_wins: search.partition_wins,
        elapsed: Duration::ZERO,
    })
}

/// Exact solve with an arbitrary stop condition, polled every
/// `STOP_CHECK_INTERVAL` nodes. When the condition fires the best k-plex
/// found so far is returned with `optimal = false`. `elapsed` is left at
/// zero; use [`solve`] for wall-clock accounting.
pub fn solve_with_stop(
    g: &Graph,
    k: u32,
    kind: BoundKind,
    stop: impl FnMut() -> bool,
) -> Result<SolveReport, SolveError> {
    solve_inner(g, k, kind, stop, None)
}

/// Exact solve with a wall-clock cutoff.
#[cfg(feature = "std")]
pub fn solve(
    g: &Graph,
    k: u32,
    kind: BoundKind,
    cutoff: Duration,
) -> Result<SolveReport, SolveError> {
    let start = std::time::Instant::now();
    let mut report = solve_inner(g, k, kind, || start.elapsed() >= cutoff, None)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Largest instance [`omega_upper_check`] accepts.
pub const MAX_CHECK_VERTICES: usize = 16;

/// Soundness harness: runs a full solve and, at up to `samples` nodes,
/// exhaustively computes the true maximum extension of the node's partial
/// k-plex and checks the bound never undercuts it. Returns true when every
/// sampled node passes.
pub fn omega_upper_check(
    g: &Graph,
    k: u32,
    kind: BoundKind,
    samples: u32,
) -> Result<bool, SolveError> {
    let n = g.vertex_count();
    if n > MAX_CHECK_VERTICES {
        return Err(SolveError::GraphTooLarge {
            n,
            limit: MAX_CHECK_VERTICES,
        });
    }
    if k < 1 {
        return Err(SolveError::InvalidK);
    }
    let mut taken = 0u32;
    let mut all_sound = true;
    let mut hook = |st: &SearchState<'_>, bound: usize| {
        if taken >= samples {
            return;
        }
        taken += 1;
        let cand = st.candidates().to_vec();
        let truth = max_extension_bruteforce(st.graph(), k, st.members(), &cand)
            .expect("exhaustive check within guards");
        if bound < truth {
            all_sound = false;
        }
    };
    solve_inner(g, k, kind, || false, Some(&mut hook))?;
    Ok(all_sound)
}
