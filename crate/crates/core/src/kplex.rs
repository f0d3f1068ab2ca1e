//! k-plex semantics and the mutable branch-and-bound search state.
//!
//! The state tracks the growing partial k-plex `S`, the candidate set `C`,
//! and a per-vertex count of non-neighbors inside `S` (the vertex itself
//! included once it joins). Mutation is undo-based: growing `S` returns a
//! record that restores the previous state exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// True iff every `v ∈ verts` has at most `k` non-neighbors inside `verts`,
/// counting `v` itself. Duplicate entries are ignored.
pub fn is_kplex(g: &Graph, verts: &[u32], k: u32) -> bool {
    let mut mask = VertexSet::new(g.vertex_count());
    for &v in verts {
        mask.insert(v);
    }
    let size = mask.count();
    mask.iter()
        .all(|v| size - mask.intersection_count(g.neighbors(v)) <= k as usize)
}

/// Undo record for [`SearchState::add`]. Records must be applied in reverse
/// order of the adds they came from.
#[derive(Debug)]
pub struct AddUndo {
    v: u32,
}

/// Branch-and-bound node state: partial k-plex `S`, candidates `C`, and the
/// cached non-neighbor counts.
pub struct SearchState<'g> {
    g: &'g Graph,
    k: u32,
    s: Vec<u32>,
    s_mask: VertexSet,
    cand: VertexSet,
    /// `delta[v] = |S \ N(v)|`; counts `v` itself whenever `v ∈ S`.
    delta: Vec<u32>,
}

impl<'g> SearchState<'g> {
    /// Root state: `S = ∅`, `C` = all vertices.
    pub fn root(g: &'g Graph, k: u32) -> Self {
        assert!(k >= 1, "k must be >= 1");
        let n = g.vertex_count();
        Self {
            g,
            k,
            s: Vec::new(),
            s_mask: VertexSet::new(n),
            cand: VertexSet::full(n),
            delta: vec![0; n],
        }
    }

    /// State with an explicit partial k-plex and candidate set. Intended for
    /// tests and bound fixtures; asserts all state invariants (`seed` is a
    /// k-plex, disjointness, and candidate hygiene `delta[v] + 1 <= k`).
    pub fn with_partial(g: &'g Graph, k: u32, seed: &[u32], cand: &[u32]) -> Self {
        assert!(k >= 1, "k must be >= 1");
        let n = g.vertex_count();
        let mut s_mask = VertexSet::new(n);
        for &v in seed {
            assert!(s_mask.insert(v), "duplicate seed vertex {v}");
        }
        let mut c_mask = VertexSet::new(n);
        for &v in cand {
            assert!(c_mask.insert(v), "duplicate candidate {v}");
            assert!(!s_mask.contains(v), "candidate {v} already in seed");
        }
        let s_size = seed.len();
        let delta: Vec<u32> = (0..n as u32)
            .map(|v| (s_size - s_mask.intersection_count(g.neighbors(v))) as u32)
            .collect();
        for &v in seed {
            assert!(delta[v as usize] <= k, "seed is not a k-plex at vertex {v}");
        }
        for &v in cand {
            assert!(delta[v as usize] < k, "candidate {v} violates hygiene");
        }
        Self {
            g,
            k,
            s: seed.to_vec(),
            s_mask,
            cand: c_mask,
            delta,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Members of the partial k-plex, in insertion order.
    pub fn members(&self) -> &[u32] {
        &self.s
    }

    pub fn candidates(&self) -> &VertexSet {
        &self.cand
    }

    #[inline]
    pub fn delta(&self, v: u32) -> u32 {
        self.delta[v as usize]
    }

    /// Slack `k - delta[v]`: how many more non-neighbors `v` can tolerate.
    /// May be negative for vertices far from `S ∪ C`.
    #[inline]
    pub fn slack(&self, v: u32) -> i64 {
        self.k as i64 - self.delta[v as usize] as i64
    }

    /// Slack for vertices of `S ∪ C`, where `delta[v] <= k` always holds.
    #[inline]
    pub(crate) fn slack_nonneg(&self, v: u32) -> u32 {
        debug_assert!(self.delta[v as usize] <= self.k);
        self.k - self.delta[v as usize]
    }

    /// Moves `v` from `C` into `S`, bumping the non-neighbor count of every
    /// vertex outside `N(v)` (including `v` itself). The caller guarantees
    /// `S ∪ {v}` stays a k-plex; after [`Self::filter_candidates`] every
    /// remaining candidate qualifies.
    pub fn add(&mut self, v: u32) -> AddUndo {
        debug_assert!(self.cand.contains(v));
        debug_assert!(self.delta[v as usize] < self.k);
        debug_assert!(
            self.s
                .iter()
                .all(|&u| self.delta[u as usize] < self.k || self.g.has_edge(u, v)),
            "adding {v} would overload a saturated member"
        );
        self.cand.remove(v);
        self.s.push(v);
        self.s_mask.insert(v);
        let delta = &mut self.delta;
        self.g.neighbors(v).for_each_absent(|w| {
            delta[w as usize] += 1;
        });
        AddUndo { v }
    }

    /// Reverts the matching [`Self::add`], restoring `S`, `C`, and the
    /// non-neighbor counts exactly.
    pub fn undo_add(&mut self, undo: AddUndo) {
        let v = undo.v;
        debug_assert_eq!(self.s.last(), Some(&v), "undo out of order");
        self.s.pop();
        self.s_mask.remove(v);
        let delta = &mut self.delta;
        self.g.neighbors(v).for_each_absent(|w| {
            delta[w as usize] -= 1;
        });
        self.cand.insert(v);
    }

    /// Drops every candidate that can no longer join: vertices whose own
    /// count is exhausted (`delta[v] + 1 > k`) and vertices non-adjacent to a
    /// saturated member (`delta[u] = k`). A single pass suffices; removals
    /// from `C` never change any count. Returns the removed vertices.
    pub fn filter_candidates(&mut self) -> Vec<u32> {
        let saturated: Vec<u32> = self
            .s
            .iter()
            .copied()
            .filter(|&u| self.delta[u as usize] == self.k)
            .collect();
        let mut removed = Vec::new();
        'cand: for v in self.cand.iter() {
            if self.delta[v as usize] + 1 > self.k {
                removed.push(v);
                continue;
            }
            for &u in &saturated {
                if !self.g.has_edge(u, v) {
                    removed.push(v);
                    continue 'cand;
                }
            }
        }
        for &v in &removed {
            self.cand.remove(v);
        }
        removed
    }

    /// Puts candidates removed by [`Self::filter_candidates`] back.
    pub fn restore_candidates(&mut self, removed: &[u32]) {
        for &v in removed {
            self.cand.insert(v);
        }
    }

    /// Removes a single candidate (the exclude branch).
    pub fn remove_candidate(&mut self, v: u32) {
        debug_assert!(self.cand.contains(v));
        self.cand.remove(v);
    }

    pub fn restore_candidate(&mut self, v: u32) {
        self.cand.insert(v);
    }

    #[cfg(test)]
    fn recomputed_delta(&self) -> Vec<u32> {
        let size = self.s.len();
        (0..self.g.vertex_count() as u32)
            .map(|v| (size - self.s_mask.intersection_count(self.g.neighbors(v))) as u32)
            .collect()
    }
}
