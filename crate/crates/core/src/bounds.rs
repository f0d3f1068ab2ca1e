//! Upper bounds on how many candidates can still join the partial k-plex.
//!
//! All bounds work the same way: repeatedly extract a subset `I` of the
//! candidate set together with an upper bound `ub` on the number of vertices
//! `I` can provide, and accumulate `|S| + Σ ub`. They differ in how `I` is
//! chosen:
//!
//! * coloring extractions take a greedy maximal independent set, bound it
//!   either by `min(|I|, k)` (the plain color bound) or by the sorted-slack
//!   bound ([`compute_tisub`]), and optionally absorb extra vertices through
//!   two relaxation rules that provably cannot raise the bound;
//! * partition extractions take the non-neighborhood `C \ N(v)` of a member
//!   `v ∈ S`, bounded by `min(|I|, slack(v))`, choosing the `v` whose
//!   extraction has the best size-to-bound ratio (the `dise` metric).
//!
//! The seesaw bound ([`select_ub`]) computes both extractions each round and
//! keeps the better one under the same metric.
//!
//! Everything here is deterministic. Scan orders are fixed: non-ascending
//! slack with ties by ascending vertex id, except the second relaxation
//! rule, which scans ascending slack (low-slack vertices have the largest
//! adjacency budget under it). Ratio comparisons use integer
//! cross-multiplication, never floats.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use crate::bitset::VertexSet;
use crate::kplex::SearchState;

/// How an [`Extraction`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractionKind {
    Coloring,
    Partition,
}

/// A subset of the candidate set plus an upper bound on the number of
/// vertices it can provide for the partial k-plex.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub verts: Vec<u32>,
    pub ub: usize,
    pub kind: ExtractionKind,
}

/// Result of a full bound computation at one search node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundResult {
    /// Upper bound on the size of any k-plex extending `S` within `S ∪ C`.
    pub value: usize,
    /// Rounds won by the coloring extraction (seesaw bounds only).
    pub color_wins: u64,
    /// Rounds won by the partition extraction (seesaw bounds only).
    pub partition_wins: u64,
}

impl BoundResult {
    fn plain(value: usize) -> Self {
        BoundResult {
            value,
            color_wins: 0,
            partition_wins: 0,
        }
    }
}

/// Selector for the bound used at every search node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Plain color bound: each independent set contributes `min(|I|, k)`.
    Gcb,
    /// Sorted-slack bound per independent set, no relaxation rules.
    Norules,
    /// Sorted-slack bound plus both relaxation rules.
    RelaxGcb,
    /// Partition bound only.
    DisePub,
    /// Seesaw between relaxed coloring and partition extractions.
    RelaxPub,
    /// Seesaw with the plain color bound on the coloring side.
    GcbPub,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::Gcb,
        BoundKind::Norules,
        BoundKind::RelaxGcb,
        BoundKind::DisePub,
        BoundKind::RelaxPub,
        BoundKind::GcbPub,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Gcb => "gcb",
            BoundKind::Norules => "norules",
            BoundKind::RelaxGcb => "relaxgcb",
            BoundKind::DisePub => "disepub",
            BoundKind::RelaxPub => "relaxpub",
            BoundKind::GcbPub => "gcbpub",
        }
    }

    pub fn evaluate(self, st: &SearchState<'_>) -> BoundResult {
        match self {
            BoundKind::Gcb => compute_gcb(st),
            BoundKind::Norules => relax_coloring_norules(st),
            BoundKind::RelaxGcb => relax_coloring(st),
            BoundKind::DisePub => compute_disepub(st),
            BoundKind::RelaxPub => select_ub(st),
            BoundKind::GcbPub => compute_gcbpub(st),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for unrecognized bound names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownBound(pub String);

impl fmt::Display for UnknownBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown bound '{}' (expected gcb|norules|relaxgcb|disepub|gcbpub|relaxpub)",
            self.0
        )
    }
}

impl core::error::Error for UnknownBound {}

impl FromStr for BoundKind {
    type Err = UnknownBound;

    fn from_str(s: &str) -> Result<Self, UnknownBound> {
        BoundKind::ALL
            .iter()
            .copied()
            .find(|b| b.name() == s)
            .ok_or_else(|| UnknownBound(String::from(s)))
    }
}

/// Sorted-slack upper bound for an independent set: with the slack multiset
/// sorted non-ascending, the largest 1-based index `i` whose slack is still
/// `>= i`, or 0 if none. Never exceeds `|slacks|`, and never exceeds `k`
/// because slacks are at most `k`.
pub fn compute_tisub(slacks: &[u32]) -> usize {
    let mut sorted = slacks.to_vec();
    sorted.sort_unstable_by_key(|&s| Reverse(s));
    tisub_sorted(&sorted)
}

fn tisub_sorted(sorted_desc: &[u32]) -> usize {
    debug_assert!(sorted_desc.windows(2).all(|w| w[0] >= w[1]));
    let mut best = 0;
    for (idx, &s) in sorted_desc.iter().enumerate() {
        let i = idx + 1;
        if (s as usize) >= i {
            best = i;
        } else {
            break; // slacks only shrink while i grows
        }
    }
    best
}

/// Candidates of `working`, ordered by non-ascending slack, ties by
/// ascending id. This is the scan order for every coloring pass.
fn coloring_order(st: &SearchState<'_>, working: &VertexSet) -> Vec<u32> {
    let mut order: Vec<u32> = working.iter().collect();
    order.sort_unstable_by_key(|&v| (st.delta(v), v));
    order
}

/// Greedy maximal independent set in the given scan order.
fn greedy_independent_set(st: &SearchState<'_>, order: &[u32]) -> (Vec<u32>, VertexSet) {
    let mut verts = Vec::new();
    let mut mask = VertexSet::new(st.graph().vertex_count());
    for &v in order {
        if st.graph().neighbors(v).is_disjoint(&mask) {
            verts.push(v);
            mask.insert(v);
        }
    }
    (verts, mask)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColorMode {
    /// Maximal independent set bounded by `min(|I|, k)`.
    PlainGcb,
    /// Maximal independent set bounded by its sorted-slack value.
    TisubOnly,
    /// Sorted-slack bound plus both relaxation rules.
    Relaxed,
}

/// One coloring extraction from `working`, which must be nonempty.
fn color_extraction_on(
    st: &SearchState<'_>,
    working: &VertexSet,
    mode: ColorMode,
) -> Extraction {
    debug_assert!(!working.is_empty());
    let order = coloring_order(st, working);
    let (mut verts, mut mask) = greedy_independent_set(st, &order);

    if mode == ColorMode::PlainGcb {
        let ub = verts.len().min(st.k() as usize);
        return Extraction {
            verts,
            ub,
            kind: ExtractionKind::Coloring,
        };
    }

    // The set was built in non-ascending slack order, so its slack list is
    // already sorted.
    let slacks: Vec<u32> = verts.iter().map(|&v| st.slack_nonneg(v)).collect();
    let ub = tisub_sorted(&slacks);
    if mode == ColorMode::TisubOnly {
        return Extraction {
            verts,
            ub,
            kind: ExtractionKind::Coloring,
        };
    }

    // Loose-or-conflict bookkeeping: a vertex is loose when its slack
    // exceeds ub; conflicts appear as absorbed vertices touch the set.
    let mut lc_mask = VertexSet::new(st.graph().vertex_count());
    let mut lc_len = 0usize;
    for &v in &verts {
        if st.slack_nonneg(v) as usize > ub {
            lc_mask.insert(v);
            lc_len += 1;
        }
    }

    // Rule 1: absorb v when the loose-or-conflict count of I ∪ {v} stays
    // within ub. Adding v makes v itself plus its fresh neighbors in I
    // conflict vertices.
    if lc_len < ub {
        for &v in &order {
            if mask.contains(v) {
                continue;
            }
            let adj = st.graph().neighbors(v);
            let fresh = 1 + adj.intersection_count_excluding(&mask, &lc_mask);
            if lc_len + fresh <= ub {
                lc_mask.union_with_intersection(adj, &mask);
                lc_mask.insert(v);
                lc_len += fresh;
                verts.push(v);
                mask.insert(v);
                if lc_len == ub {
                    break;
                }
            }
        }
    }

    // Rule 2: absorb v when it is adjacent to at most ub - slack(v) members
    // of the (growing) set. Only slacks below ub can qualify; scanned in
    // ascending slack order, ties by id.
    let mut rule2: Vec<u32> = order
        .iter()
        .copied()
        .filter(|&v| !mask.contains(v) && (st.slack_nonneg(v) as usize) < ub)
        .collect();
    rule2.sort_unstable_by_key(|&v| (Reverse(st.delta(v)), v));
    for &v in &rule2 {
        let slack = st.slack_nonneg(v) as usize;
        if st.graph().neighbors(v).intersection_count(&mask) <= ub - slack {
            verts.push(v);
            mask.insert(v);
        }
    }

    Extraction {
        verts,
        ub,
        kind: ExtractionKind::Coloring,
    }
}

/// Best partition extraction of `working`: for each member `v ∈ S` with
/// positive slack, `I = working \ N(v)` bounded by `min(|I|, slack(v))`,
/// ranked by the `dise` ratio `|I| / ub` (cross-multiplied), ties broken by
/// larger `|I|`. `None` when every such `I` is empty.
fn select_partition_on(st: &SearchState<'_>, working: &VertexSet) -> Option<Extraction> {
    let total = working.count();
    if total == 0 {
        return None;
    }
    let mut best: Option<(usize, usize, u32)> = None; // (|I|, ub, member)
    for &u in st.members() {
        let slack = st.slack_nonneg(u) as usize;
        if slack == 0 {
            continue;
        }
        let size = total - working.intersection_count(st.graph().neighbors(u));
        if size == 0 {
            continue;
        }
        let ub = size.min(slack);
        let better = match best {
            None => true,
            Some((bsize, bub, _)) => {
                let lhs = size as u64 * bub as u64;
                let rhs = bsize as u64 * ub as u64;
                lhs > rhs || (lhs == rhs && size > bsize)
            }
        };
        if better {
            best = Some((size, ub, u));
        }
    }
    best.map(|(_, ub, u)| {
        let adj = st.graph().neighbors(u);
        let verts: Vec<u32> = working.iter().filter(|&v| !adj.contains(v)).collect();
        Extraction {
            verts,
            ub,
            kind: ExtractionKind::Partition,
        }
    })
}

fn remove_extraction(working: &mut VertexSet, e: &Extraction) {
    for &v in &e.verts {
        working.remove(v);
    }
}

fn coloring_loop(st: &SearchState<'_>, mode: ColorMode) -> BoundResult {
    let mut working = st.candidates().clone();
    let mut value = st.members().len();
    while !working.is_empty() {
        let e = color_extraction_on(st, &working, mode);
        remove_extraction(&mut working, &e);
        value += e.ub;
    }
    BoundResult::plain(value)
}

/// Plain color bound: `|S| + Σ min(|I_i|, k)` over the greedy coloring of
/// the candidate set.
pub fn compute_gcb(st: &SearchState<'_>) -> BoundResult {
    coloring_loop(st, ColorMode::PlainGcb)
}

/// One relaxed coloring extraction from the full candidate set, which must
/// be nonempty.
pub fn try_color(st: &SearchState<'_>) -> Extraction {
    assert!(!st.candidates().is_empty(), "try_color on empty candidate set");
    color_extraction_on(st, st.candidates(), ColorMode::Relaxed)
}

/// Relaxed color bound: repeated [`try_color`] extractions until the
/// candidate set is exhausted.
pub fn relax_coloring(st: &SearchState<'_>) -> BoundResult {
    coloring_loop(st, ColorMode::Relaxed)
}

/// Ablation of [`relax_coloring`] without the two relaxation rules:
/// extractions are bare maximal independent sets with their sorted-slack
/// bound.
pub fn relax_coloring_norules(st: &SearchState<'_>) -> BoundResult {
    coloring_loop(st, ColorMode::TisubOnly)
}

/// Best partition extraction of the full candidate set: for each member
/// `v ∈ S` with positive slack, `I = C \ N(v)` bounded by
/// `min(|I|, slack(v))`, ranked by the `dise` ratio `|I| / ub`, ties broken
/// by larger `|I|`. `None` when every such `I` is empty.
pub fn select_partition(st: &SearchState<'_>) -> Option<Extraction> {
    select_partition_on(st, st.candidates())
}

/// Partition bound: repeated partition extractions; candidates left over
/// once no member yields a nonempty extraction are adjacent to all of `S`
/// (given hygiene filtering) and count at full size.
pub fn compute_disepub(st: &SearchState<'_>) -> BoundResult {
    let mut working = st.candidates().clone();
    let mut value = st.members().len();
    while let Some(e) = select_partition_on(st, &working) {
        remove_extraction(&mut working, &e);
        value += e.ub;
    }
    value += working.count();
    BoundResult::plain(value)
}

fn seesaw_loop(st: &SearchState<'_>, color_mode: ColorMode) -> BoundResult {
    let mut working = st.candidates().clone();
    let mut value = st.members().len();
    let mut color_wins = 0u64;
    let mut partition_wins = 0u64;
    while !working.is_empty() {
        let color = color_extraction_on(st, &working, color_mode);
        let partition = select_partition_on(st, &working);
        let pick_color = match &partition {
            None => true,
            Some(p) => {
                let lhs = color.verts.len() as u64 * p.ub as u64;
                let rhs = p.verts.len() as u64 * color.ub as u64;
                // On a full tie prefer the coloring extraction, which is
                // always available.
                lhs > rhs || (lhs == rhs && color.verts.len() >= p.verts.len())
            }
        };
        if pick_color {
            remove_extraction(&mut working, &color);
            value += color.ub;
            color_wins += 1;
        } else {
            let p = partition.unwrap();
            remove_extraction(&mut working, &p);
            value += p.ub;
            partition_wins += 1;
        }
    }
    BoundResult {
        value,
        color_wins,
        partition_wins,
    }
}

/// Seesaw bound: each round computes both the relaxed coloring extraction
/// and the partition extraction, keeps the one with the better `dise` ratio
/// (ties: larger extraction, then coloring), and accumulates its bound.
pub fn select_ub(st: &SearchState<'_>) -> BoundResult {
    seesaw_loop(st, ColorMode::Relaxed)
}

/// Ablation of [`select_ub`] with the plain color bound on the coloring
/// side.
pub fn compute_gcbpub(st: &SearchState<'_>) -> BoundResult {
    seesaw_loop(st, ColorMode::PlainGcb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    // 6-vertex fixture where the coloring bound prevails: the seed vertex 0
    // is adjacent to all five candidates, plus one candidate-candidate edge
    // 1-4. k = 2, S = {0}, C = {1..5}.
    fn color_wins_state(g: &Graph) -> SearchState<'_> {
        SearchState::with_partial(g, 2, &[0], &[1, 2, 3, 4, 5])
    }

    fn color_wins_graph() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 4)])
    }

    // 6-vertex fixture where the partition bound prevails: only candidate 1
    // is adjacent to the seed vertex 0. k = 2, S = {0}, C = {1..5}.
    fn partition_wins_graph() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 4)])
    }

    fn partition_wins_state(g: &Graph) -> SearchState<'_> {
        SearchState::with_partial(g, 2, &[0], &[1, 2, 3, 4, 5])
    }

    // 11-vertex fixture exercising both relaxation rules with k = 4: an
    // independent 3-vertex seed {0,1,2} and eight candidates 3..10 whose
    // slacks are 4,3,3,1,1,2,1,2 (for 3..10 in id order).
    fn rules_demo_graph() -> Graph {
        Graph::from_edges(
            11,
            &[
                // seed adjacencies pin the slacks
                (3, 0),
                (3, 1),
                (3, 2),
                (4, 0),
                (4, 1),
                (5, 0),
                (5, 1),
                (8, 0),
                (10, 0),
                // candidate-candidate edges
                (4, 6),
                (5, 6),
                (4, 7),
                (3, 8),
                (3, 9),
                (8, 9),
                (5, 10),
            ],
        )
    }

    fn rules_demo_state(g: &Graph) -> SearchState<'_> {
        SearchState::with_partial(g, 4, &[0, 1, 2], &[3, 4, 5, 6, 7, 8, 9, 10])
    }

    #[test]
    fn tisub_examples() {
        assert_eq!(compute_tisub(&[4, 3, 3]), 3);
        assert_eq!(compute_tisub(&[]), 0);
        assert_eq!(compute_tisub(&[2, 2, 2, 2]), 2);
        assert_eq!(compute_tisub(&[0, 0]), 0);
        // unsorted input is sorted internally
        assert_eq!(compute_tisub(&[3, 4, 3]), 3);
    }

    #[test]
    fn tisub_never_beats_plain_cap() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let k = rng.random_range(1..=8u32);
            let len = rng.random_range(0..20);
            let slacks: Vec<u32> = (0..len).map(|_| rng.random_range(0..=k)).collect();
            assert!(compute_tisub(&slacks) <= slacks.len().min(k as usize));
        }
    }

    #[test]
    fn gcb_on_both_fixtures() {
        let ga = color_wins_graph();
        assert_eq!(compute_gcb(&color_wins_state(&ga)).value, 4);
        let gb = partition_wins_graph();
        assert_eq!(compute_gcb(&partition_wins_state(&gb)).value, 6);
    }

    #[test]
    fn gcb_on_empty_candidates() {
        let g = color_wins_graph();
        let st = SearchState::with_partial(&g, 2, &[0], &[]);
        assert_eq!(compute_gcb(&st).value, 1);
    }

    #[test]
    fn try_color_absorbs_all_candidates_when_color_bound_prevails() {
        let g = color_wins_graph();
        let st = color_wins_state(&g);
        let e = try_color(&st);
        let mut verts = e.verts.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![1, 2, 3, 4, 5]);
        assert_eq!(e.ub, 2);
    }

    #[test]
    fn try_color_respects_slack_order() {
        let g = partition_wins_graph();
        let st = partition_wins_state(&g);
        let e = try_color(&st);
        let mut verts = e.verts.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![1, 5]);
        assert_eq!(e.ub, 1);
    }

    #[test]
    fn try_color_single_isolated_candidate() {
        // one candidate, non-adjacent to one of the two seed vertices: slack 1
        let g = Graph::from_edges(3, &[(0, 1), (2, 0)]);
        let st = SearchState::with_partial(&g, 2, &[0, 1], &[2]);
        let e = try_color(&st);
        assert_eq!(e.verts, vec![2]);
        assert_eq!(e.ub, 1);
    }

    #[test]
    fn relax_coloring_on_fixtures() {
        let ga = color_wins_graph();
        assert_eq!(relax_coloring(&color_wins_state(&ga)).value, 3);
        let g = rules_demo_graph();
        let st = rules_demo_state(&g);
        assert_eq!(relax_coloring(&st).value, 3 + 3);

        let empty = SearchState::with_partial(&ga, 2, &[0], &[]);
        assert_eq!(relax_coloring(&empty).value, 1);
    }

    #[test]
    fn norules_on_fixtures() {
        let g = rules_demo_graph();
        assert_eq!(relax_coloring_norules(&rules_demo_state(&g)).value, 3 + 6);
        let ga = color_wins_graph();
        assert_eq!(relax_coloring_norules(&color_wins_state(&ga)).value, 4);
        let empty = SearchState::with_partial(&ga, 2, &[0], &[]);
        assert_eq!(relax_coloring_norules(&empty).value, 1);
    }

    #[test]
    fn rules_demo_fixture_matches_its_construction() {
        // Validate every property the fixture is meant to have before the
        // bound tests above rely on them.
        let g = rules_demo_graph();
        let st = rules_demo_state(&g);
        let expected_slacks = [4, 3, 3, 1, 1, 2, 1, 2];
        for (v, &s) in (3..11).zip(&expected_slacks) {
            assert_eq!(st.slack(v), s, "slack of {v}");
        }

        // canonical coloring: {3,4,5}, {6,7,8,10}, {9}
        let mut working = st.candidates().clone();
        let order = coloring_order(&st, &working);
        assert_eq!(order, vec![3, 4, 5, 8, 10, 6, 7, 9]);
        let (i1, _) = greedy_independent_set(&st, &order);
        assert_eq!(i1, vec![3, 4, 5]);
        for &v in &i1 {
            working.remove(v);
        }
        let order2 = coloring_order(&st, &working);
        let (i2, _) = greedy_independent_set(&st, &order2);
        let mut i2_sorted = i2.clone();
        i2_sorted.sort_unstable();
        assert_eq!(i2_sorted, vec![6, 7, 8, 10]);
        for &v in &i2 {
            working.remove(v);
        }
        let order3 = coloring_order(&st, &working);
        let (i3, _) = greedy_independent_set(&st, &order3);
        assert_eq!(i3, vec![9]);

        // per-set sorted-slack bounds 3, 2, 1
        let tisub = |vs: &[u32]| compute_tisub(&vs.iter().map(|&v| st.slack_nonneg(v)).collect::<Vec<_>>());
        assert_eq!(tisub(&i1), 3);
        assert_eq!(tisub(&i2), 2);
        assert_eq!(tisub(&i3), 1);

        // vertex 3 is the only loose vertex of the first set
        let loose: Vec<u32> = i1.iter().copied().filter(|&v| st.slack_nonneg(v) > 3).collect();
        assert_eq!(loose, vec![3]);

        // the relaxed extraction absorbs everything: 8 and 9 via rule 1
        // (loose-or-conflict set exactly {3,8,9}), then 6, 7, 10 via rule 2
        let e = color_extraction_on(&st, st.candidates(), ColorMode::Relaxed);
        let mut verts = e.verts.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![3, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(e.ub, 3);
        assert_eq!(e.verts[3..5], [8, 9], "rule 1 admissions in order");
        assert_eq!(e.verts[5..8], [6, 7, 10], "rule 2 admissions in order");
    }

    #[test]
    fn select_partition_on_fixtures() {
        let gb = partition_wins_graph();
        let st = partition_wins_state(&gb);
        let e = select_partition(&st).unwrap();
        let mut verts = e.verts.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![2, 3, 4, 5]);
        assert_eq!(e.ub, 1);
        assert_eq!(e.kind, ExtractionKind::Partition);

        // all candidates adjacent to the only member: nothing to extract
        let ga = color_wins_graph();
        assert!(select_partition(&color_wins_state(&ga)).is_none());

        // no members at all
        let root = SearchState::root(&ga, 2);
        assert!(select_partition(&root).is_none());
    }

    #[test]
    fn disepub_on_fixtures() {
        let ga = color_wins_graph();
        assert_eq!(compute_disepub(&color_wins_state(&ga)).value, 6);
        let gb = partition_wins_graph();
        assert_eq!(compute_disepub(&partition_wins_state(&gb)).value, 3);
        let empty = SearchState::with_partial(&ga, 2, &[0], &[]);
        assert_eq!(compute_disepub(&empty).value, 1);
    }

    #[test]
    fn seesaw_on_fixtures() {
        let ga = color_wins_graph();
        let r = select_ub(&color_wins_state(&ga));
        assert_eq!((r.value, r.color_wins, r.partition_wins), (3, 1, 0));

        let gb = partition_wins_graph();
        let r = select_ub(&partition_wins_state(&gb));
        assert_eq!((r.value, r.color_wins, r.partition_wins), (3, 1, 1));

        let empty = SearchState::with_partial(&ga, 2, &[0], &[]);
        let r = select_ub(&empty);
        assert_eq!((r.value, r.color_wins, r.partition_wins), (1, 0, 0));
    }

    #[test]
    fn gcbpub_on_fixtures() {
        let ga = color_wins_graph();
        assert_eq!(compute_gcbpub(&color_wins_state(&ga)).value, 4);
        let gb = partition_wins_graph();
        assert_eq!(compute_gcbpub(&partition_wins_state(&gb)).value, 3);
        let empty = SearchState::with_partial(&ga, 2, &[0], &[]);
        assert_eq!(compute_gcbpub(&empty).value, 1);
    }

    #[test]
    fn bound_kind_names_roundtrip() {
        for kind in BoundKind::ALL {
            assert_eq!(kind.name().parse::<BoundKind>().unwrap(), kind);
        }
        assert!("fancy".parse::<BoundKind>().is_err());
    }

    #[test]
    fn bounds_are_deterministic() {
        let g = rules_demo_graph();
        let st = rules_demo_state(&g);
        for kind in BoundKind::ALL {
            assert_eq!(kind.evaluate(&st), kind.evaluate(&st));
        }
    }
}
