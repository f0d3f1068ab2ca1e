//! Undirected graphs with bitset adjacency rows.
//!
//! Covers instance parsing (DIMACS clique format and plain edge lists),
//! degeneracy ordering, and induced subgraphs. Graphs are immutable once
//! built and safe to share across threads.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::fmt::Write as _;

use crate::bitset::VertexSet;

/// Simple undirected graph; vertices are `0..n`, no self-loops, no
/// multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    degrees: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// deduplicated. Panics on out-of-range endpoints or self-loops; this is
    /// the constructor for programmatic graphs, parsers report errors instead.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut b = Builder::new(n);
        for &(u, v) in edges {
            assert!(u != v, "self-loop at vertex {u}");
            b.add_edge(u, v);
        }
        b.finish()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: u32) -> u32 {
        self.degrees[v as usize]
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &VertexSet {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v)
    }

    /// Serializes in DIMACS clique format (1-based `e u v` lines, `u < v`).
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p edge {} {}", self.n, self.m);
        for u in 0..self.n as u32 {
            for v in self.adj[u as usize].iter() {
                if v > u {
                    let _ = writeln!(out, "e {} {}", u + 1, v + 1);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

struct Builder {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    /// Adds an undirected edge, ignoring duplicates. Returns true if new.
    fn add_edge(&mut self, u: u32, v: u32) -> bool {
        debug_assert!(u != v);
        if self.adj[u as usize].insert(v) {
            self.adj[v as usize].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    fn finish(self) -> Graph {
        let degrees = self.adj.iter().map(|row| row.count() as u32).collect();
        Graph {
            n: self.adj.len(),
            m: self.m,
            adj: self.adj,
            degrees,
        }
    }
}

/// Instance parsing failures, with 1-based line numbers where applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// No `p edge <n> <m>` header before the first edge line.
    MissingHeader,
    /// Token that is not of the expected shape.
    Malformed { line: usize, reason: &'static str },
    /// Vertex id outside `1..=n`.
    VertexOutOfRange { line: usize },
    /// Self-loop in a format that forbids them.
    SelfLoop { line: usize },
    /// Edge-list input with no usable edges.
    NoEdges,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing 'p edge <n> <m>' header line"),
            ParseError::Malformed { line, reason } => write!(f, "line {line}: {reason}"),
            ParseError::VertexOutOfRange { line } => {
                write!(f, "line {line}: vertex id out of range")
            }
            ParseError::SelfLoop { line } => write!(f, "line {line}: self-loop"),
            ParseError::NoEdges => write!(f, "no edges"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Parses the DIMACS clique format: `c` comments, one `p edge <n> <m>`
/// header, then 1-based `e <u> <v>` lines. Duplicate edges are deduplicated;
/// self-loops are rejected.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<Builder> = None;
    let mut n = 0u64;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if let Some(rest) = t.strip_prefix('p') {
            if builder.is_some() {
                return Err(ParseError::Malformed {
                    line,
                    reason: "duplicate problem line",
                });
            }
            let mut tok = rest.split_whitespace();
            if tok.next() != Some("edge") {
                return Err(ParseError::Malformed {
                    line,
                    reason: "expected 'p edge <n> <m>'",
                });
            }
            let verts: u64 = parse_token(tok.next(), line)?;
            let _edges: u64 = parse_token(tok.next(), line)?;
            if tok.next().is_some() {
                return Err(ParseError::Malformed {
                    line,
                    reason: "trailing tokens after problem line",
                });
            }
            n = verts;
            builder = Some(Builder::new(verts as usize));
        } else if let Some(rest) = t.strip_prefix('e') {
            let b = builder.as_mut().ok_or(ParseError::MissingHeader)?;
            let mut tok = rest.split_whitespace();
            let u: u64 = parse_token(tok.next(), line)?;
            let v: u64 = parse_token(tok.next(), line)?;
            if tok.next().is_some() {
                return Err(ParseError::Malformed {
                    line,
                    reason: "trailing tokens after edge line",
                });
            }
            if u < 1 || u > n || v < 1 || v > n {
                return Err(ParseError::VertexOutOfRange { line });
            }
            if u == v {
                return Err(ParseError::SelfLoop { line });
            }
            b.add_edge((u - 1) as u32, (v - 1) as u32);
        } else {
            return Err(ParseError::Malformed {
                line,
                reason: "unrecognized line",
            });
        }
    }
    builder.map(Builder::finish).ok_or(ParseError::MissingHeader)
}

fn parse_token(tok: Option<&str>, line: usize) -> Result<u64, ParseError> {
    tok.and_then(|t| t.parse().ok()).ok_or(ParseError::Malformed {
        line,
        reason: "expected an integer token",
    })
}

/// Parses a whitespace-separated edge list with `%`/`#` comment lines.
/// Vertex labels may be arbitrary non-negative integers; they are compacted
/// to `0..n` in first-appearance order. Self-loops are dropped silently,
/// duplicates deduplicated. Also returns the original label of each vertex.
pub fn parse_edge_list_labeled(text: &str) -> Result<(Graph, Vec<u64>), ParseError> {
    let mut labels: Vec<u64> = Vec::new();
    let mut ids: BTreeMap<u64, u32> = BTreeMap::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut intern = |label: u64, labels: &mut Vec<u64>| -> u32 {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as u32
        })
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('%') || t.starts_with('#') {
            continue;
        }
        let mut tok = t.split_whitespace();
        let a: u64 = parse_token(tok.next(), line)?;
        let b: u64 = parse_token(tok.next(), line)?;
        if tok.next().is_some() {
            return Err(ParseError::Malformed {
                line,
                reason: "expected exactly two vertex ids",
            });
        }
        if a == b {
            continue; // silently drop self-loops
        }
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(ParseError::NoEdges);
    }
    let mut builder = Builder::new(labels.len());
    for (u, v) in edges {
        builder.add_edge(u, v);
    }
    Ok((builder.finish(), labels))
}

/// [`parse_edge_list_labeled`] without the label map.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list_labeled(text).map(|(g, _)| g)
}

/// Instance file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceFormat {
    Dimacs,
    EdgeList,
}

/// A leading `p ...` line (after any comment lines) selects DIMACS;
/// anything else is treated as an edge list.
pub fn detect_format(text: &str) -> InstanceFormat {
    for raw in text.lines() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('%') || t.starts_with('#') {
            continue;
        }
        return if t.starts_with('p') {
            InstanceFormat::Dimacs
        } else {
            InstanceFormat::EdgeList
        };
    }
    InstanceFormat::EdgeList
}

/// Parses with format auto-detection. The returned labels map internal ids
/// back to the ids used in the file (1-based for DIMACS, original labels for
/// edge lists).
pub fn parse_auto(text: &str) -> Result<(Graph, Vec<u64>), ParseError> {
    match detect_format(text) {
        InstanceFormat::Dimacs => {
            let g = parse_dimacs(text)?;
            let labels = (1..=g.vertex_count() as u64).collect();
            Ok((g, labels))
        }
        InstanceFormat::EdgeList => parse_edge_list_labeled(text),
    }
}

/// Repeatedly removes a minimum-degree vertex (ties broken by smallest id).
/// Returns the removal order and the degeneracy, i.e. the largest degree
/// seen at removal time.
pub fn degeneracy_order(g: &Graph) -> (Vec<u32>, u32) {
    let n = g.vertex_count();
    let mut deg: Vec<u32> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut heap: alloc::collections::BinaryHeap<Reverse<(u32, u32)>> =
        (0..n as u32).map(|v| Reverse((deg[v as usize], v))).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0u32;
    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v as usize] || d != deg[v as usize] {
            continue; // stale heap entry
        }
        removed[v as usize] = true;
        order.push(v);
        degeneracy = degeneracy.max(d);
        for w in g.neighbors(v).iter() {
            if !removed[w as usize] {
                deg[w as usize] -= 1;
                heap.push(Reverse((deg[w as usize], w)));
            }
        }
    }
    (order, degeneracy)
}

/// Subgraph induced by `keep`. New ids are `0..|keep|` in ascending order of
/// old id; the returned map sends new ids to old ones.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> (Graph, Vec<u32>) {
    debug_assert_eq!(keep.universe(), g.vertex_count());
    let map: Vec<u32> = keep.iter().collect();
    let mut inverse = vec![u32::MAX; g.vertex_count()];
    for (new, &old) in map.iter().enumerate() {
        inverse[old as usize] = new as u32;
    }
    let mut builder = Builder::new(map.len());
    for (new_u, &old_u) in map.iter().enumerate() {
        for old_v in g.neighbors(old_u).iter() {
            if old_v > old_u && keep.contains(old_v) {
                builder.add_edge(new_u as u32, inverse[old_v as usize]);
            }
        }
    }
    (builder.finish(), map)
}
