//! Path graphs, edge subsets of a path, and matching invariants.
//!
//! Path quantities have closed forms; the `*_bruteforce` functions work on
//! arbitrary small graphs and serve as definitional oracles for them.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;

use crate::error::{Error, Result};

/// Vertex limit for the subset and matching oracles.
pub const BRUTEFORCE_MAX_VERTICES: usize = 16;
/// Vertex limit for the ordered-matching oracle.
pub const ORDERED_MATCHING_MAX_VERTICES: usize = 12;

/// The path `P_n` with edges `e_i = {i, i+1}` for `i = 1..n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathGraph {
    n: usize,
}

impl PathGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("path needs n >= 2, got {n}")));
        }
        Ok(PathGraph { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.n - 1
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.n)
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::path(self.n)
    }
}

/// A subset `S` of the edges of `P_n`. Edge indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    n: usize,
    bits: BitVec<u64, Lsb0>,
}

impl EdgeSubset {
    pub fn empty(n: usize) -> Self {
        EdgeSubset {
            n,
            bits: bitvec![u64, Lsb0; 0; n.saturating_sub(1)],
        }
    }

    pub fn full(n: usize) -> Self {
        EdgeSubset {
            n,
            bits: bitvec![u64, Lsb0; 1; n.saturating_sub(1)],
        }
    }

    pub fn from_edges(n: usize, edges: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &e in edges {
            s.insert(e)?;
        }
        Ok(s)
    }

    /// Bit `i` of `mask` selects edge `i + 1`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let edges = n.saturating_sub(1);
        if edges < 64 && mask >> edges != 0 {
            return Err(Error::domain(format!(
                "mask {mask:#x} has bits beyond edge {edges}"
            )));
        }
        let mut s = Self::empty(n);
        for i in 0..edges.min(64) {
            s.bits.set(i, mask >> i & 1 == 1);
        }
        Ok(s)
    }

    pub(crate) fn from_bools(n: usize, present: impl IntoIterator<Item = bool>) -> Self {
        let mut bits: BitVec<u64, Lsb0> = present.into_iter().collect();
        bits.resize(n.saturating_sub(1), false);
        EdgeSubset { n, bits }
    }

    pub fn insert(&mut self, edge: usize) -> Result<()> {
        if edge == 0 || edge >= self.n {
            return Err(Error::domain(format!(
                "edge {edge} outside 1..={}",
                self.n.saturating_sub(1)
            )));
        }
        self.bits.set(edge - 1, true);
        Ok(())
    }

    /// Ambient vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, edge: usize) -> bool {
        edge >= 1 && self.bits.get(edge - 1).is_some_and(|b| *b)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    /// Present edges in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones().map(|i| i + 1)
    }

    pub fn components(&self) -> ForestComponents {
        components(self)
    }

    /// The forest `G_S` on all `n` vertices.
    pub fn to_simple_graph(&self) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = self.iter().map(|i| (i - 1, i)).collect();
        SimpleGraph::new(self.n, &edges).expect("path edges are valid")
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubset(n={}, {{{self}}})", self.n)
    }
}

/// Comma-separated 1-based edge indices, e.g. `1,3,5`.
impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl EdgeSubset {
    /// Parse the textual form against an ambient vertex count.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut s = Self::empty(n);
        let text = text.trim();
        if text.is_empty() {
            return Ok(s);
        }
        for part in text.split(',') {
            let e = usize::from_str(part.trim())
                .map_err(|err| Error::Parse(format!("edge index {part:?}: {err}")))?;
            s.insert(e)?;
        }
        Ok(s)
    }
}

/// Maximal runs of consecutive edges of an [`EdgeSubset`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestComponents {
    /// `(first edge index, edge count)` pairs, left to right.
    pub runs: Vec<(usize, usize)>,
}

impl ForestComponents {
    pub fn to_edge_subset(&self, n: usize) -> Result<EdgeSubset> {
        let mut s = EdgeSubset::empty(n);
        for &(start, len) in &self.runs {
            for e in start..start + len {
                s.insert(e)?;
            }
        }
        Ok(s)
    }
}

pub fn components(s: &EdgeSubset) -> ForestComponents {
    let mut runs = Vec::new();
    let mut current: Option<(usize, usize)> = None;
    for e in 1..s.n() {
        if s.contains(e) {
            current = Some(match current {
                Some((start, len)) => (start, len + 1),
                None => (e, 1),
            });
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    runs.extend(current);
    ForestComponents { runs }
}

/// `nu'(P_n) = floor((n+1)/3)`.
pub fn nu_prime_path(n: usize) -> usize {
    (n + 1) / 3
}

/// Induced matching number of a run of `edges` consecutive path edges.
pub fn nu_prime_run(edges: usize) -> usize {
    (edges + 2) / 3
}

/// `nu'(G_S)`, summed over the path components of `G_S`.
pub fn nu_prime_forest(s: &EdgeSubset) -> usize {
    components(s)
        .runs
        .iter()
        .map(|&(_, len)| nu_prime_run(len))
        .sum()
}

/// `nu_0(P_n) = floor(n/2)`.
pub fn nu_zero_path(n: usize) -> usize {
    n / 2
}

/// A loopless undirected graph on vertices `0..n`, at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::domain(format!("graph has {n} vertices, limit 64")));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        Ok(SimpleGraph {
            n,
            adj,
            edges: list,
        })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path fits")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn neighbors_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    fn require_at_most(&self, limit: usize, what: &'static str) -> Result<()> {
        if self.n > limit {
            Err(Error::BudgetExceeded {
                what,
                required: self.n as u128,
                limit: limit as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// Largest induced matching, by exhaustive search over induced matchings.
pub fn nu_prime_bruteforce(g: &SimpleGraph) -> Result<usize> {
    g.require_at_most(BRUTEFORCE_MAX_VERTICES, "induced matching vertex")?;

    // `blocked`: matched vertices plus their neighbours.
    fn search(g: &SimpleGraph, from: usize, blocked: u64) -> usize {
        let mut best = 0;
        for (idx, &(u, v)) in g.edges.iter().enumerate().skip(from) {
            if blocked >> u & 1 == 1 || blocked >> v & 1 == 1 {
                continue;
            }
            let closed = (1 << u) | (1 << v) | g.neighbors_mask(u) | g.neighbors_mask(v);
            best = best.max(1 + search(g, idx + 1, blocked | closed));
        }
        best
    }

    Ok(search(g, 0, 0))
}

/// Check whether `m` is an induced matching of `g`.
pub fn is_induced_matching(g: &SimpleGraph, m: &[(usize, usize)]) -> bool {
    let mut used = 0u64;
    for &(u, v) in m {
        if !g.adjacent(u, v) || used >> u & 1 == 1 || used >> v & 1 == 1 {
            return false;
        }
        used |= (1 << u) | (1 << v);
    }
    // The induced subgraph on V(M) has exactly |M| edges.
    let induced = g
        .edges
        .iter()
        .filter(|&&(a, b)| used >> a & 1 == 1 && used >> b & 1 == 1)
        .count();
    induced == m.len()
}

/// Largest ordered matching, by exhaustive search over ordered sequences of pairs.
///
/// A sequence `(u_1, v_1), ..., (u_s, v_s)` qualifies when the `u_i` are
/// pairwise non-adjacent and an edge `{u_i, v_j}` only occurs with `i <= j`.
pub fn nu_zero_bruteforce(g: &SimpleGraph) -> Result<usize> {
    g.require_at_most(ORDERED_MATCHING_MAX_VERTICES, "ordered matching vertex")?;

    fn extend(g: &SimpleGraph, used: u64, us: u64, vs: u64) -> usize {
        let mut best = 0;
        for &(a, b) in &g.edges {
            for (u, v) in [(a, b), (b, a)] {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    continue;
                }
                // condition (1): the new u is independent of earlier u's
                if g.neighbors_mask(u) & us != 0 {
                    continue;
                }
                // condition (2): the new u at a later index may not touch an earlier v
                if g.neighbors_mask(u) & vs != 0 {
                    continue;
                }
                let next = extend(g, used | (1 << u) | (1 << v), us | (1 << u), vs | (1 << v));
                best = best.max(1 + next);
            }
        }
        best
    }

    Ok(extend(g, 0, 0, 0))
}

/// Maximum matching size by exhaustive search.
pub fn matching_number_bruteforce(g: &SimpleGraph) -> Result<usize> {
    g.require_at_most(BRUTEFORCE_MAX_VERTICES, "matching vertex")?;

    fn search(g: &SimpleGraph, used: u64) -> usize {
        let free = (0..g.n).find(|&u| used >> u & 1 == 0);
        let Some(u) = free else { return 0 };
        let used = used | 1 << u;
        let mut best = search(g, used);
        let mut nbrs = g.neighbors_mask(u) & !used;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + search(g, used | 1 << v));
        }
        best
    }

    Ok(search(g, 0))
}

/// Every inclusion-minimal vertex cover, as sorted 0-based vertex lists.
pub fn minimal_vertex_covers(g: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    g.require_at_most(BRUTEFORCE_MAX_VERTICES, "vertex cover vertex")?;
    let covers = |set: u64| {
        g.edges
            .iter()
            .all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1)
    };
    let mut out = Vec::new();
    for set in 0u64..1 << g.n {
        if !covers(set) {
            continue;
        }
        let minimal = (0..g.n)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| !covers(set & !(1 << v)));
        if minimal {
            out.push((0..g.n).filter(|&v| set >> v & 1 == 1).collect());
        }
    }
    out.sort();
    Ok(out)
}
