//! Simple undirected graphs on at most 64 vertices, stored as adjacency bit sets.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (one `u64` row per vertex).
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair, normalized so that `.0 < .1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Simple undirected graph with vertices `0..n`.
///
/// Row `v` of the adjacency holds bit `w` set iff `vw` is an edge. Rows are
/// kept symmetric and bit `v` of row `v` is never set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, m: 0, adj: alloc::vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let Edge(u, v) = e.into();
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n: adj.len(), m, adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.m += 1;
        Ok(true)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees sorted in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push(Edge(u, u + 1 + v));
            }
        }
        out
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidShape("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen >> p & 1 == 1 {
                return Err(Error::InvalidShape("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = alloc::vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n: self.n, m: self.m, adj })
    }

    /// Copy of the graph with one extra isolated vertex appended.
    pub(crate) fn with_new_vertex(&self) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooLarge { n: self.n + 1, limit: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok(Graph { n: self.n + 1, m: self.m, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
