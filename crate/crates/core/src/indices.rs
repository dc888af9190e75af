//! Edge partitions and the Wiener, Szeged and revised Szeged indices.
//!
//! The revised Szeged index is a multiple of 1/4, so it is carried as a
//! [`QuarterValue`] holding four times the value. Nothing in this module
//! touches floating point.

use alloc::vec::Vec;
use core::fmt;

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::{Edge, Error, Graph, Result};

/// An exact multiple of 1/4, stored as the integer `4 * value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuarterValue(pub u64);

impl QuarterValue {
    #[inline]
    pub fn quarters(self) -> u64 {
        self.0
    }

    /// Integer part and remaining quarters.
    pub fn split(self) -> (u64, u64) {
        (self.0 / 4, self.0 % 4)
    }
}

/// Renders exactly: `61.5`, `96`, `18.75`.
impl fmt::Display for QuarterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (whole, rem) = self.split();
        match rem {
            0 => write!(f, "{whole}"),
            1 => write!(f, "{whole}.25"),
            2 => write!(f, "{whole}.5"),
            _ => write!(f, "{whole}.75"),
        }
    }
}

/// How the vertices split relative to one edge `uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePartition {
    pub edge: Edge,
    /// Strictly closer to `edge.0`.
    pub n_u: usize,
    /// Strictly closer to `edge.1`.
    pub n_v: usize,
    /// Equidistant from both endpoints.
    pub n_0: usize,
}

impl EdgePartition {
    #[inline]
    pub fn deviation(&self) -> i64 {
        self.n_u as i64 - self.n_v as i64
    }

    /// `(2 n_u + n_0)(2 n_v + n_0)`, four times the revised Szeged term.
    #[inline]
    pub fn revised_term_x4(&self) -> u64 {
        ((2 * self.n_u + self.n_0) * (2 * self.n_v + self.n_0)) as u64
    }
}

pub fn edge_partition(g: &Graph, e: Edge, dist: &DistanceMatrix) -> Result<EdgePartition> {
    let Edge(u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotPresent(u, v));
    }
    let (du, dv) = (dist.row(u), dist.row(v));
    let (mut n_u, mut n_v, mut n_0) = (0, 0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            core::cmp::Ordering::Less => n_u += 1,
            core::cmp::Ordering::Greater => n_v += 1,
            core::cmp::Ordering::Equal => n_0 += 1,
        }
    }
    Ok(EdgePartition { edge: e, n_u, n_v, n_0 })
}

/// Partitions for every edge of a connected graph, in edge order.
pub fn edge_partitions(g: &Graph) -> Result<Vec<EdgePartition>> {
    let dist = connected_distances(g)?;
    g.edges().into_iter().map(|e| edge_partition(g, e, &dist)).collect()
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dist = all_pairs_distances(g);
    if dist.is_connected() {
        Ok(dist)
    } else {
        Err(Error::Disconnected)
    }
}

pub fn wiener(g: &Graph) -> Result<u64> {
    let dist = connected_distances(g)?;
    let n = g.order();
    Ok((0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| dist.get(u, v) as u64)
        .sum())
}

pub fn szeged(g: &Graph) -> Result<u64> {
    Ok(edge_partitions(g)?.iter().map(|p| (p.n_u * p.n_v) as u64).sum())
}

/// Four times the revised Szeged index.
pub fn revised_szeged_x4(g: &Graph) -> Result<QuarterValue> {
    Ok(QuarterValue(edge_partitions(g)?.iter().map(EdgePartition::revised_term_x4).sum()))
}

/// Sum over edges of `(n_u - n_v)^2`.
pub fn deviation_sum(g: &Graph) -> Result<u64> {
    Ok(edge_partitions(g)?.iter().map(|p| p.deviation().pow(2) as u64).sum())
}

/// All index values of one graph from a single distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexSummary {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged: QuarterValue,
    pub deviation_sum: u64,
}

pub fn summarize(g: &Graph) -> Result<IndexSummary> {
    let dist = connected_distances(g)?;
    let n = g.order();
    let wiener = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| dist.get(u, v) as u64)
        .sum();
    let (mut szeged, mut revised, mut dev) = (0, 0, 0);
    for e in g.edges() {
        let p = edge_partition(g, e, &dist)?;
        szeged += (p.n_u * p.n_v) as u64;
        revised += p.revised_term_x4();
        dev += p.deviation().pow(2) as u64;
    }
    Ok(IndexSummary {
        n,
        m: g.size(),
        wiener,
        szeged,
        revised_szeged: QuarterValue(revised),
        deviation_sum: dev,
    })
}

/// Four times the conjectured maximum of the revised Szeged index over
/// connected bicyclic graphs of order `n >= 6`.
pub fn conjecture_bound_x4(n: usize) -> Result<QuarterValue> {
    if n < 6 {
        return Err(Error::OutOfRange { n, min: 6, max: usize::MAX });
    }
    let n = n as u64;
    let base = n * n * n + n * n - n;
    Ok(QuarterValue(if n % 2 == 1 { base - 1 } else { base }))
}

/// `4 Sz*(G) - (n^3 + n^2 - deviation_sum(G))` for a bicyclic graph; zero
/// whenever the identity holds.
pub fn eq1_residual(g: &Graph) -> Result<i64> {
    let (n, m) = (g.order(), g.size());
    if m != n + 1 {
        return Err(Error::NotBicyclic { n, m, connected: crate::structure::is_connected(g) });
    }
    let s = summarize(g)?;
    let n = n as i64;
    Ok(s.revised_szeged.0 as i64 - (n * n * n + n * n - s.deviation_sum as i64))
}
