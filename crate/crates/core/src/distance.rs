//! Hop distances by layered bit-set BFS.

use alloc::vec::Vec;

use crate::graph::Bits;
use crate::{Graph, Result};

/// Distance reported for vertex pairs in different components. Larger than any
/// real distance in a graph of at most 64 vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// Row-major `n x n` matrix of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }
}

/// Fills `out` with distances from `source`; `out.len()` must equal `g.order()`.
fn bfs_into(g: &Graph, source: usize, out: &mut [u32]) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut depth = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= g.neighbor_mask(v);
        }
        next &= !seen;
        for v in Bits(next) {
            out[v] = depth;
        }
        seen |= next;
        frontier = next;
    }
}

pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    let mut out = alloc::vec![0; g.order()];
    bfs_into(g, source, &mut out);
    Ok(out)
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = alloc::vec![0; n * n];
    for s in 0..n {
        bfs_into(g, s, &mut d[s * n..(s + 1) * n]);
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn path_and_cycle() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_distances(&p3, 0).unwrap(), vec![0, 1, 2]);

        let c5 = cycle(5);
        for s in 0..5 {
            let mut d = bfs_distances(&c5, s).unwrap();
            d.sort();
            assert_eq!(d, vec![0, 1, 1, 2, 2]);
        }
        assert!(bfs_distances(&c5, 5).is_err());
    }

    #[test]
    fn small_matrices() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = all_pairs_distances(&k4);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), (u != v) as u32);
            }
        }
        let d = all_pairs_distances(&cycle(4));
        assert_eq!(d.row(0), &[0, 1, 2, 1]);
        assert_eq!(d.get(1, 3), 2);
    }

    #[test]
    fn unreachable_marker() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert!(UNREACHABLE as usize > g.order());
        assert!(!d.is_connected());
    }
}
