use alloc::vec::Vec;

use super::{IsoClassSet, Method};
use crate::canon::canonical_form;
use crate::graph::full_mask;
use crate::structure::is_connected;
use crate::{Graph, Result};

/// Subsets of `n + 1` edges of `K_n`, split by the index of their first edge
/// in lexicographic edge order.
#[derive(Debug, Clone)]
pub struct NaiveSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `done[i]`: vertices whose every incident edge has index `< i`.
    done: Vec<u64>,
}

impl NaiveSearch {
    pub fn new(n: usize) -> Result<Self> {
        Method::Naive.check_order(n)?;
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut last = alloc::vec![0usize; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            last[u] = i;
            last[v] = i;
        }
        let done = (0..=edges.len())
            .map(|i| (0..n).filter(|&v| last[v] < i).fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Ok(NaiveSearch { n, edges, done })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn units(&self) -> usize {
        self.edges.len() + 1 - (self.n + 1)
    }

    /// Classes realized by an edge subset whose lowest edge index is `first`.
    /// A class can show up in several units.
    pub fn run_unit(&self, first: usize) -> IsoClassSet {
        let mut out = IsoClassSet::new();
        if first >= self.units() {
            return out;
        }
        let mut rows = alloc::vec![0u64; self.n];
        self.toggle(&mut rows, first);
        self.extend(&mut rows, first + 1, self.n, &mut out);
        out
    }

    fn toggle(&self, rows: &mut [u64], i: usize) {
        let (u, v) = self.edges[i];
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    }

    fn extend(&self, rows: &mut Vec<u64>, next: usize, left: usize, out: &mut IsoClassSet) {
        let covered = rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (v, &r)| acc | ((r != 0) as u64) << v);
        // a vertex with no edge and no edge left to take can never be covered
        if self.done[next] & !covered != 0 {
            return;
        }
        if left == 0 {
            if covered == full_mask(self.n) {
                let g = Graph::from_rows(rows.clone());
                if is_connected(&g) {
                    out.insert(canonical_form(&g).expect("naive orders are within canon limits"));
                }
            }
            return;
        }
        for j in next..=self.edges.len() - left {
            self.toggle(rows, j);
            self.extend(rows, j + 1, left - 1, out);
            self.toggle(rows, j);
        }
    }
}

/// Every connected bicyclic graph on `n` vertices up to isomorphism, by
/// brute force over edge subsets. `n` must lie in `4..=9`.
pub fn enumerate_naive(n: usize) -> Result<IsoClassSet> {
    let search = NaiveSearch::new(n)?;
    let mut all = IsoClassSet::new();
    for unit in 0..search.units() {
        all.merge(search.run_unit(unit));
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_naive(4).unwrap().len(), 1);
        assert_eq!(enumerate_naive(5).unwrap().len(), 5);
        assert!(enumerate_naive(3).is_err());
        assert!(enumerate_naive(10).is_err());
    }

    #[test]
    fn units_partition_the_search() {
        let s = NaiveSearch::new(5).unwrap();
        assert_eq!(s.units(), 10 - 6 + 1);
        // vertex 0 owns edges 0..4, so a first edge past them isolates it
        assert!(s.run_unit(4).is_empty());
        assert!(s.run_unit(99).is_empty());
    }
}
