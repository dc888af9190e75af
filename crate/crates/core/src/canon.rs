//! Canonical labels for small graphs.
//!
//! Vertices are first split into cells by iterated neighbor-color refinement
//! starting from degrees; cells are ranked by their refinement signature, so
//! the split does not depend on the input labeling. A branch-and-bound search
//! then orders the vertices cell by cell and keeps the lexicographically
//! greatest upper-triangle string `x(0,1), x(0,2), x(1,2), x(0,3), ...`.
//! Unplaced twins (vertices with the same neighborhood apart from each other)
//! are interchangeable, so only one of them is tried at each branch point.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Bits;
use crate::graph6::to_graph6;
use crate::{Error, Graph, Result};

/// Largest order [`canonical_form`] accepts.
pub const CANON_MAX_ORDER: usize = 16;

/// Isomorphism-invariant label of a graph on at most 16 vertices.
///
/// `bits` holds the canonical upper-triangle string left-aligned (first bit in
/// the most significant position), so the derived ordering sorts by order and
/// then lexicographically by the string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of meaningful bits in the label.
    pub fn bit_len(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1) / 2
    }

    /// Order byte followed by the packed upper-triangle string, zero-filled.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.bit_len().div_ceil(8));
        out.push(self.n);
        out.extend_from_slice(&self.bits.to_be_bytes()[..self.bit_len().div_ceil(8)]);
        out
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = alloc::vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (127 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }

    /// graph6 string of the canonical representative.
    pub fn graph6(&self) -> alloc::string::String {
        to_graph6(&self.to_graph()).expect("canonical forms have at most 16 vertices")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form plus the labeling realizing it: `position[v]` is the new
/// label of vertex `v`, so `g.relabel(&position)` equals `form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::TooLarge { n, limit: CANON_MAX_ORDER });
    }
    let colors = refine_colors(g);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| colors[v]);
    let mut search = Search {
        g,
        cell_of_position: by_color.iter().map(|&v| colors[v]).collect(),
        colors,
        order: Vec::with_capacity(n),
        cols: alloc::vec![0; n],
        best_cols: Vec::new(),
        best_order: Vec::new(),
    };
    search.run(0);

    let mut bits = 0u128;
    let mut k = 0;
    for j in 1..n {
        for i in (0..j).rev() {
            bits |= ((search.best_cols[j] >> i & 1) as u128) << (127 - k);
            k += 1;
        }
    }
    let mut position = alloc::vec![0; n];
    for (p, &v) in search.best_order.iter().enumerate() {
        position[v] = p;
    }
    Ok((CanonicalForm { n: n as u8, bits }, position))
}

/// Stable coloring from iterated refinement; color ids are ranks of sorted
/// signatures and therefore labeling-independent.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    let mut sigs: Vec<(usize, u64, usize)> = Vec::with_capacity(n);
    loop {
        // neighbor color multiset as 4-bit counts per color: colors and
        // degrees are both below 16
        sigs.clear();
        sigs.extend((0..n).map(|v| {
            let counts = g.neighbors(v).fold(0u64, |acc, w| acc + (1 << (4 * colors[w])));
            (colors[v], counts, v)
        }));
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let refined = if n == 0 { 0 } else { rank + 1 };
        if refined == classes {
            return colors;
        }
        classes = refined;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    xs.iter().fold(0u64, |acc, &x| acc | 1 << x).count_ones() as usize
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    cell_of_position: Vec<usize>,
    order: Vec<usize>,
    /// `cols[k]` has bit `k-1-i` set iff `order[i]` is adjacent to `order[k]`.
    cols: Vec<u64>,
    best_cols: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, k: usize) {
        let n = self.g.order();
        if k == n {
            if self.best_order.is_empty() || self.cols > self.best_cols {
                self.best_cols.clone_from(&self.cols);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let used: u64 = self.order.iter().fold(0, |acc, &v| acc | 1 << v);
        let mut buf = [(0u64, 0usize); CANON_MAX_ORDER];
        let mut len = 0;
        for v in (0..n).filter(|&v| used >> v & 1 == 0 && self.colors[v] == self.cell_of_position[k]) {
            buf[len] = (self.column(v), v);
            len += 1;
        }
        let candidates = &mut buf[..len];
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut tried = 0u64;
        for &(col, v) in candidates.iter() {
            if Bits(tried).any(|w| self.twins(v, w)) {
                continue;
            }
            tried |= 1 << v;
            self.cols[k] = col;
            if !self.best_order.is_empty() && self.cols[..=k] < self.best_cols[..=k] {
                // candidates are sorted by column, the rest are no better
                break;
            }
            self.order.push(v);
            self.run(k + 1);
            self.order.pop();
        }
        self.cols[k] = 0;
    }

    fn column(&self, v: usize) -> u64 {
        let k = self.order.len();
        let row = self.g.neighbor_mask(v);
        self.order
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &w)| acc | (row >> w & 1) << (k - 1 - i))
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !(1u64 << u | 1u64 << v);
        self.g.neighbor_mask(u) & mask == self.g.neighbor_mask(v) & mask
    }
}
