//! Connectivity, articulation points, degrees and the three-way structural
//! split of connected bicyclic graphs.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{full_mask, Bits};
use crate::{Edge, Error, Graph, Result};

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= g.neighbor_mask(v);
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen == full_mask(n)
}

/// Smallest vertex degree, 0 for the empty graph.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Articulation points in increasing order (Hopcroft–Tarjan low-link).
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = alloc::vec![UNSEEN; n];
    let mut low = alloc::vec![0usize; n];
    let mut is_cut = 0u64;
    let mut time = 0;

    // (vertex, parent, neighbors still to visit)
    let mut stack: Vec<(usize, usize, u64)> = Vec::with_capacity(n);
    disc[0] = time;
    low[0] = time;
    time += 1;
    stack.push((0, UNSEEN, g.neighbor_mask(0)));
    let mut root_children = 0;

    while let Some(top) = stack.last_mut() {
        let (v, parent, pending) = *top;
        if pending != 0 {
            let w = pending.trailing_zeros() as usize;
            top.2 &= pending - 1;
            if disc[w] == UNSEEN {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, g.neighbor_mask(w)));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut |= 1 << parent;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut |= 1;
    }
    Ok(Bits(is_cut).collect())
}

/// Length of the shortest cycle through edge `e`: one plus the distance
/// between its endpoints once `e` itself is removed.
pub fn shortest_cycle_through_edge(g: &Graph, e: Edge) -> Result<usize> {
    let Edge(u, v) = e;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotPresent(u, v));
    }
    let row = |x: usize| {
        let mut r = g.neighbor_mask(x);
        if x == u {
            r &= !(1 << v);
        } else if x == v {
            r &= !(1 << u);
        }
        r
    };
    let mut seen = 1u64 << u;
    let mut frontier = seen;
    let mut depth = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0;
        for x in Bits(frontier) {
            next |= row(x);
        }
        next &= !seen;
        if next >> v & 1 == 1 {
            return Ok(depth + 1);
        }
        seen |= next;
        frontier = next;
    }
    Err(Error::Bridge(u, v))
}

/// Which of the three structural cases a connected bicyclic graph falls in,
/// with a witness for each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BicyclicClass {
    /// Minimum degree 1; `vertex` is the smallest degree-1 vertex.
    Pendant { vertex: usize },
    /// Minimum degree at least 2 with an articulation point; `vertex` is the smallest one.
    CutVertex { vertex: usize },
    /// 2-connected: hubs `x < y` of degree 3 joined by paths of lengths `a <= b <= c`.
    Theta { x: usize, y: usize, a: usize, b: usize, c: usize },
}

impl BicyclicClass {
    /// Short machine-friendly tag, e.g. `pendant`, `cut-vertex`, `theta(2,2,3)`.
    pub fn kind(&self) -> &'static str {
        match self {
            BicyclicClass::Pendant { .. } => "pendant",
            BicyclicClass::CutVertex { .. } => "cut-vertex",
            BicyclicClass::Theta { .. } => "theta",
        }
    }
}

impl fmt::Display for BicyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BicyclicClass::Theta { a, b, c, .. } => write!(f, "theta({a},{b},{c})"),
            _ => f.write_str(self.kind()),
        }
    }
}

pub fn is_bicyclic(g: &Graph) -> bool {
    g.size() == g.order() + 1 && is_connected(g)
}

pub fn classify_bicyclic(g: &Graph) -> Result<BicyclicClass> {
    let (n, m) = (g.order(), g.size());
    let connected = is_connected(g);
    if !connected || m != n + 1 {
        return Err(Error::NotBicyclic { n, m, connected });
    }
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) == 1) {
        return Ok(BicyclicClass::Pendant { vertex });
    }
    if let Some(&vertex) = cut_vertices(g)?.first() {
        return Ok(BicyclicClass::CutVertex { vertex });
    }

    // 2-connected with cyclomatic number 2: exactly two degree-3 hubs, the
    // rest of degree 2.
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    let (x, y) = match hubs[..] {
        [x, y] if (0..n).all(|v| v == x || v == y || g.degree(v) == 2) => (x, y),
        _ => return Err(Error::InvalidShape("2-connected bicyclic graph without two degree-3 hubs")),
    };
    let mut lengths: Vec<usize> = g
        .neighbors(x)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (x, first, 1);
            while cur != y {
                let next = (g.neighbor_mask(cur) & !(1 << prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    lengths.sort_unstable();
    Ok(BicyclicClass::Theta { x, y, a: lengths[0], b: lengths[1], c: lengths[2] })
}
