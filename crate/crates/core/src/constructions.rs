//! Builders for the bicyclic families used throughout the crate, and the
//! per-edge balance analyzer for theta graphs.
//!
//! Numbering conventions are fixed so edges can be named in tests:
//!
//! * `build_bn(n)`: cycle `0..n-1` (vertices `0..=n-2`), duplicate `n-1` of
//!   vertex `0`, adjacent to `1` and `n-2`.
//! * `build_theta(a, b, c)`: hubs `x = 0` and `y = 1`, then the interior
//!   vertices of the `a`, `b` and `c` paths in order, each walked from `x`.
//! * `build_dumbbell(p, q, t)`: first cycle on `0..p` with junction `0`, then
//!   the `t - 1` interior path vertices, then the second cycle starting at its
//!   junction (`0` itself when `t = 0`).

use alloc::vec::Vec;
use core::fmt;

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::indices::edge_partition;
use crate::structure::shortest_cycle_through_edge;
use crate::{Edge, Error, Graph, Result, MAX_VERTICES};

/// Three internally disjoint hub-to-hub paths of lengths `a <= b <= c`, `b >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaShape {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ThetaShape {
    /// Sorts the lengths and checks the result describes a simple graph.
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut l = [a, b, c];
        l.sort_unstable();
        let [a, b, c] = l;
        if a == 0 {
            return Err(Error::InvalidShape("theta paths must have length at least 1"));
        }
        if b < 2 {
            return Err(Error::InvalidShape("two theta paths of length 1 form a multi-edge"));
        }
        let shape = ThetaShape { a, b, c };
        if shape.order() > MAX_VERTICES {
            return Err(Error::TooLarge { n: shape.order(), limit: MAX_VERTICES });
        }
        Ok(shape)
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c - 1
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    /// Vertex sequences of the three paths, each from hub `0` to hub `1`.
    pub fn paths(&self) -> [Vec<usize>; 3] {
        let mut next = 2;
        self.lengths().map(|len| {
            let mut p = Vec::with_capacity(len + 1);
            p.push(0);
            for _ in 1..len {
                p.push(next);
                next += 1;
            }
            p.push(1);
            p
        })
    }

    pub fn build(&self) -> Graph {
        let mut g = Graph::empty(self.order()).expect("order checked in ThetaShape::new");
        for p in self.paths() {
            for w in p.windows(2) {
                g.add_edge(w[0], w[1]).expect("theta path vertices are in range");
            }
        }
        g
    }
}

/// Cycles `C_p` and `C_q`, `3 <= p <= q`, joined by a path of length `t`
/// (`t = 0` shares one vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DumbbellShape {
    pub p: usize,
    pub q: usize,
    pub t: usize,
}

impl DumbbellShape {
    pub fn new(p: usize, q: usize, t: usize) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        if p < 3 {
            return Err(Error::InvalidShape("dumbbell cycles need length at least 3"));
        }
        let shape = DumbbellShape { p, q, t };
        if shape.order() > MAX_VERTICES {
            return Err(Error::TooLarge { n: shape.order(), limit: MAX_VERTICES });
        }
        Ok(shape)
    }

    pub fn order(&self) -> usize {
        self.p + self.q + self.t - 1
    }

    /// Junction vertices `(u, v)` on the first and second cycle.
    pub fn junctions(&self) -> (usize, usize) {
        (0, if self.t == 0 { 0 } else { self.p + self.t - 1 })
    }

    pub fn build(&self) -> Graph {
        let mut g = Graph::empty(self.order()).expect("order checked in DumbbellShape::new");
        let mut add = |u, v| {
            g.add_edge(u, v).expect("dumbbell vertices are in range");
        };
        for i in 0..self.p {
            add(i, (i + 1) % self.p);
        }
        let mut prev = 0;
        for k in 0..self.t {
            add(prev, self.p + k);
            prev = self.p + k;
        }
        let (_, v) = self.junctions();
        let mut ring = Vec::with_capacity(self.q);
        ring.push(v);
        ring.extend(self.p + self.t..self.p + self.t + self.q - 1);
        for i in 0..self.q {
            add(ring[i], ring[(i + 1) % self.q]);
        }
        g
    }
}

/// Skeleton of a connected bicyclic graph with minimum degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SkeletonShape {
    Theta(ThetaShape),
    Dumbbell(DumbbellShape),
}

impl SkeletonShape {
    pub fn order(&self) -> usize {
        match self {
            SkeletonShape::Theta(s) => s.order(),
            SkeletonShape::Dumbbell(s) => s.order(),
        }
    }

    pub fn build(&self) -> Graph {
        match self {
            SkeletonShape::Theta(s) => s.build(),
            SkeletonShape::Dumbbell(s) => s.build(),
        }
    }
}

impl fmt::Display for SkeletonShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkeletonShape::Theta(s) => write!(f, "theta({},{},{})", s.a, s.b, s.c),
            SkeletonShape::Dumbbell(s) => write!(f, "dumbbell({},{},{})", s.p, s.q, s.t),
        }
    }
}

/// `C_{n-1}` with one vertex duplicated.
pub fn build_bn(n: usize) -> Result<Graph> {
    if !(5..=MAX_VERTICES).contains(&n) {
        return Err(Error::OutOfRange { n, min: 5, max: MAX_VERTICES });
    }
    let c = n - 1;
    let mut g = Graph::empty(n)?;
    for i in 0..c {
        g.add_edge(i, (i + 1) % c)?;
    }
    g.add_edge(n - 1, 1)?;
    g.add_edge(n - 1, c - 1)?;
    Ok(g)
}

pub fn build_theta(a: usize, b: usize, c: usize) -> Result<Graph> {
    Ok(ThetaShape::new(a, b, c)?.build())
}

pub fn build_dumbbell(p: usize, q: usize, t: usize) -> Result<Graph> {
    Ok(DumbbellShape::new(p, q, t)?.build())
}

/// Adds a new vertex `g.order()` adjacent only to `at`.
pub fn attach_pendant(g: &Graph, at: usize) -> Result<Graph> {
    g.check_vertex(at)?;
    let mut h = g.with_new_vertex()?;
    h.add_edge(at, g.order())?;
    Ok(h)
}

/// Where the two hubs fall in the partition of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaEdgeCase {
    /// One hub strictly closer to each endpoint; `|n_u - n_v| = |b_i - a_i|`.
    DifferentSets,
    /// Both hubs strictly closer to the same endpoint; `|n_u - n_v| = n - g`.
    SameSet,
    /// One hub equidistant; `|n_u - n_v| >= a - 1`.
    HubEquidistant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaEdgeAnalysis {
    pub edge: Edge,
    /// Index (0, 1, 2) of the path carrying the edge, matching `(a, b, c)`.
    pub path: usize,
    /// Distance along that path from hub `x` to the nearer endpoint.
    pub position: usize,
    pub case: ThetaEdgeCase,
    /// Graph distance from hub `x` to the edge (min over endpoints).
    pub hub_x_distance: usize,
    /// Graph distance from hub `y` to the edge.
    pub hub_y_distance: usize,
    /// Shortest cycle through the edge.
    pub girth_through: usize,
    /// Exact value for the first two cases, lower bound for the third.
    pub predicted: usize,
    pub actual: usize,
    /// The edge sits in the middle of an odd-length hub-to-hub path.
    pub middle_of_odd_path: bool,
}

impl ThetaEdgeAnalysis {
    /// Whether the case formula holds for this edge.
    pub fn formula_holds(&self) -> bool {
        match self.case {
            ThetaEdgeCase::DifferentSets | ThetaEdgeCase::SameSet => self.actual == self.predicted,
            ThetaEdgeCase::HubEquidistant => self.actual >= self.predicted,
        }
    }
}

pub fn analyze_theta_edge(shape: ThetaShape, e: Edge) -> Result<ThetaEdgeAnalysis> {
    let g = shape.build();
    let dist = all_pairs_distances(&g);
    analyze_with(&shape, &g, &dist, e)
}

/// Analysis of every edge of `shape`, in edge order.
pub fn analyze_theta(shape: ThetaShape) -> Vec<ThetaEdgeAnalysis> {
    let g = shape.build();
    let dist = all_pairs_distances(&g);
    g.edges()
        .into_iter()
        .map(|e| analyze_with(&shape, &g, &dist, e).expect("edges come from the graph"))
        .collect()
}

fn analyze_with(
    shape: &ThetaShape,
    g: &Graph,
    dist: &DistanceMatrix,
    e: Edge,
) -> Result<ThetaEdgeAnalysis> {
    let part = edge_partition(g, e, dist)?;
    let Edge(u, v) = e;
    let (x, y) = (0, 1);

    let (path, position, len) = shape
        .paths()
        .iter()
        .enumerate()
        .find_map(|(i, p)| {
            p.windows(2)
                .position(|w| Edge::new(w[0], w[1]) == e)
                .map(|pos| (i, pos, p.len() - 1))
        })
        .expect("every theta edge lies on one path");

    let side = |h: usize| dist.get(u, h).cmp(&dist.get(v, h));
    let to_edge = |h: usize| dist.get(u, h).min(dist.get(v, h)) as usize;
    let (sx, sy) = (side(x), side(y));
    let (hub_x_distance, hub_y_distance) = (to_edge(x), to_edge(y));
    let girth_through = shortest_cycle_through_edge(g, e)?;

    use core::cmp::Ordering::Equal;
    let (case, predicted) = if sx == Equal || sy == Equal {
        (ThetaEdgeCase::HubEquidistant, shape.a - 1)
    } else if sx != sy {
        (ThetaEdgeCase::DifferentSets, hub_x_distance.abs_diff(hub_y_distance))
    } else {
        (ThetaEdgeCase::SameSet, g.order() - girth_through)
    };

    Ok(ThetaEdgeAnalysis {
        edge: e,
        path,
        position,
        case,
        hub_x_distance,
        hub_y_distance,
        girth_through,
        predicted,
        actual: part.deviation().unsigned_abs() as usize,
        middle_of_odd_path: len % 2 == 1 && position == (len - 1) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{classify_bicyclic, cut_vertices, min_degree, BicyclicClass};

    #[test]
    fn bn_shape() {
        let b6 = build_bn(6).unwrap();
        assert_eq!((b6.order(), b6.size()), (6, 7));
        assert_eq!(b6.degree_sequence(), alloc::vec![3, 3, 2, 2, 2, 2]);
        assert_eq!(
            classify_bicyclic(&b6).unwrap(),
            BicyclicClass::Theta { x: 1, y: 4, a: 2, b: 2, c: 3 }
        );
        assert!(build_bn(4).is_err());
        assert!(build_bn(65).is_err());
    }

    #[test]
    fn theta_layout() {
        let shape = ThetaShape::new(2, 1, 2).unwrap();
        assert_eq!(shape, ThetaShape { a: 1, b: 2, c: 2 });
        assert_eq!(shape.paths(), [alloc::vec![0, 1], alloc::vec![0, 2, 1], alloc::vec![0, 3, 1]]);
        let k23 = build_theta(2, 2, 2).unwrap();
        assert_eq!(k23.degree_sequence(), alloc::vec![3, 3, 2, 2, 2]);
        assert!(k23.edges().iter().all(|e| e.0 <= 1 && e.1 >= 2));
        assert!(build_theta(1, 1, 3).is_err());
        assert!(build_theta(0, 2, 3).is_err());
    }

    #[test]
    fn dumbbell_layout() {
        let bowtie = build_dumbbell(3, 3, 0).unwrap();
        assert_eq!((bowtie.order(), bowtie.size()), (5, 6));
        assert_eq!(cut_vertices(&bowtie).unwrap(), alloc::vec![0]);

        let d = build_dumbbell(3, 3, 1).unwrap();
        assert_eq!((d.order(), d.size()), (6, 7));
        assert_eq!(min_degree(&d), 2);
        assert!(matches!(classify_bicyclic(&d).unwrap(), BicyclicClass::CutVertex { .. }));
        assert_eq!(DumbbellShape::new(5, 3, 2).unwrap().junctions(), (0, 4));
        assert!(build_dumbbell(2, 3, 0).is_err());
    }

    #[test]
    fn pendant_attachment() {
        let b6 = build_bn(6).unwrap();
        let g = attach_pendant(&b6, 2).unwrap();
        assert_eq!((g.order(), g.size()), (7, 8));
        assert_eq!(classify_bicyclic(&g).unwrap(), BicyclicClass::Pendant { vertex: 6 });
        assert!(attach_pendant(&b6, 6).is_err());
    }

    #[test]
    fn analyzer_cases() {
        // middle edge of each length-3 path
        let s = ThetaShape::new(3, 3, 3).unwrap();
        let mids: Vec<_> = analyze_theta(s).into_iter().filter(|r| r.middle_of_odd_path).collect();
        assert_eq!(mids.len(), 3);
        for r in mids {
            assert_eq!(r.case, ThetaEdgeCase::DifferentSets);
            assert_eq!((r.hub_x_distance, r.hub_y_distance, r.predicted, r.actual), (1, 1, 0, 0));
        }

        // Θ(1,2,6): long path 0,4,5,6,7,8,1 - edge 4 steps from x is 7-8
        let s = ThetaShape::new(1, 2, 6).unwrap();
        assert_eq!(s.paths()[2], alloc::vec![0, 3, 4, 5, 6, 7, 1]);
        let r = analyze_theta_edge(s, Edge(6, 7)).unwrap();
        assert_eq!(r.position, 4);
        assert_eq!(r.case, ThetaEdgeCase::SameSet);
        assert_eq!((r.girth_through, r.predicted, r.actual), (7, 1, 1));

        // Θ(1,2,4): long path 0,3,4,5,1; edge 3-4 has hub y at distance 2 from both ends
        let s = ThetaShape::new(1, 2, 4).unwrap();
        let r = analyze_theta_edge(s, Edge(3, 4)).unwrap();
        assert_eq!(r.case, ThetaEdgeCase::HubEquidistant);
        assert_eq!(r.predicted, 0);
        assert!(r.formula_holds());
        assert_eq!(analyze_theta_edge(s, Edge(0, 1)).unwrap().girth_through, 3);
    }
}
