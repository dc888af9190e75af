use alloc::vec::Vec;

use super::trees::{RootedTree, RootedTrees};
use super::{IsoClassSet, Method};
use crate::canon::canonical_form;
use crate::constructions::{DumbbellShape, SkeletonShape, ThetaShape};
use crate::{Graph, Result};

/// Every theta and dumbbell skeleton on at most `n` vertices, each once,
/// thetas first, then in field order.
pub fn skeletons(n: usize) -> Vec<SkeletonShape> {
    let mut out = Vec::new();
    // a + b + c - 1 <= n
    for a in 1..=n {
        for b in a.max(2)..=n {
            for c in b..=(n + 1).saturating_sub(a + b) {
                out.push(SkeletonShape::Theta(ThetaShape { a, b, c }));
            }
        }
    }
    // p + q + t - 1 <= n
    for p in 3..=n {
        for q in p..=n {
            for t in 0..=(n + 1).saturating_sub(p + q) {
                if p + q + t > n + 1 {
                    break;
                }
                out.push(SkeletonShape::Dumbbell(DumbbellShape { p, q, t }));
            }
        }
    }
    out
}

/// Skeletons with rooted trees hung off their vertices; one work unit per skeleton.
#[derive(Debug, Clone)]
pub struct StructuralSearch {
    n: usize,
    skeletons: Vec<SkeletonShape>,
    trees: RootedTrees,
}

impl StructuralSearch {
    pub fn new(n: usize) -> Result<Self> {
        Method::Structural.check_order(n)?;
        // smallest skeleton has 4 vertices, so a hanging tree has at most n - 3
        Ok(StructuralSearch { n, skeletons: skeletons(n), trees: RootedTrees::up_to(n - 3) })
    }

    pub fn skeletons(&self) -> &[SkeletonShape] {
        &self.skeletons
    }

    pub fn units(&self) -> usize {
        self.skeletons.len()
    }

    pub fn run_unit(&self, unit: usize) -> IsoClassSet {
        let mut out = IsoClassSet::new();
        let Some(shape) = self.skeletons.get(unit) else {
            return out;
        };
        let base = shape.build();
        let mut rows = base.rows().to_vec();
        rows.resize(self.n, 0);
        self.hang(&mut rows, 0, base.order(), base.order(), &mut out);
        out
    }

    /// Chooses a tree for skeleton vertex `at`; `next` is the first unused vertex id.
    fn hang(&self, rows: &mut Vec<u64>, at: usize, skeleton: usize, next: usize, out: &mut IsoClassSet) {
        let left = self.n - next;
        if at == skeleton {
            if left == 0 {
                let g = Graph::from_rows(rows.clone());
                out.insert(canonical_form(&g).expect("structural orders are within canon limits"));
            }
            return;
        }
        // trivial tree: nothing hangs here
        self.hang(rows, at + 1, skeleton, next, out);
        for extra in 1..=left {
            for tree in self.trees.of_size(extra + 1) {
                attach(rows, tree, at, next);
                self.hang(rows, at + 1, skeleton, next + extra, out);
                attach(rows, tree, at, next);
            }
        }
    }
}

/// Toggles the edges of `tree` with its root at `root` and other vertices at `next..`.
fn attach(rows: &mut [u64], tree: &RootedTree, root: usize, next: usize) {
    for (i, &p) in tree.parents().iter().enumerate() {
        let child = next + i;
        let parent = if p == 0 { root } else { next + p - 1 };
        rows[child] ^= 1 << parent;
        rows[parent] ^= 1 << child;
    }
}

/// Every connected bicyclic graph on `n` vertices up to isomorphism, built
/// from skeletons. `n` must lie in `4..=12`.
pub fn enumerate_structural(n: usize) -> Result<IsoClassSet> {
    let search = StructuralSearch::new(n)?;
    let mut all = IsoClassSet::new();
    for unit in 0..search.units() {
        all.merge(search.run_unit(unit));
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn skeleton_lists() {
        assert_eq!(skeletons(4), vec![SkeletonShape::Theta(ThetaShape { a: 1, b: 2, c: 2 })]);
        assert_eq!(
            skeletons(5),
            vec![
                SkeletonShape::Theta(ThetaShape { a: 1, b: 2, c: 2 }),
                SkeletonShape::Theta(ThetaShape { a: 1, b: 2, c: 3 }),
                SkeletonShape::Theta(ThetaShape { a: 2, b: 2, c: 2 }),
                SkeletonShape::Dumbbell(DumbbellShape { p: 3, q: 3, t: 0 }),
            ]
        );
        let s6 = skeletons(6);
        assert!(s6.contains(&SkeletonShape::Theta(ThetaShape { a: 2, b: 2, c: 3 })));
        assert!(s6.contains(&SkeletonShape::Dumbbell(DumbbellShape { p: 3, q: 3, t: 1 })));
        for n in 4..=12 {
            for s in skeletons(n) {
                assert!(s.order() <= n);
                if let SkeletonShape::Theta(t) = s {
                    assert!(t.b >= 2 && t.a <= t.b && t.b <= t.c);
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_structural(4).unwrap().len(), 1);
        assert_eq!(enumerate_structural(5).unwrap().len(), 5);
        assert!(enumerate_structural(13).is_err());
    }
}
