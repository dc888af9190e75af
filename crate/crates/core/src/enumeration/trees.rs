//! Rooted trees up to isomorphism, generated size by size.
//!
//! A tree of size `k` is a root plus a multiset of smaller trees whose sizes
//! sum to `k - 1`. Listing child ids in nonincreasing order gives each
//! isomorphism class exactly once.

use alloc::vec::Vec;

/// Rooted tree with vertex 0 as root; `parent[i] < i` for `i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// Parent of each non-root vertex, indexed from vertex 1.
    pub fn parents(&self) -> &[usize] {
        &self.parent[1..]
    }
}

/// All rooted trees with at most `max_size` vertices.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    trees: Vec<RootedTree>,
    /// `start[k]..start[k + 1]` indexes trees of size `k`.
    start: Vec<usize>,
}

impl RootedTrees {
    pub fn up_to(max_size: usize) -> Self {
        let mut trees: Vec<RootedTree> = Vec::new();
        let mut start = alloc::vec![0, 0];
        for k in 1..=max_size {
            let mut children = Vec::new();
            let mut fresh = Vec::new();
            collect(&trees, k - 1, trees.len(), &mut children, &mut fresh);
            trees.extend(fresh);
            start.push(trees.len());
        }
        RootedTrees { trees, start }
    }

    pub fn max_size(&self) -> usize {
        self.start.len() - 2
    }

    pub fn of_size(&self, k: usize) -> &[RootedTree] {
        if k == 0 || k > self.max_size() {
            return &[];
        }
        &self.trees[self.start[k]..self.start[k + 1]]
    }
}

/// Chooses child trees (ids `< bound`, nonincreasing) with total size `remaining`.
fn collect(
    trees: &[RootedTree],
    remaining: usize,
    bound: usize,
    children: &mut Vec<usize>,
    out: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        out.push(assemble(trees, children));
        return;
    }
    for id in (0..bound).rev() {
        let size = trees[id].size();
        if size > remaining {
            continue;
        }
        children.push(id);
        collect(trees, remaining - size, id + 1, children, out);
        children.pop();
    }
}

fn assemble(trees: &[RootedTree], children: &[usize]) -> RootedTree {
    let mut parent = alloc::vec![usize::MAX];
    for &id in children {
        let offset = parent.len();
        parent.push(0);
        for &p in trees[id].parents() {
            parent.push(p + offset);
        }
    }
    RootedTree { parent }
}
