#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use revsz_core::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random labeled tree: each vertex after the first picks a random earlier parent,
/// then labels are shuffled.
pub fn random_tree(rng: &mut StdRng, n: usize) -> Vec<(usize, usize)> {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    (1..n).map(|v| (labels[rng.gen_range(0..v)], labels[v])).collect()
}

/// Random connected graph: a random spanning tree plus `extra` random edges.
pub fn random_connected(rng: &mut StdRng, n: usize, extra: usize) -> Graph {
    let mut edges = random_tree(rng, n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected bipartite graph: a tree plus extra edges between its color classes.
pub fn random_bipartite(rng: &mut StdRng, n: usize, extra: usize) -> Graph {
    let tree = random_tree(rng, n);
    let g = Graph::from_edges(n, tree.iter().copied()).unwrap();
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if side[w] == usize::MAX {
                side[w] = 1 - side[v];
                stack.push(w);
            }
        }
    }
    let mut edges = tree;
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if side[u] != side[v] {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Floyd–Warshall distances, `u32::MAX` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Graph with vertex `x` deleted, remaining vertices renumbered in order.
pub fn delete_vertex(g: &Graph, x: usize) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| v != x).collect();
    let index = |v: usize| keep.iter().position(|&k| k == v).unwrap();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| e.0 != x && e.1 != x)
        .map(|e| (index(e.0), index(e.1)))
        .collect();
    Graph::from_edges(g.order() - 1, edges).unwrap()
}

/// Per-edge revised Szeged terms computed directly from Floyd–Warshall distances,
/// as four times the value.
pub fn brute_revised_x4(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    g.edges()
        .iter()
        .map(|e| {
            let (mut nu, mut nv, mut n0) = (0u64, 0u64, 0u64);
            for w in 0..g.order() {
                match d[e.0][w].cmp(&d[e.1][w]) {
                    std::cmp::Ordering::Less => nu += 1,
                    std::cmp::Ordering::Greater => nv += 1,
                    std::cmp::Ordering::Equal => n0 += 1,
                }
            }
            (2 * nu + n0) * (2 * nv + n0)
        })
        .sum()
}
