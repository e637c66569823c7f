//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use qdb::Graph;
use rand::rngs::StdRng;
use rand::Rng;

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `p`.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Any simple graph on `n` vertices, each pair independently with `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Plain queue BFS from `s`; `None` for unreachable vertices.
pub fn bfs(g: &Graph, s: usize) -> Vec<Option<u32>> {
    let mut d = vec![None; g.order()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in g.vertices().filter(|&v| g.has_edge(u, v)) {
            if d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    d
}

/// The pairs `u < v` as bit positions, column by column.
pub fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn from_bits(n: usize, bits: u64) -> Graph {
    let pairs = pair_index(n);
    Graph::from_edges(n, pairs.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, &e)| e)).unwrap()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Smallest edge bitmask over all relabellings.
pub fn brute_min_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    let pairs = pair_index(n);
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (v, &img) in p.iter().enumerate() {
                inv[img] = v;
            }
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| g.has_edge(inv[i], inv[j]))
                .fold(0u64, |acc, (b, _)| acc | 1 << b)
        })
        .min()
        .unwrap()
}

/// Edge-transitivity by trying every permutation.
pub fn brute_edge_transitive(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let Some(&(a, b)) = edges.first() else { return true };
    let mut reached = vec![false; edges.len()];
    for p in permutations(g.order()) {
        if edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])) {
            let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
            reached[edges.iter().position(|&e| e == (x, y)).unwrap()] = true;
        }
    }
    reached.iter().all(|&r| r)
}
