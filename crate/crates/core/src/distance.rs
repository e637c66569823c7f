use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs hop distances of a connected graph, stored as a dense table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

/// BFS distances from `src`; `None` for unreachable vertices.
pub fn bfs(g: &Graph, src: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

impl DistanceMatrix {
    /// BFS from every vertex. Fails with an unreachable witness pair when
    /// `g` is disconnected.
    pub fn new(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.order();
        let mut dist = Vec::with_capacity(n * n);
        for s in g.vertices() {
            for (t, d) in bfs(g, s).into_iter().enumerate() {
                match d {
                    Some(d) => dist.push(d),
                    None => return Err(Error::Disconnected(s, t)),
                }
            }
        }
        Ok(DistanceMatrix { order: n, dist })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Unordered pairs `u < v` at distance exactly `n`.
    pub fn pairs_at(&self, n: u32) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| (u + 1..self.order).filter(move |&v| self.get(u, v) == n).map(move |v| (u, v)))
    }
}
