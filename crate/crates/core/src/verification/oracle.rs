//! A deliberately naive second implementation used to re-check findings:
//! Floyd–Warshall distances and W-sets built by explicit comparison.

use std::collections::BTreeSet;

use crate::balance::{Classification, PairRecord};
use crate::graph::Graph;

/// Dense distances, or `None` if `g` is disconnected.
pub fn floyd_warshall(g: &Graph) -> Option<Vec<Vec<u32>>> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.iter().all(|row| row.iter().all(|&x| x < inf)).then_some(d)
}

pub fn classify(d: &[Vec<u32>], n: u32) -> Classification {
    let order = d.len();
    let mut pairs = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if d[u][v] != n {
                continue;
            }
            let w_u: Vec<usize> = (0..order).filter(|&x| d[x][u] < d[x][v]).collect();
            let w_v: Vec<usize> = (0..order).filter(|&x| d[x][v] < d[x][u]).collect();
            let equidistant = order - w_u.len() - w_v.len();
            pairs.push(PairRecord { u, v, w_u: w_u.len(), w_v: w_v.len(), equidistant });
        }
    }
    Classification::from_pairs(n, &pairs)
}

pub fn degree_set_size(g: &Graph) -> usize {
    g.vertices().map(|v| g.vertices().filter(|&w| g.has_edge(v, w)).count()).collect::<BTreeSet<_>>().len()
}

pub fn total_distance_set_size(d: &[Vec<u32>]) -> usize {
    d.iter().map(|row| row.iter().map(|&x| u64::from(x)).sum::<u64>()).collect::<BTreeSet<_>>().len()
}

/// A connected graph is bipartite iff no edge has endpoints equidistant from
/// vertex 0.
pub fn is_bipartite(d: &[Vec<u32>]) -> bool {
    let n = d.len();
    (0..n).all(|u| (0..n).all(|v| d[u][v] != 1 || d[0][u] != d[0][v]))
}
