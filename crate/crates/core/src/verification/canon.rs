//! Canonical codes and isomorph-free generation of small connected graphs.
//!
//! The canonical code of a graph is the smallest upper-triangle adjacency
//! bitstring over the leaves of an individualization-refinement search tree.
//! Generation extends each canonical graph of order `n - 1` by one vertex in
//! every possible way and keeps a child only when deleting its canonically
//! last non-cut vertex gives back the parent (orderly augmentation), so no
//! global dedup table is needed.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose upper triangle fits a `u128` code.
pub const CANON_MAX_ORDER: usize = 16;

/// Orders up to which [`all_graphs`] enumerates every edge subset.
pub const ALL_GRAPHS_MAX_ORDER: usize = 6;

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect()
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Splits cells by neighbour counts into earlier cells until the partition
/// is equitable. Sub-cells are ordered by count, so the result depends only
/// on the structure, not on vertex labels.
fn refine(adj: &[u32], cells: &mut Vec<u32>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups: Vec<(u32, u32)> = Vec::new();
                for v in bits(cell) {
                    let k = (adj[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                groups.sort_unstable_by_key(|&(k, _)| k);
                next.extend(groups.into_iter().map(|(_, m)| m));
            }
            if next.len() != cells.len() {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn leaf_code(adj: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn twins(adj: &[u32], u: usize, w: usize) -> bool {
    adj[u] & !(1 << w) == adj[w] & !(1 << u)
}

struct Best {
    code: u128,
    order: Vec<usize>,
}

fn search(adj: &[u32], mut cells: Vec<u32>, best: &mut Option<Best>) {
    refine(adj, &mut cells);
    if cells.len() == adj.len() {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(adj, &order);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(Best { code, order });
        }
        return;
    }
    let idx = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
    let cell = cells[idx];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits(cell) {
        // Swapping twins in one cell is an automorphism of the current
        // partition, so their subtrees yield the same codes.
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        next[idx] = 1 << v;
        next.insert(idx + 1, cell & !(1 << v));
        search(adj, next, best);
    }
}

fn canonical_masks(adj: &[u32]) -> Best {
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = None;
    search(adj, vec![all], &mut best);
    best.expect("at least one leaf")
}

fn check_order(n: usize) -> Result<()> {
    if n > CANON_MAX_ORDER {
        return Err(Error::Envelope { order: n, max: CANON_MAX_ORDER });
    }
    Ok(())
}

/// Isomorphism-invariant code; two graphs of equal order are isomorphic iff
/// their codes are equal.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    check_order(g.order())?;
    Ok(canonical_masks(&masks(g)).code)
}

/// A canonical labelling: `perm[v]` is the new label of `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g.order())?;
    let best = canonical_masks(&masks(g));
    let mut perm = vec![0; g.order()];
    for (pos, &v) in best.order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// The representative graph with the given code.
pub fn from_code(order: usize, code: u128) -> Graph {
    let total = order * order.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(order, edges).expect("code decodes to a simple graph")
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(from_code(g.order(), canonical_code(g)?))
}

fn connected_masks(adj: &[u32], removed: usize) -> bool {
    let n = adj.len();
    let all = ((1u64 << n) - 1) as u32 & !(1 << removed);
    if all == 0 {
        return true;
    }
    let start = all.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let reach = bits(frontier).fold(0, |m, v| m | adj[v]) & all & !seen;
        seen |= reach;
        frontier = reach;
    }
    seen == all
}

fn delete_vertex(adj: &[u32], v: usize) -> Vec<u32> {
    let low = (1u32 << v) - 1;
    adj.iter().enumerate().filter(|&(u, _)| u != v).map(|(_, &m)| (m & low) | (m >> 1 & !low)).collect()
}

/// Children of one canonical parent that the parent is responsible for.
fn children(n: usize, parent: u128) -> Vec<u128> {
    let base = masks(&from_code(n - 1, parent));
    let mut out = HashSet::new();
    for subset in 1u32..1 << (n - 1) {
        let mut adj = base.clone();
        for w in bits(subset) {
            adj[w] |= 1 << (n - 1);
        }
        adj.push(subset);
        let best = canonical_masks(&adj);
        if out.contains(&best.code) {
            continue;
        }
        let last = *best
            .order
            .iter()
            .rev()
            .find(|&&v| connected_masks(&adj, v))
            .expect("a connected graph has a non-cut vertex");
        if canonical_masks(&delete_vertex(&adj, last)).code == parent {
            out.insert(best.code);
        }
    }
    out.into_iter().collect()
}

/// Canonical codes of all connected graphs of order `n`, sorted. Work is
/// spread over the current rayon pool; the result does not depend on it.
pub fn connected_codes(n: usize) -> Result<Vec<Vec<u128>>> {
    check_order(n)?;
    let mut levels: Vec<Vec<u128>> = vec![Vec::new(), vec![0]];
    for k in 2..=n {
        let mut next: Vec<u128> = levels[k - 1].par_iter().flat_map_iter(|&p| children(k, p)).collect();
        next.sort_unstable();
        levels.push(next);
    }
    levels.truncate(n + 1);
    Ok(levels)
}

/// Every graph of order `n` (connected or not), one per isomorphism class,
/// sorted by canonical code. Brute force over edge subsets.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ALL_GRAPHS_MAX_ORDER {
        return Err(Error::Envelope { order: n, max: ALL_GRAPHS_MAX_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut codes: Vec<u128> = (0u32..1 << pairs.len())
        .into_par_iter()
        .map(|s| {
            let mut adj = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if s >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            canonical_masks(&adj).code
        })
        .collect();
    codes.sort_unstable();
    codes.dedup();
    Ok(codes.into_iter().map(|c| from_code(n, c)).collect())
}
