//! Automorphisms by backtracking over vertices in BFS order, pruned by a
//! (degree, sorted distance row) invariant.

use crate::distance::bfs;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const AUTOMORPHISM_MAX_ORDER: usize = 12;

struct Search<'a> {
    g: &'a Graph,
    invariant: Vec<(usize, Vec<u32>)>,
    /// Vertices in assignment order.
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, first: &[usize]) -> Result<Search<'a>> {
        if g.order() > AUTOMORPHISM_MAX_ORDER {
            return Err(Error::Envelope { order: g.order(), max: AUTOMORPHISM_MAX_ORDER });
        }
        let invariant = g
            .vertices()
            .map(|v| {
                let mut row: Vec<u32> = bfs(g, v).into_iter().map(|d| d.unwrap_or(u32::MAX)).collect();
                row.sort_unstable();
                (g.degree(v), row)
            })
            .collect();
        // BFS order keeps each new vertex adjacent to an assigned one where
        // possible, so adjacency checks prune early. Pinned vertices go first.
        let n = g.order();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &f in first {
            if !std::mem::replace(&mut seen[f], true) {
                order.push(f);
            }
        }
        let mut head = 0;
        loop {
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if !std::mem::replace(&mut seen[w], true) {
                        order.push(w);
                    }
                }
            }
            match (0..n).find(|&v| !seen[v]) {
                Some(v) => {
                    seen[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
        Ok(Search { g, invariant, order })
    }

    fn fits(&self, map: &[usize], pos: usize, image: usize) -> bool {
        let v = self.order[pos];
        if self.invariant[v] != self.invariant[image] {
            return false;
        }
        self.order[..pos].iter().all(|&u| self.g.has_edge(u, v) == self.g.has_edge(map[u], image))
    }

    /// Calls `visit` on every completion of `map`; stops once `visit`
    /// returns false. Returns false if stopped.
    fn extend(
        &self,
        map: &mut [usize],
        used: &mut [bool],
        pos: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == self.order.len() {
            return visit(map);
        }
        let v = self.order[pos];
        if map[v] != usize::MAX {
            // Pinned in advance.
            return !self.fits(map, pos, map[v]) || self.extend(map, used, pos + 1, visit);
        }
        for image in self.g.vertices() {
            if used[image] || !self.fits(map, pos, image) {
                continue;
            }
            map[v] = image;
            used[image] = true;
            let go_on = self.extend(map, used, pos + 1, visit);
            used[image] = false;
            map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Every automorphism, as `perm[v] = image of v`, in lexicographic order.
/// The list can be as large as `order!`; use [`is_edge_transitive`] or
/// [`find_automorphism`] for existence questions.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let s = Search::new(g, &[])?;
    let n = g.order();
    let mut out = Vec::new();
    s.extend(&mut vec![usize::MAX; n], &mut vec![false; n], 0, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out.sort_unstable();
    Ok(out)
}

/// An automorphism sending each `pins[i].0` to `pins[i].1`, if one exists.
pub fn find_automorphism(g: &Graph, pins: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    for &(a, b) in pins {
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange { vertex: a.max(b), order: n });
        }
    }
    let firsts: Vec<usize> = pins.iter().map(|p| p.0).collect();
    let s = Search::new(g, &firsts)?;
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(a, b) in pins {
        if (map[a] != usize::MAX && map[a] != b) || (used[b] && map[a] != b) {
            return Ok(None);
        }
        map[a] = b;
        used[b] = true;
    }
    let mut found = None;
    s.extend(&mut map, &mut used, 0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    Ok(found)
}

/// True iff the automorphism group is transitive on edges as unordered
/// pairs. Edgeless graphs count as edge-transitive.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    if g.order() > AUTOMORPHISM_MAX_ORDER {
        return Err(Error::Envelope { order: g.order(), max: AUTOMORPHISM_MAX_ORDER });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let Some(&(a, b)) = edges.first() else {
        return Ok(true);
    };
    for &(x, y) in &edges[1..] {
        let hit =
            find_automorphism(g, &[(a, x), (b, y)])?.is_some() || find_automorphism(g, &[(a, y), (b, x)])?.is_some();
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, complete_graph, cycle, g4, incidence_k4, path, star};

    fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
        q.iter().map(|&x| p[x]).collect()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(automorphisms(&complete_graph(3).unwrap()).unwrap().len(), 6);
        assert_eq!(automorphisms(&path(3).unwrap()).unwrap().len(), 2);
        assert_eq!(automorphisms(&cycle(4).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&incidence_k4()).unwrap().len(), 24);
        assert_eq!(automorphisms(&complete_bipartite(2, 3).unwrap()).unwrap().len(), 12);
    }

    #[test]
    fn group_is_closed() {
        let g = cycle(6).unwrap();
        let auts = automorphisms(&g).unwrap();
        assert_eq!(auts.len(), 12);
        for p in &auts {
            assert_eq!(g.relabel(p), g);
            for q in &auts {
                assert!(auts.binary_search(&compose(p, q)).is_ok());
            }
            let mut inv = vec![0; p.len()];
            for (v, &img) in p.iter().enumerate() {
                inv[img] = v;
            }
            assert!(auts.binary_search(&inv).is_ok());
        }
    }

    #[test]
    fn pinned_search() {
        let g = path(4).unwrap();
        assert_eq!(find_automorphism(&g, &[(0, 3)]).unwrap(), Some(vec![3, 2, 1, 0]));
        assert_eq!(find_automorphism(&g, &[(0, 1)]).unwrap(), None);
        assert_eq!(find_automorphism(&g, &[(0, 0), (1, 2)]).unwrap(), None);
    }

    #[test]
    fn edge_transitivity() {
        assert!(is_edge_transitive(&complete_bipartite(2, 3).unwrap()).unwrap());
        assert!(!is_edge_transitive(&path(4).unwrap()).unwrap());
        assert!(is_edge_transitive(&cycle(6).unwrap()).unwrap());
        assert!(is_edge_transitive(&star(4).unwrap()).unwrap());
        assert!(is_edge_transitive(&g4().graph).unwrap());
        assert!(automorphisms(&Graph::empty(13).unwrap()).is_err());
    }
}
