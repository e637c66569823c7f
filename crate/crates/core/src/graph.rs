//! Immutable simple undirected graphs on the dense vertex set `0..order`.

use std::collections::VecDeque;
use std::fmt;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are `0..order`.
///
/// Adjacency is kept twice: sorted neighbour lists for iteration and a dense
/// boolean matrix for constant-time edge queries. Both are fixed at
/// construction time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph> {
        Graph::from_edges(order, std::iter::empty())
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut matrix = vec![false; order * order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            matrix[u * order + v] = true;
            matrix[v * order + u] = true;
        }
        let adj = (0..order).map(|u| (0..order).filter(|&v| matrix[u * order + v]).collect()).collect();
        Ok(Graph { order, adj, matrix })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.matrix[u * self.order + v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A proper 2-colouring if one exists. Each component's smallest vertex
    /// gets colour 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        self.two_colour().ok()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colour().is_ok()
    }

    /// An odd cycle as a vertex sequence (consecutive entries adjacent, last
    /// adjacent to first), or `None` when the graph is bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        self.two_colour().err()
    }

    fn two_colour(&self) -> std::result::Result<Vec<u8>, Vec<usize>> {
        let n = self.order;
        let mut colour = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in self.vertices() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return Err(tree_cycle(u, w, &parent, &depth));
                    }
                }
            }
        }
        Ok(colour)
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(DistanceMatrix::new(self)?.diameter())
    }

    /// The same graph with one edge deleted. Panics if `uv` is not an edge.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "{u}-{v} is not an edge");
        let edges = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
        Graph::from_edges(self.order, edges).expect("subgraph of a valid graph")
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        Graph::from_edges(self.order, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves validity")
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.order {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges)
    }
}

fn tree_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    // u and w sit on the same BFS level; walk both up to their common ancestor.
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Parses the plain edge-list format: the first token is the order, then one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| t.parse::<usize>().map_err(|_| err(format!("not a non-negative integer: {t:?}")));
        match order {
            None => {
                if tokens.len() != 1 {
                    return Err(err("first line must hold only the vertex count".into()));
                }
                let n = parse(tokens[0])?;
                if n == 0 {
                    return Err(err("order must be at least 1".into()));
                }
                order = Some(n);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(err(format!("expected \"u v\", got {} tokens", tokens.len())));
                }
                let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                if u >= n || v >= n {
                    return Err(err(format!("vertex {} out of range for order {n}", u.max(v))));
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or(Error::EdgeList { line: 0, msg: "missing vertex count".into() })?;
    Graph::from_edges(n, edges)
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
