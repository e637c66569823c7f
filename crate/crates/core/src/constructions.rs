//! Graph families and products with deterministic, block-contiguous vertex
//! labelling.
//!
//! Every builder that has internal structure returns a [`Labeled`] graph whose
//! `blocks` record which label range belongs to which part, so tests and the
//! CLI can address "a vertex of the first factor" without guessing.

use std::fmt;

use crate::balance::{degree_profile, Biregular};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// A named, contiguous label range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled {
    pub graph: Graph,
    pub blocks: Vec<Block>,
    /// Vertex sets of the complete subgraphs an overlapping-clique builder
    /// glued together; empty for other builders.
    pub cliques: Vec<Vec<usize>>,
}

impl Labeled {
    fn plain(graph: Graph, blocks: Vec<Block>) -> Labeled {
        Labeled { graph, blocks, cliques: Vec::new() }
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// `blocks A=0..3 B=3..7 ...`, the sidecar line the CLI prints.
    pub fn metadata(&self) -> String {
        let mut s = String::from("blocks");
        for b in &self.blocks {
            s.push_str(&format!(" {}={}..{}", b.name, b.start, b.start + b.len));
        }
        s
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::Construction(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `mK_1`.
pub fn empty_graph(m: usize) -> Result<Graph> {
    positive("m", m)?;
    Graph::empty(m)
}

pub fn complete_graph(q: usize) -> Result<Graph> {
    positive("q", q)?;
    Graph::from_edges(q, (0..q).flat_map(|u| (u + 1..q).map(move |v| (u, v))))
}

pub fn cycle(q: usize) -> Result<Graph> {
    if q < 3 {
        return Err(Error::Construction(format!("cycle needs at least 3 vertices, got {q}")));
    }
    Graph::from_edges(q, (0..q).map(|i| (i, (i + 1) % q)))
}

/// The path on `q` vertices, labelled along the path.
pub fn path(q: usize) -> Result<Graph> {
    positive("q", q)?;
    Graph::from_edges(q, (1..q).map(|i| (i - 1, i)))
}

/// `K_{1,q}` with centre 0.
pub fn star(q: usize) -> Result<Graph> {
    positive("q", q)?;
    Graph::from_edges(q + 1, (1..=q).map(|i| (0, i)))
}

/// `K_{a,b}`: side `0..a`, side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    positive("a", a)?;
    positive("b", b)?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Vertex-edge incidence graph of `K_4` (equivalently, `K_4` with every edge
/// subdivided). Vertices `0..4` are the `K_4` vertices; `4..10` are its edges
/// in lexicographic order `01, 02, 03, 12, 13, 23`.
pub fn incidence_k4() -> Graph {
    let mut edges = Vec::new();
    let mut e = 4;
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push((a, e));
            edges.push((b, e));
            e += 1;
        }
    }
    Graph::from_edges(10, edges).expect("valid construction")
}

/// Disjoint union of the factors with blocks `F0, F1, ...`, plus the extra
/// edges between factors `i` and `j` for every `(i, j)` in `links`.
fn glue_factors(factors: &[Graph], links: &[(usize, usize)]) -> Result<Labeled> {
    let mut blocks = Vec::with_capacity(factors.len());
    let mut start = 0;
    for (i, f) in factors.iter().enumerate() {
        blocks.push(Block { name: format!("F{i}"), start, len: f.order() });
        start += f.order();
    }
    let mut edges = Vec::new();
    for (f, b) in factors.iter().zip(&blocks) {
        edges.extend(f.edges().map(|(u, v)| (u + b.start, v + b.start)));
    }
    for &(i, j) in links {
        for u in blocks[i].range() {
            for v in blocks[j].range() {
                edges.push((u, v));
            }
        }
    }
    Ok(Labeled::plain(Graph::from_edges(start, edges)?, blocks))
}

/// An ordered list of factors joined consecutively; `closed` also joins the
/// last factor to the first.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub factors: Vec<Graph>,
    pub closed: bool,
}

impl GroupSpec {
    pub fn chain(factors: Vec<Graph>) -> GroupSpec {
        GroupSpec { factors, closed: false }
    }

    pub fn cycle(factors: Vec<Graph>) -> GroupSpec {
        GroupSpec { factors, closed: true }
    }

    pub fn build(&self) -> Result<Labeled> {
        if self.closed {
            cyclic_chain(&self.factors)
        } else {
            chain_join(&self.factors)
        }
    }
}

/// `G_1 * G_2 * ... * G_k`: factor `i` is fully joined to factor `i + 1`
/// only.
pub fn chain_join(factors: &[Graph]) -> Result<Labeled> {
    if factors.len() < 2 {
        return Err(Error::Construction(format!("chain join needs at least 2 factors, got {}", factors.len())));
    }
    let links: Vec<_> = (1..factors.len()).map(|i| (i - 1, i)).collect();
    glue_factors(factors, &links)
}

/// The chain join closed into a ring: the last factor is also joined to the
/// first.
pub fn cyclic_chain(factors: &[Graph]) -> Result<Labeled> {
    if factors.len() < 3 {
        return Err(Error::Construction(format!("cyclic chain needs at least 3 factors, got {}", factors.len())));
    }
    let k = factors.len();
    let links: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    glue_factors(factors, &links)
}

/// Complete graphs `K_{s_0}, K_{s_1}, ...` where each consecutive pair
/// shares exactly one edge. With `closed`, the last clique also shares an
/// edge with the first.
///
/// Labelling interleaves interiors and shared edges: `I0, S0, I1, S1, ...`.
/// An open chain needs end cliques of order at least 3 and inner cliques of
/// order at least 4; a closed one needs every clique of order at least 4 and
/// at least three cliques.
pub fn clique_chain(sizes: &[usize], closed: bool) -> Result<Labeled> {
    let k = sizes.len();
    let min_len = if closed { 3 } else { 2 };
    if k < min_len {
        return Err(Error::Construction(format!(
            "overlapping clique {} needs at least {min_len} cliques, got {k}",
            if closed { "cycle" } else { "chain" }
        )));
    }
    let shared = |i: usize| closed || i + 1 < k;
    let mut blocks = Vec::new();
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        let touching = usize::from(closed || i > 0) + usize::from(shared(i));
        let need = 2 * touching + usize::from(touching < 2);
        if s < need {
            return Err(Error::Construction(format!(
                "block size underflow: clique {i} has order {s}, needs at least {need}"
            )));
        }
        blocks.push(Block { name: format!("I{i}"), start, len: s - 2 * touching });
        start += s - 2 * touching;
        if shared(i) {
            blocks.push(Block { name: format!("S{i}"), start, len: 2 });
            start += 2;
        }
    }
    let find = |name: String| blocks.iter().find(|b| b.name == name).map(Block::range);
    let mut cliques = Vec::with_capacity(k);
    for i in 0..k {
        let mut members: Vec<usize> = Vec::new();
        let prev = if i > 0 {
            Some(i - 1)
        } else if closed {
            Some(k - 1)
        } else {
            None
        };
        if let Some(p) = prev {
            members.extend(find(format!("S{p}")).unwrap());
        }
        members.extend(find(format!("I{i}")).unwrap());
        if shared(i) {
            members.extend(find(format!("S{i}")).unwrap());
        }
        members.sort_unstable();
        cliques.push(members);
    }
    let edges = cliques
        .iter()
        .flat_map(|c| c.iter().enumerate().flat_map(move |(a, &u)| c[a + 1..].iter().map(move |&v| (u, v))));
    let graph = Graph::from_edges(start, edges)?;
    Ok(Labeled { graph, blocks, cliques })
}

/// `G_1 = mK_1 * nK_1 * mK_1`.
pub fn g1(m: usize, n: usize) -> Result<Labeled> {
    chain_join(&[empty_graph(m)?, empty_graph(n)?, empty_graph(m)?])
}

/// `G_2`, the ring `mK_1 * nK_1 * mK_1 * nK_1`.
pub fn g2(m: usize, n: usize) -> Result<Labeled> {
    g3(m, n, 2)
}

/// `G_3`: a ring of `2d` empty blocks alternating `mK_1, nK_1`.
pub fn g3(m: usize, n: usize, d: usize) -> Result<Labeled> {
    if d < 2 {
        return Err(Error::Construction(format!("G3 needs d >= 2, got {d}")));
    }
    let mut factors = Vec::with_capacity(2 * d);
    for _ in 0..d {
        factors.push(empty_graph(m)?);
        factors.push(empty_graph(n)?);
    }
    cyclic_chain(&factors)
}

/// `G_4 = G_3(1, 2, 4)`, order 12.
pub fn g4() -> Labeled {
    g3(1, 2, 4).expect("fixed parameters")
}

/// `G_5 = G_3(2, 3, 3)`, order 15.
pub fn g5() -> Labeled {
    g3(2, 3, 3).expect("fixed parameters")
}

/// Which colour class of the core plays the role of `B` (joined to `A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoreOrientation {
    /// `B` is the side reported first by [`degree_profile`].
    #[default]
    AsComputed,
    Swapped,
}

/// Parameters of `H(m, G, k)`: pads `A` (size `m`) and `D` (size `k`) around
/// a biregular bipartite core `G = B ∪ C`.
#[derive(Clone, Debug)]
pub struct HGraphSpec {
    pub m: usize,
    pub k: usize,
    pub core: Graph,
    pub orientation: CoreOrientation,
}

impl HGraphSpec {
    pub fn new(m: usize, core: Graph, k: usize) -> HGraphSpec {
        HGraphSpec { m, k, core, orientation: CoreOrientation::AsComputed }
    }

    pub fn swapped(mut self) -> HGraphSpec {
        self.orientation = CoreOrientation::Swapped;
        self
    }

    /// Core sides oriented so `side1 = B` (size `n1`, degree `t1`) and
    /// `side2 = C`.
    pub fn sides(&self) -> Result<Biregular> {
        let b = degree_profile(&self.core)
            .biregular
            .ok_or_else(|| Error::Construction("core is not a biregular bipartite graph".into()))?;
        Ok(match self.orientation {
            CoreOrientation::AsComputed => b,
            CoreOrientation::Swapped => Biregular { t1: b.t2, t2: b.t1, side1: b.side2, side2: b.side1 },
        })
    }

    /// Validates the pad sizes against `1 <= n1 + m <= n2 + k`.
    pub fn validate(&self) -> Result<Biregular> {
        positive("m", self.m)?;
        positive("k", self.k)?;
        let s = self.sides()?;
        if s.n1() + self.m > s.n2() + self.k {
            return Err(Error::Construction(format!(
                "size constraint violated: n1 + m = {} exceeds n2 + k = {}",
                s.n1() + self.m,
                s.n2() + self.k
            )));
        }
        Ok(s)
    }
}

/// `H(m, G, k)` labelled `A, B, C, D` in that order; core vertices keep their
/// relative order within each side.
pub fn h_graph(spec: &HGraphSpec) -> Result<Labeled> {
    let sides = spec.validate()?;
    let (m, k) = (spec.m, spec.k);
    let (n1, n2) = (sides.n1(), sides.n2());
    let mut label = vec![0; spec.core.order()];
    for (i, &v) in sides.side1.iter().enumerate() {
        label[v] = m + i;
    }
    for (i, &v) in sides.side2.iter().enumerate() {
        label[v] = m + n1 + i;
    }
    let order = m + n1 + n2 + k;
    let mut edges: Vec<(usize, usize)> = spec.core.edges().map(|(u, v)| (label[u], label[v])).collect();
    for a in 0..m {
        edges.extend((m..m + n1).map(|b| (a, b)));
    }
    for d in m + n1 + n2..order {
        edges.extend((m + n1..m + n1 + n2).map(|c| (c, d)));
    }
    let blocks = vec![
        Block { name: "A".into(), start: 0, len: m },
        Block { name: "B".into(), start: m, len: n1 },
        Block { name: "C".into(), start: m + n1, len: n2 },
        Block { name: "D".into(), start: m + n1 + n2, len: k },
    ];
    Ok(Labeled::plain(Graph::from_edges(order, edges)?, blocks))
}

/// `G + H`: `g` on `0..|g|`, `h` after it, every cross pair adjacent.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    glue_factors(&[g.clone(), h.clone()], &[(0, 1)]).expect("valid factors").graph
}

/// Corona `G ∘ H`: `g` on `0..|g|`; copy `i` of `h` occupies
/// `|g| + i|h| .. |g| + (i+1)|h|` and is joined to vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.order(), h.order());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..gn {
        let base = gn + i * hn;
        edges.extend(h.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((0..hn).map(|u| (i, base + u)));
    }
    Graph::from_edges(gn * (1 + hn), edges).expect("valid construction")
}

/// Tensor (direct) product `G × H`; vertex `(a, b)` is labelled `a|h| + b`.
pub fn tensor(g: &Graph, h: &Graph) -> Graph {
    let hn = h.order();
    let mut edges = Vec::with_capacity(2 * g.size() * h.size());
    for (a, c) in g.edges() {
        for (b, d) in h.edges() {
            edges.push((a * hn + b, c * hn + d));
            edges.push((a * hn + d, c * hn + b));
        }
    }
    Graph::from_edges(g.order() * hn, edges).expect("valid construction")
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v));
    Graph::from_edges(n, edges).expect("valid construction")
}

/// `K_q` with one pendant vertex on each listed root; pendant `i` is
/// labelled `q + i`.
pub fn complete_with_pendants(q: usize, roots: &[usize]) -> Result<Labeled> {
    if q < 2 {
        return Err(Error::Construction(format!("q must be at least 2, got {q}")));
    }
    if roots.is_empty() || roots.len() > q {
        return Err(Error::Construction(format!("need between 1 and {q} roots, got {}", roots.len())));
    }
    let mut seen = vec![false; q];
    for &r in roots {
        if r >= q {
            return Err(Error::Construction(format!("root {r} is not a vertex of K_{q}")));
        }
        if std::mem::replace(&mut seen[r], true) {
            return Err(Error::Construction(format!("duplicate root {r}: two pendants may not share a root")));
        }
    }
    let mut edges: Vec<(usize, usize)> = complete_graph(q)?.edges().collect();
    edges.extend(roots.iter().enumerate().map(|(i, &r)| (r, q + i)));
    let blocks =
        vec![Block { name: "K".into(), start: 0, len: q }, Block { name: "P".into(), start: q, len: roots.len() }];
    Ok(Labeled::plain(Graph::from_edges(q + roots.len(), edges)?, blocks))
}

/// Parameterised families of quasi-(λ,n) graphs built from complete graphs.
/// All require `n > m`, plus lower bounds that keep every clique's private
/// part nonempty (`K_p` runs in the odd family may be bare shared edges).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiFamily {
    /// `K_n * K_d * K_m` (consecutive joins), claimed quasi-(n/m, 2).
    Fig7 { n: usize, d: usize, m: usize },
    /// `K_n, K_d, K_m` consecutively sharing an edge; claimed quasi-(n/m, 3).
    Fig8 { n: usize, d: usize, m: usize },
    /// Ring of `K_m, K_m, K_n, K_n` sharing edges; claimed quasi-(n/m, 3).
    Fig9 { n: usize, m: usize },
    /// Ring of `2(2k-1)` cliques alternating `K_n, K_m`; distance `2k`.
    Even { k: usize, n: usize, m: usize },
    /// Ring `K_n, (2k-1) x K_p, K_m, (2k-1) x K_p`; distance `2k+1`.
    Odd { k: usize, p: usize, n: usize, m: usize },
}

impl QuasiFamily {
    fn check(&self) -> Result<()> {
        let (n, m) = match *self {
            QuasiFamily::Fig7 { n, m, .. }
            | QuasiFamily::Fig8 { n, m, .. }
            | QuasiFamily::Fig9 { n, m }
            | QuasiFamily::Even { n, m, .. }
            | QuasiFamily::Odd { n, m, .. } => (n, m),
        };
        if n <= m {
            return Err(Error::Construction(format!("family requires n > m, got n={n}, m={m}")));
        }
        let at_least = |name: &str, v: usize, min: usize| {
            if v < min {
                Err(Error::Construction(format!("block size underflow: {name}={v}, needs {name} >= {min}")))
            } else {
                Ok(())
            }
        };
        match *self {
            QuasiFamily::Fig7 { d, m, .. } => {
                positive("d", d)?;
                positive("m", m)
            }
            QuasiFamily::Fig8 { d, m, .. } => {
                at_least("m", m, 3)?;
                at_least("d", d, 5)
            }
            QuasiFamily::Fig9 { m, .. } => at_least("m", m, 5),
            QuasiFamily::Even { k, m, .. } => {
                at_least("k", k, 1)?;
                at_least("m", m, 5)
            }
            QuasiFamily::Odd { k, p, m, .. } => {
                at_least("k", k, 1)?;
                at_least("m", m, 5)?;
                at_least("p", p, 4)
            }
        }
    }

    /// The distance parameter the family is claimed to be quasi-balanced at.
    pub fn distance(&self) -> u32 {
        match *self {
            QuasiFamily::Fig7 { .. } => 2,
            QuasiFamily::Fig8 { .. } | QuasiFamily::Fig9 { .. } => 3,
            QuasiFamily::Even { k, .. } => 2 * k as u32,
            QuasiFamily::Odd { k, .. } => 2 * k as u32 + 1,
        }
    }

    pub fn build(&self) -> Result<Labeled> {
        self.check()?;
        match *self {
            QuasiFamily::Fig7 { n, d, m } => {
                let mut l = chain_join(&[complete_graph(n)?, complete_graph(d)?, complete_graph(m)?])?;
                for (b, name) in l.blocks.iter_mut().zip(["Kn", "Kd", "Km"]) {
                    b.name = name.into();
                }
                l.cliques = l.blocks.iter().map(|b| b.range().collect()).collect();
                Ok(l)
            }
            QuasiFamily::Fig8 { n, d, m } => clique_chain(&[n, d, m], false),
            QuasiFamily::Fig9 { n, m } => clique_chain(&[m, m, n, n], true),
            QuasiFamily::Even { k, n, m } => {
                let sizes: Vec<usize> = (0..2 * (2 * k - 1)).map(|i| if i % 2 == 0 { n } else { m }).collect();
                clique_chain(&sizes, true)
            }
            QuasiFamily::Odd { k, p, n, m } => {
                let mut sizes = vec![n];
                sizes.extend(std::iter::repeat_n(p, 2 * k - 1));
                sizes.push(m);
                sizes.extend(std::iter::repeat_n(p, 2 * k - 1));
                clique_chain(&sizes, true)
            }
        }
    }

    /// Indices (into `Labeled::cliques`) of the `K_n` and `K_m` cliques.
    pub fn end_cliques(&self) -> (Vec<usize>, Vec<usize>) {
        match *self {
            QuasiFamily::Fig7 { .. } | QuasiFamily::Fig8 { .. } => (vec![0], vec![2]),
            QuasiFamily::Fig9 { .. } => (vec![2, 3], vec![0, 1]),
            QuasiFamily::Even { k, .. } => {
                let c = 2 * (2 * k - 1);
                ((0..c).step_by(2).collect(), (1..c).step_by(2).collect())
            }
            QuasiFamily::Odd { k, .. } => (vec![0], vec![2 * k]),
        }
    }

    /// The claimed `(|W_x|, |W_y|)` for `x` in a `K_n`, `y` in a `K_m` at the
    /// family's distance, when one is stated.
    pub fn claimed_counts(&self) -> Option<(usize, usize)> {
        match *self {
            QuasiFamily::Fig7 { n, m, .. } | QuasiFamily::Fig8 { n, m, .. } => Some((n, m)),
            QuasiFamily::Fig9 { .. } => None,
            QuasiFamily::Even { k, n, m } => Some((k * n + (k - 1) * m - 4 * k, k * m + (k - 1) * n - 4 * k)),
            QuasiFamily::Odd { k, n, m, .. } => {
                let j = k - 1;
                Some(((2 * j * n + m).checked_sub(4 * j)?, (2 * j * m + n).checked_sub(4 * j)?))
            }
        }
    }

    /// The claimed λ.
    pub fn claimed_lambda(&self) -> Option<Rational> {
        match *self {
            QuasiFamily::Fig9 { n, m } => Rational::new(n as u64, m as u64),
            _ => {
                let (a, b) = self.claimed_counts()?;
                (a > 0 && b > 0).then(|| Rational::ratio_max_min(a, b))
            }
        }
    }
}

/// End-pair cardinalities `(2p + n - 4, 2p + m - 4)` of the `k = 2` odd
/// family.
pub fn fig11_counts(p: usize, n: usize, m: usize) -> (usize, usize) {
    (2 * p + n - 4, 2 * p + m - 4)
}

impl fmt::Display for QuasiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuasiFamily::Fig7 { n, d, m } => write!(f, "fig7(n={n},d={d},m={m})"),
            QuasiFamily::Fig8 { n, d, m } => write!(f, "fig8(n={n},d={d},m={m})"),
            QuasiFamily::Fig9 { n, m } => write!(f, "fig9(n={n},m={m})"),
            QuasiFamily::Even { k, n, m } => write!(f, "even(k={k},n={n},m={m})"),
            QuasiFamily::Odd { k, p, n, m } => write!(f, "odd(k={k},p={p},n={n},m={m})"),
        }
    }
}
