//! W-partitions and the quasi-(λ,n)-distance-balanced classification.
//!
//! For a pair `u, v` at distance `n`, every vertex is strictly closer to `u`,
//! strictly closer to `v`, or equidistant. A connected graph is
//! quasi-(λ,n)-distance-balanced when every pair at distance `n` has
//! `|W_u| = λ|W_v|` or `|W_v| = λ|W_u|` for a single rational `λ > 1`; it is
//! `n`-distance-balanced when every such pair has `|W_u| = |W_v|`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// The three-way split of `V(G)` induced by a vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPartition {
    pub u: usize,
    pub v: usize,
    /// `dist(u, v)`.
    pub n: u32,
    pub closer_to_u: Vec<usize>,
    pub closer_to_v: Vec<usize>,
    pub equidistant: Vec<usize>,
}

fn check_pair(d: &DistanceMatrix, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= d.order() {
            return Err(Error::VertexOutOfRange { vertex: w, order: d.order() });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

pub fn w_partition(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Result<WPartition> {
    if g.order() != d.order() {
        return Err(Error::Precondition("distance matrix does not belong to this graph".into()));
    }
    check_pair(d, u, v)?;
    let (du, dv) = (d.row(u), d.row(v));
    let mut p =
        WPartition { u, v, n: d.get(u, v), closer_to_u: Vec::new(), closer_to_v: Vec::new(), equidistant: Vec::new() };
    for x in g.vertices() {
        match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => p.closer_to_u.push(x),
            std::cmp::Ordering::Greater => p.closer_to_v.push(x),
            std::cmp::Ordering::Equal => p.equidistant.push(x),
        }
    }
    Ok(p)
}

/// `(|W_u|, |W_v|, |equidistant|)` without materialising the sets.
pub fn w_counts(d: &DistanceMatrix, u: usize, v: usize) -> (usize, usize, usize) {
    let (du, dv) = (d.row(u), d.row(v));
    let mut c = (0, 0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => c.0 += 1,
            std::cmp::Ordering::Greater => c.1 += 1,
            std::cmp::Ordering::Equal => c.2 += 1,
        }
    }
    c
}

/// One distance-`n` pair in a [`BalanceReport`], oriented with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub u: usize,
    pub v: usize,
    pub w_u: usize,
    pub w_v: usize,
    pub equidistant: usize,
}

impl PairRecord {
    pub fn ratio(&self) -> Rational {
        Rational::ratio_max_min(self.w_u, self.w_v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Every pair at distance `n` has equal W-cardinalities.
    Balanced(u32),
    /// Every pair at distance `n` realizes ratio λ or 1/λ for this λ > 1.
    QuasiBalanced(u32, Rational),
    Unbalanced(u32),
    /// The graph has no pair at distance `n`.
    NoPairs(u32),
}

impl Classification {
    pub fn n(&self) -> u32 {
        match *self {
            Classification::Balanced(n)
            | Classification::QuasiBalanced(n, _)
            | Classification::Unbalanced(n)
            | Classification::NoPairs(n) => n,
        }
    }

    pub fn lambda(&self) -> Option<Rational> {
        match *self {
            Classification::QuasiBalanced(_, l) => Some(l),
            Classification::Balanced(_) => Some(Rational::ONE),
            _ => None,
        }
    }

    pub fn is_quasi(&self) -> bool {
        matches!(self, Classification::QuasiBalanced(..))
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self, Classification::Balanced(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Classification::Balanced(_) => "balanced",
            Classification::QuasiBalanced(..) => "quasi",
            Classification::Unbalanced(_) => "unbalanced",
            Classification::NoPairs(_) => "no-pairs",
        }
    }

    /// Recomputes the verdict from a pair list.
    pub fn from_pairs(n: u32, pairs: &[PairRecord]) -> Classification {
        let Some(first) = pairs.first() else {
            return Classification::NoPairs(n);
        };
        let lambda = first.ratio();
        if pairs.iter().any(|p| p.ratio() != lambda) {
            Classification::Unbalanced(n)
        } else if lambda.is_one() {
            Classification::Balanced(n)
        } else {
            Classification::QuasiBalanced(n, lambda)
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={} lambda=", self.label())?;
        match self.lambda() {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "-"),
        }
    }
}

/// Every pair at distance `n` with its W-cardinalities, plus the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub n: u32,
    pub pairs: Vec<PairRecord>,
    pub verdict: Classification,
}

impl BalanceReport {
    pub fn from_distances(d: &DistanceMatrix, n: u32) -> Result<BalanceReport> {
        if n == 0 {
            return Err(Error::ZeroDistance);
        }
        let pairs: Vec<PairRecord> = d
            .pairs_at(n)
            .map(|(u, v)| {
                let (w_u, w_v, equidistant) = w_counts(d, u, v);
                PairRecord { u, v, w_u, w_v, equidistant }
            })
            .collect();
        let verdict = Classification::from_pairs(n, &pairs);
        Ok(BalanceReport { n, pairs, verdict })
    }

    /// True when the stored verdict agrees with one recomputed from `pairs`.
    pub fn is_consistent(&self) -> bool {
        Classification::from_pairs(self.n, &self.pairs) == self.verdict
    }
}

impl fmt::Display for BalanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} {}", self.n, self.verdict)?;
        for p in &self.pairs {
            writeln!(f, "{} {} {} {} {}", p.u, p.v, p.w_u, p.w_v, p.equidistant)?;
        }
        Ok(())
    }
}

impl FromStr for BalanceReport {
    type Err = String;

    /// Parses the text written by `Display`. The verdict is taken from the
    /// header; [`BalanceReport::is_consistent`] checks it against the pairs.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty report")?;
        let mut n = None;
        let mut label = None;
        let mut lambda = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) => n = Some(v.parse::<u32>().map_err(|e| e.to_string())?),
                Some(("verdict", v)) => label = Some(v.to_string()),
                Some(("lambda", v)) => lambda = Some(v.to_string()),
                _ => return Err(format!("unexpected header field {field:?}")),
            }
        }
        let n = n.ok_or("missing n")?;
        let lambda = lambda.ok_or("missing lambda")?;
        let verdict = match label.as_deref() {
            Some("balanced") => Classification::Balanced(n),
            Some("unbalanced") => Classification::Unbalanced(n),
            Some("no-pairs") => Classification::NoPairs(n),
            Some("quasi") => Classification::QuasiBalanced(n, lambda.parse()?),
            other => return Err(format!("unknown verdict {other:?}")),
        };
        let pairs = lines
            .map(|line| {
                let f: Vec<usize> = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| format!("{line:?}: {e}")))
                    .collect::<std::result::Result<_, _>>()?;
                match f[..] {
                    [u, v, w_u, w_v, equidistant] => Ok(PairRecord { u, v, w_u, w_v, equidistant }),
                    _ => Err(format!("expected 5 fields in {line:?}")),
                }
            })
            .collect::<std::result::Result<Vec<_>, String>>()?;
        Ok(BalanceReport { n, pairs, verdict })
    }
}

/// Classifies `g` at distance parameter `n`.
pub fn classify(g: &Graph, n: u32) -> Result<BalanceReport> {
    if n == 0 {
        return Err(Error::ZeroDistance);
    }
    BalanceReport::from_distances(&DistanceMatrix::new(g)?, n)
}

/// `D(u)`, the sum of distances from `u`.
pub fn total_distance(d: &DistanceMatrix, u: usize) -> u64 {
    d.row(u).iter().map(|&x| x as u64).sum()
}

pub fn total_distances(d: &DistanceMatrix) -> Vec<u64> {
    (0..d.order()).map(|u| total_distance(d, u)).collect()
}

/// True iff every vertex has the same total distance.
pub fn is_transmission_regular(g: &Graph) -> Result<bool> {
    let d = DistanceMatrix::new(g)?;
    let t = total_distances(&d);
    Ok(t.iter().all(|&x| x == t[0]))
}

/// Pairs at distance 2 whose total distances sum to an odd number. Requires
/// `g` to be quasi-λ-distance-balanced (n = 1).
pub fn parity_check(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let d = DistanceMatrix::new(g)?;
    let report = BalanceReport::from_distances(&d, 1)?;
    if !report.verdict.is_quasi() {
        return Err(Error::Precondition(format!(
            "parity check needs a quasi-balanced graph at n=1, got {}",
            report.verdict.label()
        )));
    }
    let t = total_distances(&d);
    Ok(d.pairs_at(2).filter(|&(u, v)| (t[u] + t[v]) % 2 == 1).collect())
}

/// Side data of a bipartite graph whose two colour classes are each
/// constant-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biregular {
    pub t1: usize,
    pub t2: usize,
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

impl Biregular {
    pub fn n1(&self) -> usize {
        self.side1.len()
    }

    pub fn n2(&self) -> usize {
        self.side2.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `Deg(G)`, the distinct degrees.
    pub degrees: BTreeSet<usize>,
    pub biregular: Option<Biregular>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees().into_iter().collect();
    DegreeProfile { degrees, biregular: biregular_sides(g) }
}

fn biregular_sides(g: &Graph) -> Option<Biregular> {
    if g.size() == 0 || g.min_degree() == 0 {
        return None;
    }
    let colour = g.bipartition()?;
    let mut target: Option<(usize, usize)> = None;
    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    for comp in g.components() {
        let deg_of = |c: u8| {
            let ds: BTreeSet<usize> = comp.iter().filter(|&&v| colour[v] == c).map(|&v| g.degree(v)).collect();
            (ds.len() == 1).then(|| *ds.first().unwrap())
        };
        let (a, b) = (deg_of(0)?, deg_of(1)?);
        let (t1, t2) = *target.get_or_insert((a, b));
        // Orient each component so its first side carries degree t1.
        let flip = if (a, b) == (t1, t2) {
            false
        } else if (b, a) == (t1, t2) {
            true
        } else {
            return None;
        };
        for &v in &comp {
            if (colour[v] == 0) != flip {
                side1.push(v);
            } else {
                side2.push(v);
            }
        }
    }
    let (t1, t2) = target?;
    side1.sort_unstable();
    side2.sort_unstable();
    Some(Biregular { t1, t2, side1, side2 })
}

/// `Some((k1, k2))` with `k1 > k2` when `Deg(G) = {k1, k2}` and no edge joins
/// two vertices of equal degree.
pub fn is_k1k2_regular(g: &Graph) -> Option<(usize, usize)> {
    let degrees: BTreeSet<usize> = g.degrees().into_iter().collect();
    if degrees.len() != 2 {
        return None;
    }
    if g.edges().any(|(u, v)| g.degree(u) == g.degree(v)) {
        return None;
    }
    let lo = *degrees.first().unwrap();
    let hi = *degrees.last().unwrap();
    Some((hi, lo))
}

/// `D_{i,j}(x, y)`: vertices at distance `i` from `x` and `j` from `y`.
pub fn d_set(d: &DistanceMatrix, x: usize, y: usize, i: u32, j: u32) -> Vec<usize> {
    (0..d.order()).filter(|&u| d.get(u, x) == i && d.get(u, y) == j).collect()
}
