use std::collections::HashSet;

use rayon::prelude::*;

use super::{all_graphs, is_edge_transitive, sweep, EnumerationScope, Finding, Verdict};
use crate::balance::{
    classify, degree_profile, is_k1k2_regular, is_transmission_regular, parity_check, Classification,
};
use crate::constructions::{complete_with_pendants, corona, tensor};
use crate::distance::{bfs, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::rational::Rational;

/// Largest factor order for [`check_corona`].
pub const CORONA_MAX_ORDER: usize = 5;
/// Largest factor order for [`check_tensor`].
pub const TENSOR_MAX_ORDER: usize = 6;

fn verdict_at(g: &Graph, n: u32) -> Option<Classification> {
    classify(g, n).ok().map(|r| r.verdict)
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| "-".into())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Every quasi-balanced (n = 1) graph in scope must be bipartite.
pub fn check_bipartite_theorem(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    const CHECK: &str = "bipartite-theorem";
    let graphs = scope.graphs()?;
    Ok(sweep(&graphs, |g| {
        if !verdict_at(g, 1).is_some_and(|c| c.is_quasi()) {
            return Vec::new();
        }
        let f = match g.odd_cycle() {
            None => Finding::about(CHECK, g, 1, Verdict::Confirmed, "bipartite=yes"),
            Some(c) => {
                let cyc: Vec<String> = c.iter().map(usize::to_string).collect();
                Finding::about(
                    CHECK,
                    g,
                    1,
                    Verdict::Counterexample,
                    &format!("bipartite=no odd cycle {}", cyc.join("-")),
                )
            }
        };
        vec![f]
    }))
}

/// For a quasi-balanced graph with minimum degree > 1: for every pair of
/// edges sharing a vertex, deleting at least one of them must destroy
/// quasi-balance with the same λ. Deletions that disconnect the graph count
/// as destroying it.
pub fn check_edge_removal(g: &Graph) -> Result<Finding> {
    const CHECK: &str = "edge-removal";
    let Classification::QuasiBalanced(_, lambda) = classify(g, 1)?.verdict else {
        return Err(Error::Precondition("graph is not quasi-balanced at n=1".into()));
    };
    if g.min_degree() <= 1 {
        return Err(Error::Precondition(format!("minimum degree is {}, needs > 1", g.min_degree())));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut disconnecting = 0;
    let keeps: Vec<bool> = edges
        .iter()
        .map(|&(u, v)| match classify(&g.without_edge(u, v), 1) {
            Ok(r) => r.verdict == Classification::QuasiBalanced(1, lambda),
            Err(_) => {
                disconnecting += 1;
                false
            }
        })
        .collect();
    let mut adjacent = 0;
    let mut bad = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let ((a, b), (c, d)) = (edges[i], edges[j]);
            if a == c || a == d || b == c || b == d {
                adjacent += 1;
                if keeps[i] && keeps[j] {
                    bad.push((edges[i], edges[j]));
                }
            }
        }
    }
    let base = format!("adjacent-pairs={adjacent} disconnecting-removals={disconnecting} (counted as not quasi)");
    Ok(match bad.first() {
        None => Finding::about(CHECK, g, 1, Verdict::Confirmed, &base),
        Some(&((a, b), (c, d))) => Finding::about(
            CHECK,
            g,
            1,
            Verdict::Counterexample,
            &format!(
                "{base} violating-pairs={}; G-{a}-{b} and G-{c}-{d} are both quasi with lambda={lambda}",
                bad.len()
            ),
        ),
    })
}

/// [`check_edge_removal`] over every quasi-balanced graph in scope with
/// minimum degree > 1.
pub fn check_edge_removal_all(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    let graphs = scope.graphs()?;
    Ok(sweep(&graphs, |g| {
        if g.min_degree() <= 1 || !verdict_at(g, 1).is_some_and(|c| c.is_quasi()) {
            return Vec::new();
        }
        vec![check_edge_removal(g).expect("preconditions checked")]
    }))
}

/// Coronas of all factor pairs up to `max_order`: two edgeless factors give
/// disjoint stars `K_{1,|H|}`, each quasi with λ = |H| when |H| >= 2; every
/// other connected corona is not quasi-balanced.
pub fn check_corona(max_order: usize) -> Result<Vec<Finding>> {
    const CHECK: &str = "corona";
    if max_order > CORONA_MAX_ORDER {
        return Err(Error::Envelope { order: max_order, max: CORONA_MAX_ORDER });
    }
    let mut factors = Vec::new();
    for n in 1..=max_order {
        factors.extend(all_graphs(n)?);
    }
    let pairs: Vec<(&Graph, &Graph)> = factors.iter().flat_map(|g| factors.iter().map(move |h| (g, h))).collect();
    let mut out: Vec<Finding> = pairs
        .par_iter()
        .filter_map(|&(g, h)| {
            let c = corona(g, h);
            let names = format!("G={} H={}", g6(g), g6(h));
            if g.size() == 0 && h.size() == 0 {
                let k = h.order();
                let comps = c.components();
                let stars: Vec<Graph> = comps.iter().map(|cv| c.induced(cv).expect("valid")).collect();
                let shape = comps.len() == g.order()
                    && stars.iter().all(|s| s.order() == k + 1 && s.size() == k && s.max_degree() == k);
                let want = Classification::QuasiBalanced(1, Rational::from_int(k as u64));
                let quasi = k < 2 || stars.iter().all(|s| verdict_at(s, 1) == Some(want));
                let verdict = if shape && quasi { Verdict::Confirmed } else { Verdict::Counterexample };
                let clause = format!(
                    "{names} components={} star-shape={} each-quasi-lambda-{k}={}",
                    comps.len(),
                    yes(shape),
                    if k < 2 { "n/a" } else { yes(quasi) }
                );
                Some(Finding::about(CHECK, &c, 1, verdict, &clause))
            } else if c.is_connected() {
                let quasi = verdict_at(&c, 1).is_some_and(|v| v.is_quasi());
                let verdict = if quasi { Verdict::Counterexample } else { Verdict::Confirmed };
                Some(Finding::about(CHECK, &c, 1, verdict, &format!("{names} non-empty factor, quasi={}", yes(quasi))))
            } else {
                None
            }
        })
        .collect();
    super::sort_findings(&mut out);
    Ok(super::reverified(out))
}

/// Shortest even and odd walk lengths between all pairs.
fn parity_walks(g: &Graph) -> Vec<Vec<[Option<u32>; 2]>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![[None; 2]; n];
            d[s][0] = Some(0);
            let mut queue = std::collections::VecDeque::from([(s, 0usize)]);
            while let Some((u, p)) = queue.pop_front() {
                let du = d[u][p].unwrap();
                for &w in g.neighbors(u) {
                    if d[w][1 - p].is_none() {
                        d[w][1 - p] = Some(du + 1);
                        queue.push_back((w, 1 - p));
                    }
                }
            }
            d
        })
        .collect()
}

/// Distance in `G × H` between `(x, a)` and `(y, b)` by the walk-parity law:
/// the least `max(walk_G, walk_H)` over walks of equal parity. Both factors
/// must have no isolated vertices.
pub fn tensor_distance(g: &Graph, h: &Graph, (x, a): (usize, usize), (y, b): (usize, usize)) -> Option<u32> {
    let wg = parity_walks(g);
    let wh = parity_walks(h);
    law(&wg, &wh, (x, a), (y, b))
}

fn law(
    wg: &[Vec<[Option<u32>; 2]>],
    wh: &[Vec<[Option<u32>; 2]>],
    (x, a): (usize, usize),
    (y, b): (usize, usize),
) -> Option<u32> {
    (0..2).filter_map(|p| Some(wg[x][y][p]?.max(wh[a][b][p]?))).min()
}

/// Conditions under which no component of `G × H` should be quasi.
fn proposition_applies(g: &Graph, h: &Graph) -> bool {
    if g.order() <= h.order() {
        return false;
    }
    let (Ok(dg), Ok(dh)) = (g.diameter(), h.diameter()) else { return false };
    if dg != 3 || dh != 3 {
        return false;
    }
    let (Some((hi_g, lo_g)), Some((hi_h, lo_h))) = (is_k1k2_regular(g), is_k1k2_regular(h)) else {
        return false;
    };
    // G's larger degree pairs with H's smaller one.
    if hi_g + lo_h != lo_g + hi_h {
        return false;
    }
    let Some(lambda) = Rational::new((g.order() + h.order()) as u64, 2 * (hi_g + lo_h) as u64) else {
        return false;
    };
    let want = Some(Classification::QuasiBalanced(1, lambda));
    lambda > Rational::ONE && verdict_at(g, 1) == want && verdict_at(h, 1) == want
}

fn tensor_findings(g: &Graph, h: &Graph) -> Vec<Finding> {
    let t = tensor(g, h);
    let hn = h.order();
    let names = format!("G={} H={}", g6(g), g6(h));
    let mut out = Vec::new();
    let (vg, vh) = (verdict_at(g, 1), verdict_at(h, 1));

    if vg.is_some_and(|c| c.is_quasi()) && vh.is_some_and(|c| c.is_quasi()) {
        let comps = t.components().len();
        let verdict = if comps > 1 { Verdict::Confirmed } else { Verdict::Counterexample };
        out.push(Finding::about("tensor-disconnected", &t, 1, verdict, &format!("{names} components={comps}")));
    }

    if proposition_applies(g, h) || proposition_applies(h, g) {
        for comp in t.components() {
            let sub = t.induced(&comp).expect("valid");
            let quasi = verdict_at(&sub, 1).is_some_and(|c| c.is_quasi());
            let verdict = if quasi { Verdict::Counterexample } else { Verdict::Confirmed };
            out.push(Finding::about(
                "tensor-proposition",
                &sub,
                1,
                verdict,
                &format!("{names} component of the product"),
            ));
        }
    }

    let wg = parity_walks(g);
    let wh = parity_walks(h);
    let rows: Vec<Vec<Option<u32>>> = t.vertices().map(|s| bfs(&t, s)).collect();
    let mut wrong = None;
    'law: for s in t.vertices() {
        for u in t.vertices() {
            let predicted = law(&wg, &wh, (s / hn, s % hn), (u / hn, u % hn));
            if predicted != rows[s][u] {
                wrong = Some((s, u, predicted, rows[s][u]));
                break 'law;
            }
        }
    }
    if let Some((s, u, p, actual)) = wrong {
        out.push(Finding::about(
            "tensor-distance-law",
            &t,
            1,
            Verdict::Counterexample,
            &format!("{names} pair {s},{u}: law gives {p:?}, BFS gives {actual:?}"),
        ));
    }

    // The W-set identity a proof step asserts for diameter-3 bipartite
    // factors, compared against BFS.
    let diam3 = |f: &Graph| f.is_bipartite() && f.diameter().ok() == Some(3);
    if diam3(g) && diam3(h) {
        let (dg, dh) = (DistanceMatrix::new(g).expect("connected"), DistanceMatrix::new(h).expect("connected"));
        let d23 = |d: &DistanceMatrix, p: usize, q: usize| crate::balance::d_set(d, p, q, 2, 3);
        let oriented = |f: &Graph| f.edges().flat_map(|(p, q)| [(p, q), (q, p)]).collect::<Vec<_>>();
        let mut total = 0;
        let mut set_diff = 0;
        let mut card_diff = 0;
        let mut first = None;
        for &(x, y) in &oriented(g) {
            for &(a, b) in &oriented(h) {
                total += 1;
                let (s, e) = (x * hn + a, y * hn + b);
                let actual: HashSet<usize> = t
                    .vertices()
                    .filter(|&z| match (rows[z][s], rows[z][e]) {
                        (Some(p), Some(q)) => p < q,
                        (Some(_), None) => true,
                        _ => false,
                    })
                    .collect();
                let gs = d23(&dg, x, y);
                let hs = d23(&dh, a, b);
                let claimed: HashSet<usize> =
                    hs.iter().map(|&c| x * hn + c).chain(gs.iter().map(|&z| z * hn + a)).collect();
                if actual != claimed {
                    set_diff += 1;
                }
                if actual.len() != gs.len() + hs.len() {
                    card_diff += 1;
                    first.get_or_insert((x, a, y, b, actual.len(), gs.len() + hs.len()));
                }
            }
        }
        let verdict = if set_diff == 0 && card_diff == 0 { Verdict::Confirmed } else { Verdict::Mismatch };
        let mut clause = format!("{names} oriented-edge-pairs={total} set-differs={set_diff} size-differs={card_diff}");
        if let Some((x, a, y, b, w, c)) = first {
            clause.push_str(&format!(" first: W(({x},{a}),({y},{b}))={w} vs D-sum={c}"));
        }
        out.push(Finding::about("tensor-w-identity", &t, 1, verdict, &clause));
    }
    out
}

/// Tensor products of connected factor pairs of order 2..=`max_order`:
/// products of two quasi factors are disconnected; under the diameter-3
/// proposition's hypotheses no component is quasi; the walk-parity distance
/// law matches BFS; and the proof's W-set identity is compared against BFS
/// (reported as `mismatch` when it differs).
pub fn check_tensor(max_order: usize) -> Result<Vec<Finding>> {
    if max_order > TENSOR_MAX_ORDER {
        return Err(Error::Envelope { order: max_order, max: TENSOR_MAX_ORDER });
    }
    let factors = EnumerationScope { min_order: 2, ..EnumerationScope::up_to(max_order) }.graphs()?;
    let pairs: Vec<(usize, usize)> = (0..factors.len()).flat_map(|i| (i..factors.len()).map(move |j| (i, j))).collect();
    let mut out: Vec<Finding> =
        pairs.par_iter().flat_map_iter(|&(i, j)| tensor_findings(&factors[i], &factors[j])).collect();
    super::sort_findings(&mut out);
    Ok(super::reverified(out))
}

/// For quasi graphs: degree-set and total-distance-set sizes (conjectured
/// both 2), the (k1,k2)-regular strengthening, and the distance-2 parity
/// property.
pub fn search_conjecture(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    let graphs = scope.graphs()?;
    Ok(sweep(&graphs, |g| {
        if !verdict_at(g, 1).is_some_and(|c| c.is_quasi()) {
            return Vec::new();
        }
        let d = DistanceMatrix::new(g).expect("quasi graphs are connected");
        let deg = degree_profile(g).degrees.len();
        let dset = crate::balance::total_distances(&d).into_iter().collect::<HashSet<_>>().len();
        let sizes = format!("deg-set={deg} d-set={dset}");
        let conforms = if deg == 2 && dset == 2 { Verdict::Confirmed } else { Verdict::Counterexample };
        let k1k2 = is_k1k2_regular(g);
        let k_verdict = if k1k2.is_some() { Verdict::Confirmed } else { Verdict::Counterexample };
        let k_clause = match k1k2 {
            Some((hi, lo)) => format!("deg-set={deg} k1k2=({hi},{lo})"),
            None => format!("deg-set={deg} k1k2=no"),
        };
        let odd = parity_check(g).expect("graph is quasi");
        let p_verdict = if odd.is_empty() { Verdict::Confirmed } else { Verdict::Counterexample };
        let p_clause = match odd.first() {
            None => "distance-2 pairs with odd total-distance sum: none".to_string(),
            Some((u, v)) => format!("distance-2 pairs with odd total-distance sum: {} first {u},{v}", odd.len()),
        };
        vec![
            Finding::about("conjecture", g, 1, conforms, &sizes),
            Finding::about("k1k2-regular", g, 1, k_verdict, &k_clause),
            Finding::about("parity", g, 1, p_verdict, &p_clause),
        ]
    }))
}

/// Classifies a connected `(t1, t2)`-biregular bipartite graph with
/// `t1 != t2`; a non-quasi result is a counterexample. `None` for other
/// graphs.
pub fn biregular_finding(g: &Graph) -> Option<Finding> {
    const CHECK: &str = "biregular";
    let b = degree_profile(g).biregular?;
    if b.t1 == b.t2 || !g.is_connected() {
        return None;
    }
    let quasi = verdict_at(g, 1)?.is_quasi();
    let verdict = if quasi { Verdict::Confirmed } else { Verdict::Counterexample };
    let clause = format!("biregular ({},{}) sides ({},{}) quasi={}", b.t1, b.t2, b.n1(), b.n2(), yes(quasi));
    Some(Finding::about(CHECK, g, 1, verdict, &clause))
}

pub fn search_problem_biregular(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    let scope = EnumerationScope { bipartite_only: true, ..scope.clone() };
    let graphs = scope.graphs()?;
    Ok(sweep(&graphs, |g| biregular_finding(g).into_iter().collect()))
}

/// For a quasi graph: whether it is edge-transitive. A graph that is not is
/// a witness for the edge-transitivity problem. `None` if not quasi.
pub fn edge_transitive_finding(g: &Graph) -> Result<Option<Finding>> {
    const CHECK: &str = "edge-transitive";
    if !verdict_at(g, 1).is_some_and(|c| c.is_quasi()) {
        return Ok(None);
    }
    let et = is_edge_transitive(g)?;
    let verdict = if et { Verdict::Confirmed } else { Verdict::Counterexample };
    Ok(Some(Finding::about(CHECK, g, 1, verdict, &format!("edge-transitive={}", yes(et)))))
}

pub fn search_problem_edge_transitive(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    let graphs = scope.graphs()?;
    let out: Vec<Finding> =
        graphs.par_iter().map(edge_transitive_finding).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    let mut out = super::reverified(out);
    super::sort_findings(&mut out);
    Ok(out)
}

/// `Ok((q, roots))` when `g` is `K_q` with pendants on distinct roots
/// (roots sorted); otherwise the first violated clause.
pub fn pendant_structure(g: &Graph) -> std::result::Result<(usize, Vec<usize>), String> {
    let pendants: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let core: Vec<usize> = g.vertices().filter(|&v| g.degree(v) != 1).collect();
    if core.is_empty() {
        return Err("every vertex is a pendant".into());
    }
    let mut roots = Vec::with_capacity(pendants.len());
    for &p in &pendants {
        let r = g.neighbors(p)[0];
        if g.degree(r) == 1 {
            return Err(format!("pendants {p} and {r} are adjacent"));
        }
        if roots.contains(&r) {
            return Err(format!("two pendants share root {r}"));
        }
        roots.push(r);
    }
    for (i, &u) in core.iter().enumerate() {
        for &w in &core[i + 1..] {
            if !g.has_edge(u, w) {
                return Err(format!("non-pendant vertices {u} and {w} are not adjacent"));
            }
        }
    }
    roots.sort_unstable();
    Ok((core.len(), roots))
}

/// Minimum-degree-1 graphs that are quasi at n = 2 must be complete graphs
/// with pendants on distinct roots; conversely `K_q` plus `r` such pendants
/// is quasi at n = 2 with λ = q + r - 2 whenever that exceeds 1.
pub fn check_pendant_proposition(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    let graphs = scope.graphs()?;
    let mut out = sweep(&graphs, |g| {
        if g.min_degree() != 1 || !verdict_at(g, 2).is_some_and(|c| c.is_quasi()) {
            return Vec::new();
        }
        let f = match pendant_structure(g) {
            Ok((q, roots)) => Finding::about(
                "pendant-proposition",
                g,
                2,
                Verdict::Confirmed,
                &format!("complete K{q} plus {} pendants on distinct roots", roots.len()),
            ),
            Err(why) => Finding::about("pendant-proposition", g, 2, Verdict::Counterexample, &why),
        };
        vec![f]
    });
    let max = scope.max_order;
    for q in 2..=max {
        for r in 1..=q.min(max - q) {
            if q + r - 2 <= 1 {
                continue;
            }
            let roots: Vec<usize> = (0..r).collect();
            let g = complete_with_pendants(q, &roots)?.graph;
            let want = Classification::QuasiBalanced(2, Rational::from_int((q + r - 2) as u64));
            let verdict = if verdict_at(&g, 2) == Some(want) { Verdict::Confirmed } else { Verdict::Counterexample };
            out.push(Finding::about(
                "pendant-construction",
                &g,
                2,
                verdict,
                &format!("K{q} with {r} pendants, expected lambda={}/1", q + r - 2),
            ));
        }
    }
    let mut out = super::reverified(out);
    super::sort_findings(&mut out);
    Ok(out)
}

/// Balanced at n = 1 exactly when transmission-regular (order >= 2).
pub fn check_transmission_regular(scope: &EnumerationScope) -> Result<Vec<Finding>> {
    const CHECK: &str = "transmission-regular";
    let graphs = scope.graphs()?;
    Ok(sweep(&graphs, |g| {
        if g.order() < 2 {
            return Vec::new();
        }
        let balanced = verdict_at(g, 1).is_some_and(|c| c.is_balanced());
        let tr = is_transmission_regular(g).expect("connected");
        let verdict = if balanced == tr { Verdict::Confirmed } else { Verdict::Counterexample };
        vec![Finding::about(CHECK, g, 1, verdict, &format!("transmission-regular={}", yes(tr)))]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, complete_graph, cycle, empty_graph, star};
    use crate::verification::count;

    #[test]
    fn edge_removal_examples() {
        for (a, b) in [(2, 3), (3, 4)] {
            let f = check_edge_removal(&complete_bipartite(a, b).unwrap()).unwrap();
            assert_eq!(f.verdict, Verdict::Confirmed, "{f}");
        }
        assert!(check_edge_removal(&star(3).unwrap()).is_err());
        assert!(check_edge_removal(&cycle(6).unwrap()).is_err());
    }

    #[test]
    fn edge_removal_witness_at_order_seven() {
        // C6 plus a vertex joined to 0, 2, 4.
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 2), (6, 4)]);
        let g = Graph::from_edges(7, edges).unwrap();
        let f = check_edge_removal(&g).unwrap();
        assert_eq!(f.verdict, Verdict::Counterexample);
        assert!(f.detail.starts_with("n=1 verdict=quasi lambda=4/3"));
    }

    #[test]
    fn corona_examples() {
        let c = corona(&empty_graph(3).unwrap(), &empty_graph(2).unwrap());
        assert_eq!(c.components().len(), 3);
        let p4 = corona(&complete_graph(2).unwrap(), &empty_graph(1).unwrap());
        assert_eq!(verdict_at(&p4, 1), Some(Classification::Unbalanced(1)));
        let f = check_corona(3).unwrap();
        assert_eq!(count(&f, Verdict::Counterexample), 0);
        assert!(check_corona(6).is_err());
    }

    #[test]
    fn tensor_examples() {
        let p3 = star(2).unwrap();
        assert!(!tensor(&p3, &p3).is_connected());
        let f = tensor_findings(&p3, &p3);
        assert!(f.iter().any(|f| f.check == "tensor-disconnected" && f.verdict == Verdict::Confirmed));
        assert!(f.iter().all(|f| f.verdict != Verdict::Counterexample));
        let k3 = complete_graph(3).unwrap();
        assert_eq!(tensor_distance(&k3, &k3, (0, 0), (1, 1)), Some(1));
        assert_eq!(tensor_distance(&k3, &k3, (0, 0), (0, 1)), Some(2));
        let k2 = complete_graph(2).unwrap();
        assert_eq!(tensor_distance(&k2, &k2, (0, 0), (0, 1)), None);
    }

    #[test]
    fn conjecture_examples() {
        let scope = EnumerationScope::up_to(4);
        let f = search_conjecture(&scope).unwrap();
        let key = to_graph6(&crate::verification::canonical_form(&star(3).unwrap()).unwrap()).unwrap();
        let star3 = f.iter().find(|f| f.check == "conjecture" && f.graph6 == key).unwrap();
        assert!(star3.detail.ends_with("deg-set=2 d-set=2"));
        let k23 = complete_bipartite(2, 3).unwrap();
        let d = DistanceMatrix::new(&k23).unwrap();
        let t: HashSet<u64> = crate::balance::total_distances(&d).into_iter().collect();
        assert_eq!(t, HashSet::from([5, 6]));
    }

    #[test]
    fn biregular_and_edge_transitive_examples() {
        let f = biregular_finding(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert!(f.detail.starts_with("n=1 verdict=quasi lambda=3/2"));
        assert!(biregular_finding(&cycle(6).unwrap()).is_none());
        let f = edge_transitive_finding(&complete_bipartite(2, 3).unwrap()).unwrap().unwrap();
        assert_eq!(f.verdict, Verdict::Confirmed);
        assert!(edge_transitive_finding(&cycle(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn pendant_examples() {
        let l = complete_with_pendants(4, &[0, 1]).unwrap();
        assert_eq!(pendant_structure(&l.graph), Ok((4, vec![0, 1])));
        let same = Graph::from_edges(6, complete_graph(4).unwrap().edges().chain([(0, 4), (0, 5)])).unwrap();
        assert!(pendant_structure(&same).unwrap_err().contains("share root"));
        assert!(!verdict_at(&same, 2).unwrap().is_quasi());
    }

    #[test]
    fn small_sweeps_are_clean() {
        let scope = EnumerationScope::up_to(6);
        for f in [
            check_bipartite_theorem(&scope).unwrap(),
            check_pendant_proposition(&scope).unwrap(),
            check_transmission_regular(&scope).unwrap(),
        ] {
            assert_eq!(count(&f, Verdict::Counterexample), 0);
            assert!(!f.is_empty());
        }
    }
}
