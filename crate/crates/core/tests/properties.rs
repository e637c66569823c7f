mod common;

use proptest::prelude::*;
use qdb::balance::{is_transmission_regular, total_distances, w_counts};
use qdb::constructions::tensor;
use qdb::verification::{canonical_code, oracle, tensor_distance, EnumerationScope};
use qdb::{classify, parse_graph6, to_graph6, w_partition, BalanceReport, Classification, DistanceMatrix, Rational};
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{bfs, random_connected, random_graph};

fn connected(max: usize) -> impl Strategy<Value = qdb::Graph> {
    (2..=max, 0.0f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(&mut StdRng::seed_from_u64(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn w_partition_covers_vertices(g in connected(12), a in any::<usize>(), b in any::<usize>()) {
        let n = g.order();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let d = DistanceMatrix::new(&g).unwrap();
        let p = w_partition(&g, &d, u, v).unwrap();
        let mut all: Vec<usize> = p.closer_to_u.iter().chain(&p.closer_to_v).chain(&p.equidistant).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        prop_assert!(p.closer_to_u.contains(&u) && p.closer_to_v.contains(&v));
        prop_assert_eq!(w_counts(&d, u, v), (p.closer_to_u.len(), p.closer_to_v.len(), p.equidistant.len()));
    }

    #[test]
    fn graph6_round_trip(n in 1usize..=62, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(&mut StdRng::seed_from_u64(seed), n, p);
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn distances_match_bfs(g in connected(12)) {
        let d = DistanceMatrix::new(&g).unwrap();
        for s in g.vertices() {
            let row: Vec<u32> = bfs(&g, s).into_iter().map(Option::unwrap).collect();
            prop_assert_eq!(d.row(s), &row[..]);
        }
    }

    #[test]
    fn classification_agrees_with_oracle(g in connected(10), n in 1u32..4) {
        let r = classify(&g, n).unwrap();
        let fw = oracle::floyd_warshall(&g).unwrap();
        prop_assert_eq!(&r.verdict, &oracle::classify(&fw, n));
        prop_assert!(r.is_consistent());
        if let Classification::QuasiBalanced(_, lambda) = r.verdict {
            prop_assert!(lambda > Rational::ONE);
        }
        let parsed: BalanceReport = r.to_string().parse().unwrap();
        prop_assert_eq!(parsed, r);
    }

    #[test]
    fn tensor_law_matches_bfs(g in connected(7), h in connected(7), s in any::<usize>()) {
        let t = tensor(&g, &h);
        let k = h.order();
        let src = s % t.order();
        let reach = bfs(&t, src);
        for dst in t.vertices() {
            let law = tensor_distance(&g, &h, (src / k, src % k), (dst / k, dst % k));
            prop_assert_eq!(law, reach[dst], "{} -> {}", src, dst);
        }
    }

    #[test]
    fn canonical_code_ignores_labels(g in connected(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn bipartite_edges_have_no_equidistant_vertex(a in 1usize..6, b in 1usize..6, p in 0.2f64..1.0, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = StdRng::seed_from_u64(seed);
        let mut edges: Vec<(usize, usize)> = (1..b).map(|j| (0, a + j)).collect();
        edges.extend((0..a).map(|i| (i, a)));
        edges.extend((0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).filter(|_| rng.gen_bool(p)));
        let g = qdb::Graph::from_edges(a + b, edges).unwrap();
        let d = DistanceMatrix::new(&g).unwrap();
        for (u, v) in g.edges() {
            prop_assert_eq!(w_counts(&d, u, v).2, 0);
        }
    }

    #[test]
    fn ratio_is_reduced_and_at_least_one(a in 1usize..1000, b in 1usize..1000) {
        let r = Rational::ratio_max_min(a, b);
        prop_assert!(r >= Rational::ONE);
        prop_assert_eq!(r.numer() * a.min(b) as u64, r.denom() * a.max(b) as u64);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
}

#[test]
fn bipartite_edges_exhaustive_to_8() {
    let scope = EnumerationScope { bipartite_only: true, ..EnumerationScope::up_to(8) };
    for g in scope.graphs().unwrap() {
        let d = DistanceMatrix::new(&g).unwrap();
        for (u, v) in g.edges() {
            assert_eq!(w_counts(&d, u, v).2, 0, "{}", to_graph6(&g).unwrap());
        }
    }
}

#[test]
fn balanced_iff_transmission_regular_to_7() {
    let scope = EnumerationScope { min_order: 2, ..EnumerationScope::up_to(7) };
    for g in scope.graphs().unwrap() {
        let balanced = classify(&g, 1).unwrap().verdict.is_balanced();
        let d = DistanceMatrix::new(&g).unwrap();
        let sums = total_distances(&d);
        assert_eq!(sums.iter().all(|&s| s == sums[0]), is_transmission_regular(&g).unwrap());
        assert_eq!(balanced, is_transmission_regular(&g).unwrap(), "{}", to_graph6(&g).unwrap());
    }
}
