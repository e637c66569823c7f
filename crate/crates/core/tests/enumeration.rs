mod common;

use std::collections::{HashMap, HashSet};

use qdb::verification::{all_graphs, canonical_code, canonical_form, connected_codes, from_code, EnumerationScope};
use qdb::{parse_graph6, to_graph6};

use common::{brute_min_code, from_bits, pair_index, permutations};

/// Connected isomorphism classes per order, counted by minimising the edge
/// bitmask over all `n!` relabellings.
fn brute_classes(n: usize) -> HashMap<u64, Vec<qdb::Graph>> {
    let perms = permutations(n);
    let mut classes: HashMap<u64, Vec<qdb::Graph>> = HashMap::new();
    for bits in 0..1u64 << pair_index(n).len() {
        let g = from_bits(n, bits);
        if g.is_connected() {
            classes.entry(brute_min_code(&g, &perms)).or_default().push(g);
        }
    }
    classes
}

#[test]
fn connected_counts_match_brute_force() {
    let levels = connected_codes(6).unwrap();
    for (n, level) in levels.iter().enumerate().skip(1) {
        assert_eq!(level.len(), brute_classes(n).len(), "order {n}");
    }
    assert_eq!(levels.iter().skip(1).map(Vec::len).collect::<Vec<_>>(), [1, 1, 2, 6, 21, 112]);
}

#[test]
fn canonical_code_separates_exactly_the_brute_force_classes() {
    for n in 1..=6 {
        let classes = brute_classes(n);
        let mut seen = HashSet::new();
        for members in classes.values() {
            let codes: HashSet<u128> = members.iter().map(|g| canonical_code(g).unwrap()).collect();
            assert_eq!(codes.len(), 1, "order {n}: one class, several codes");
            assert!(seen.insert(*codes.iter().next().unwrap()), "order {n}: two classes share a code");
        }
    }
}

#[test]
fn all_graphs_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34]);
}

#[test]
fn enumeration_is_canonical_and_sorted() {
    let graphs = EnumerationScope::up_to(7).graphs().unwrap();
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21 + 112 + 853);
    let keys: Vec<(usize, u128)> = graphs.iter().map(|g| (g.order(), canonical_code(g).unwrap())).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    for g in graphs.iter().step_by(37) {
        assert_eq!(&canonical_form(g).unwrap(), g);
        assert_eq!(from_code(g.order(), canonical_code(g).unwrap()), *g);
    }
}

#[test]
fn ingest_dedups_and_filters() {
    let text = ["Bw", "Bw", "A?", "CF", "Cs"].join("\n");
    let list: Vec<qdb::Graph> = text.lines().map(|l| parse_graph6(l).unwrap()).collect();
    let graphs = EnumerationScope::up_to(4).with_ingest(list).graphs().unwrap();
    let names: Vec<String> = graphs.iter().map(|g| to_graph6(g).unwrap()).collect();
    assert_eq!(names.len(), 2, "{names:?}");
}
