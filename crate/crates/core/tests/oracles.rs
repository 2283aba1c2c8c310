//! Library routines checked against independent brute-force computations.

use std::collections::BTreeSet;

use chordal_contract::chordal::{is_perfect_elimination_order, maximal_cliques};
use chordal_contract::clique_tree::{all_clique_trees, validate_tree_decomposition};
use chordal_contract::contractibility::{
    classify_edge_theorem, is_contractible_oracle, non_contractible_via_cutsets,
};
use chordal_contract::generators::{
    enumerate_connected, enumerate_small_chordal, random_chordal, random_connected, random_ktree,
    SplitMix64,
};
use chordal_contract::separators::{
    edge_labels, vertex_connectivity_by_enumeration, vertex_connectivity_by_flow,
};
use chordal_contract::{
    build_clique_tree, is_chordal, vertex_connectivity, Chordality, Graph, VertexSet,
};

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// True iff some vertex subset of size at least 4 induces a cycle.
fn has_chordless_cycle(g: &Graph) -> bool {
    subsets(g.vertex_count()).filter(|s| s.len() >= 4).any(|s| {
        let degree = |v: usize| s.iter().filter(|&&w| g.has_edge(v, w)).count();
        if !s.iter().all(|&v| degree(v) == 2) {
            return false;
        }
        // 2-regular: a single cycle iff connected.
        let mut seen = vec![s[0]];
        let mut stack = vec![s[0]];
        while let Some(v) = stack.pop() {
            for &w in &s {
                if g.has_edge(v, w) && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == s.len()
    })
}

fn brute_force_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let cliques: Vec<VertexSet> = subsets(g.vertex_count())
        .filter(|s| !s.is_empty() && g.is_clique(s.iter()))
        .map(|s| s.into_iter().collect())
        .collect();
    let mut maximal: Vec<VertexSet> = cliques
        .iter()
        .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .cloned()
        .collect();
    maximal.sort();
    maximal
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len()).map(move |m| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| m >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, edges).unwrap()
    })
}

#[test]
fn chordality_matches_chordless_cycle_search_exhaustively() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let verdict = is_chordal(&g);
            assert_eq!(verdict.is_chordal(), !has_chordless_cycle(&g), "{g:?}");
            match verdict {
                Chordality::Chordal { peo } => assert!(is_perfect_elimination_order(&g, &peo)),
                Chordality::NotChordal { cycle, .. } => {
                    assert!(cycle.len() >= 4);
                    for (i, &v) in cycle.iter().enumerate() {
                        for (j, &w) in cycle.iter().enumerate() {
                            let adjacent = (i + 1) % cycle.len() == j || (j + 1) % cycle.len() == i;
                            if i != j {
                                assert_eq!(
                                    g.has_edge(v, w),
                                    adjacent,
                                    "witness {cycle:?} in {g:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn chordality_matches_chordless_cycle_search_on_random_graphs() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..300 {
        let n = rng.range(7, 10);
        let g = random_connected(n, 0.3 + 0.6 * rng.unit(), rng.next_u64());
        assert_eq!(
            is_chordal(&g).is_chordal(),
            !has_chordless_cycle(&g),
            "{g:?}"
        );
    }
}

#[test]
fn connected_chordal_counts() {
    // Labeled connected chordal graphs on 4 vertices, counted by a second test.
    let independent = enumerate_connected(4)
        .unwrap()
        .filter(|g| !has_chordless_cycle(g))
        .count();
    assert_eq!(independent, 35);
    assert_eq!(enumerate_small_chordal(4).unwrap().count(), 35);
    assert_eq!(enumerate_small_chordal(5).unwrap().count(), 541);
}

#[test]
fn maximal_cliques_match_subset_enumeration() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..300 {
        let n = rng.range(1, 10);
        let g = random_chordal(n, rng.unit(), rng.next_u64());
        let peo = match is_chordal(&g) {
            Chordality::Chordal { peo } => peo,
            Chordality::NotChordal { .. } => panic!("generator produced a non-chordal graph"),
        };
        assert_eq!(
            maximal_cliques(&g, &peo).unwrap(),
            brute_force_maximal_cliques(&g),
            "{g:?}"
        );
    }
}

#[test]
fn flow_connectivity_matches_enumeration() {
    let mut rng = SplitMix64::new(23);
    for _ in 0..400 {
        let n = rng.range(1, 10);
        let g = random_connected(n, rng.unit(), rng.next_u64());
        let by_enumeration = vertex_connectivity_by_enumeration(&g, 12).unwrap();
        assert_eq!(vertex_connectivity_by_flow(&g), by_enumeration, "{g:?}");
        assert_eq!(vertex_connectivity(&g), by_enumeration);
    }
    assert_eq!(vertex_connectivity_by_flow(&Graph::complete(7)), 6);
    assert_eq!(vertex_connectivity_by_flow(&Graph::path(5)), 1);
}

#[test]
fn cutset_characterization_on_small_general_graphs() {
    for n in 3..=5 {
        for g in enumerate_connected(n).unwrap().filter(|g| !g.is_complete()) {
            for e in g.edges() {
                assert_eq!(
                    !is_contractible_oracle(&g, e).unwrap(),
                    non_contractible_via_cutsets(&g, e, 16).unwrap(),
                    "{e} in {g:?}"
                );
            }
        }
    }
}

fn separator_set(t: &chordal_contract::CliqueTree) -> BTreeSet<VertexSet> {
    edge_labels(t).unwrap().into_iter().collect()
}

fn check_tree_independence(g: &Graph) {
    let trees = all_clique_trees(g, 64).unwrap();
    assert!(!trees.is_empty());
    let kappa = vertex_connectivity(g);
    let reference = &trees[0];
    for t in &trees {
        assert!(validate_tree_decomposition(t, g).is_valid());
        assert_eq!(separator_set(t), separator_set(reference), "{g:?}");
        if g.vertex_count() >= kappa + 2 {
            for e in g.edges() {
                let a = classify_edge_theorem(g, t, e, kappa).unwrap().verdict;
                let b = classify_edge_theorem(g, reference, e, kappa)
                    .unwrap()
                    .verdict;
                assert_eq!(a, b, "{e} in {g:?}");
            }
        }
    }
}

#[test]
fn classification_is_independent_of_the_clique_tree() {
    for n in 2..=6 {
        for g in enumerate_small_chordal(n).unwrap() {
            check_tree_independence(&g);
        }
    }
    let mut rng = SplitMix64::new(31);
    for _ in 0..200 {
        let n = rng.range(7, 9);
        let g = if rng.chance(0.5) {
            random_ktree(n, rng.range(1, 3), rng.next_u64()).unwrap()
        } else {
            random_chordal(n, rng.unit(), rng.next_u64())
        };
        if g.is_connected() {
            check_tree_independence(&g);
        }
    }
}

#[test]
fn default_tree_is_among_all_trees() {
    let g = random_chordal(9, 0.5, 4);
    let t = build_clique_tree(&g).unwrap();
    assert!(all_clique_trees(&g, 1000).unwrap().contains(&t));
}
