use proptest::prelude::*;

use chordal_contract::clique_tree::{
    tree_connected_check, tree_contract, validate_tree_decomposition,
};
use chordal_contract::generators::random_chordal;
use chordal_contract::{
    build_clique_tree, graph_hash, parse_graph, serialize_graph, Format, Graph, VertexSet,
};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges = all.zip(bits).filter(|&(_, keep)| keep).map(|(p, _)| p);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = serialize_graph(&g, Format::EdgeList);
        prop_assert_eq!(parse_graph(&text, Format::EdgeList).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph()) {
        let text = serialize_graph(&g, Format::Dimacs);
        prop_assert_eq!(parse_graph(&text, Format::Dimacs).unwrap(), g.clone());
        prop_assert_eq!(graph_hash(&g), graph_hash(&parse_graph(&text, Format::Dimacs).unwrap()));
    }

    #[test]
    fn contraction_shape(g in arb_graph()) {
        for e in g.edges() {
            let c = g.contract_edge(e).unwrap();
            prop_assert_eq!(c.graph.vertex_count(), g.vertex_count() - 1);
            prop_assert_eq!(c.vertex_map[e.u], c.merged_vertex);
            prop_assert_eq!(c.vertex_map[e.v], c.merged_vertex);
            let expected: VertexSet = g.neighbors(e.u).iter().chain(g.neighbors(e.v))
                .filter(|&&w| w != e.u && w != e.v)
                .map(|&w| c.vertex_map[w])
                .collect();
            let got: VertexSet = c.graph.neighbors(c.merged_vertex).iter().copied().collect();
            prop_assert_eq!(got, expected);
            // Edges away from the endpoints survive unchanged.
            for f in g.edges().into_iter().filter(|f| !f.contains(e.u) && !f.contains(e.v)) {
                prop_assert!(c.graph.has_edge(c.vertex_map[f.u], c.vertex_map[f.v]));
            }
        }
    }

    #[test]
    fn deleting_nothing_is_identity(g in arb_graph()) {
        let (h, map) = g.induced_delete(&VertexSet::new()).unwrap();
        prop_assert_eq!(h, g.clone());
        prop_assert!(map.iter().enumerate().all(|(i, m)| *m == Some(i)));
    }

    #[test]
    fn contracted_clique_tree_stays_valid(n in 2usize..11, density in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_chordal(n, density, seed);
        prop_assume!(g.is_connected());
        let t = build_clique_tree(&g).unwrap();
        prop_assert!(validate_tree_decomposition(&t, &g).is_valid());
        prop_assert!(tree_connected_check(&t));
        for e in g.edges() {
            let c = g.contract_edge(e).unwrap();
            let te = tree_contract(&t, e, &c).unwrap();
            prop_assert!(validate_tree_decomposition(&te, &c.graph).is_valid());
        }
    }
}
