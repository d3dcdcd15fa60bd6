use proptest::prelude::*;

use powergraph::product::product_graph;
use powergraph::verify::sweep_family;
use powergraph::{
    are_isomorphic, generalized_product_graph, graphs_equal_labeled, ApPair, FiniteGroup,
    Generalization, PowerGraphBundle, ProductKind, SimpleGraph,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            SimpleGraph::from_edges((0..n).map(|i| i.to_string()).collect(), edges).unwrap()
        })
    })
}

fn weights_strategy(n: usize) -> impl Strategy<Value = Generalization> {
    prop::collection::vec((0u64..6, 0u64..5), n * n)
        .prop_map(move |cells| Generalization::from_fn(n, |u, v| ApPair::from(cells[u * n + v])))
}

fn graph_with_weights(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Generalization)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), weights_strategy(n))
    })
}

fn family_group() -> impl Strategy<Value = FiniteGroup> {
    let family = sweep_family(12);
    (0..family.len()).prop_map(move |i| family[i].clone())
}

fn assert_simple(g: &SimpleGraph) {
    let n = g.vertex_count();
    let mut count = 0;
    for u in 0..n {
        assert!(!g.adjacent(u, u));
        for v in 0..n {
            assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
            count += usize::from(u < v && g.adjacent(u, v));
        }
    }
    assert_eq!(count, g.edge_count());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generalized_products_are_simple_graphs(
        (a, wa) in graph_with_weights(5),
        (b, wb) in graph_with_weights(5),
    ) {
        let g = generalized_product_graph(&a, &wa, &b, &wb).unwrap();
        assert_simple(&g);
    }

    #[test]
    fn classical_products_are_simple_graphs(a in graph_strategy(6), b in graph_strategy(6)) {
        for kind in [ProductKind::Direct, ProductKind::Cartesian, ProductKind::Normal] {
            assert_simple(&product_graph(kind, &a, &b, None).unwrap());
        }
    }

    #[test]
    fn relabeling_preserves_isomorphism(g in graph_strategy(10), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a simple LCG so the strategy stays shrinkable.
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        let pi = are_isomorphic(&g, &h).unwrap().expect("isomorphic");
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.adjacent(u, v), h.adjacent(pi[u], pi[v]));
            }
        }
    }

    #[test]
    fn labeled_equality_implies_isomorphism(a in graph_strategy(7), b in graph_strategy(7)) {
        if graphs_equal_labeled(&a, &b) {
            prop_assert!(are_isomorphic(&a, &b).unwrap().is_some());
        }
        prop_assert_eq!(
            are_isomorphic(&a, &b).unwrap().is_some(),
            are_isomorphic(&b, &a).unwrap().is_some()
        );
    }

    #[test]
    fn json_round_trip(g in graph_strategy(12)) {
        let back = SimpleGraph::from_json(&g.to_json()).unwrap();
        prop_assert!(graphs_equal_labeled(&g, &back));
    }

    #[test]
    fn direct_products_obey_group_laws(g1 in family_group(), g2 in family_group()) {
        let g = g1.direct_product(&g2).unwrap();
        let n2 = g2.order();
        prop_assert_eq!(g.identity(), FiniteGroup::encode_pair(g1.identity(), g2.identity(), n2));
        for x in g.elements() {
            let (x1, x2) = FiniteGroup::decode_pair(x, n2);
            prop_assert_eq!(FiniteGroup::encode_pair(x1, x2, n2), x);
            let o = num_lcm(g1.element_order(x1), g2.element_order(x2));
            prop_assert_eq!(g.element_order(x), o);
        }
        let bundle = PowerGraphBundle::new(&g);
        prop_assert!(g.order() < 2 || bundle.graph.has_universal_vertex());
    }
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[test]
fn trivial_factor_keeps_power_graph() {
    let trivial = FiniteGroup::cyclic(1).unwrap();
    for g in sweep_family(24) {
        let left = PowerGraphBundle::new(&trivial.direct_product(&g).unwrap()).graph;
        assert!(graphs_equal_labeled(
            &left,
            &PowerGraphBundle::new(&g).graph
        ));
    }
}

#[test]
fn coprime_cyclic_product_matches_cyclic_group() {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let c6 = FiniteGroup::cyclic(6).unwrap();
    let c2c3 = c2.direct_product(&c3).unwrap();
    let mut lhs = c2c3.element_orders().to_vec();
    let mut rhs = c6.element_orders().to_vec();
    lhs.sort_unstable();
    rhs.sort_unstable();
    assert_eq!(lhs, rhs);
    let pa = PowerGraphBundle::new(&c2c3).graph;
    let pb = PowerGraphBundle::new(&c6).graph;
    assert!(are_isomorphic(&pa, &pb).unwrap().is_some());
}
