use std::collections::HashMap;

use proptest::collection::vec;
use proptest::prelude::*;

use cm2_core::io::{edgelist, graph6, trace};
use cm2_core::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph_and_tags(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u8>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), vec(0u8..3, m))
    })
}

fn orientation_from_tags(g: &Graph, tags: &[u8]) -> MixedGraph {
    let choice: HashMap<_, _> = g
        .edges()
        .zip(tags)
        .map(|(e, t)| {
            let tag = match t {
                0 => EdgeTag::Forward,
                1 => EdgeTag::Backward,
                _ => EdgeTag::Undirected,
            };
            (e, tag)
        })
        .collect();
    partial_orientation(g, &choice).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(16)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn relabeling_preserves_everything((g, sigma) in graph_and_permutation(14)) {
        let h = g.permute(&sigma).unwrap();
        let mut a = g.degrees();
        let mut b = h.degrees();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(g.edge_count(), h.edge_count());
        prop_assert_eq!(cm2(&g), cm2(&h));
        prop_assert_eq!(m2(&g), m2(&h));
        prop_assert_eq!(g.is_complete_split().map(|w| w.m), h.is_complete_split().map(|w| w.m));
    }

    #[test]
    fn three_readings_agree_on_the_degree_orientation(g in graph_strategy(16)) {
        let ctx = OrientationContext::orient(&g);
        prop_assert_eq!(cm2_arc_form(ctx.mixed()), cm2(&g));
        prop_assert_eq!(cm2_vertex_form(ctx.mixed()), cm2(&g));
    }

    #[test]
    fn arc_form_bounds_cm2_from_below((g, tags) in graph_and_tags(12)) {
        let f = orientation_from_tags(&g, &tags);
        prop_assert!(cm2_arc_form(&f) <= cm2(&g));
        prop_assert_eq!(cm2_arc_form(&f), cm2_vertex_form(&f));
        for u in 0..g.order() {
            prop_assert_eq!(f.degrees(u).total, g.degree(u));
        }
    }

    #[test]
    fn every_move_is_monotone(g in graph_strategy(10)) {
        let before = cm2(&g);
        let ctx = OrientationContext::orient(&g);
        for mv in enumerate_moves(&g) {
            let after = cm2(&apply_move(&g, mv).unwrap());
            match mv {
                Move::A { u, v } => {
                    prop_assert!(after >= before);
                    if after == before {
                        prop_assert!(rewrites::a_plateau_conditions(&ctx, u, v));
                    }
                }
                _ => prop_assert!(after > before, "{} on {:?}", mv, g),
            }
        }
    }

    #[test]
    fn climb_certificates_replay(g in graph_strategy(9), best in any::<bool>()) {
        let policy = if best { Policy::BestImprovement } else { Policy::FirstImprovement };
        let t = climb(&g, &ClimbConfig { policy, allow_plateau_a: false });
        prop_assert!(t.is_strictly_increasing());
        prop_assert!(t.steps.len() as i64 <= t.gain());
        prop_assert_eq!(t.replay().unwrap(), t.final_graph.clone());
        let text = trace::to_text(&t).unwrap();
        prop_assert_eq!(trace::from_text(&text).unwrap(), t);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(40)) {
        let code = graph6::encode(&g).unwrap();
        prop_assert!(code.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&code).unwrap(), g.clone());
        prop_assert_eq!(graph6::encode(&graph6::decode(&code).unwrap()).unwrap(), code);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(20), one_based in any::<bool>()) {
        prop_assert_eq!(edgelist::parse(&edgelist::emit(&g, one_based), one_based).unwrap(), g);
    }

    #[test]
    fn recognizer_agrees_with_brute_force(g in graph_strategy(7)) {
        // K_m ∨ K̄_{n−m} up to relabeling: some m-set is a clique joined to an independent rest
        let n = g.order();
        let brute = n >= 2 && (1usize..(1 << n)).any(|set| {
            let m = set.count_ones() as usize;
            m < n && (0..n).all(|u| (u + 1..n).all(|v| {
                let (iu, iv) = ((set >> u) & 1 == 1, (set >> v) & 1 == 1);
                g.has_edge(u, v) == (iu || iv)
            }))
        });
        prop_assert_eq!(g.is_complete_split().is_some(), brute);
    }
}

#[test]
fn closed_form_matches_direct_evaluation() {
    for n in 2..=40 {
        for m in 1..n {
            assert_eq!(split_closed_form(m, n).unwrap(), cm2(&Graph::complete_split(m, n).unwrap()));
        }
    }
}

#[test]
fn complete_split_graphs_are_fixed_points() {
    for n in 2..=12 {
        for m in 1..n {
            let g = Graph::complete_split(m, n).unwrap();
            let value = cm2(&g);
            for mv in enumerate_moves(&g) {
                assert_eq!(mv.kind(), MoveKind::A, "m={m} n={n}");
                assert_eq!(cm2(&apply_move(&g, mv).unwrap()), value);
            }
            assert!(climb(&g, &ClimbConfig::default()).steps.is_empty());
            assert!(check_claims(&g).all_pass(), "m={m} n={n}");
        }
    }
}
