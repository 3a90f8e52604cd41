mod common;

use std::collections::HashSet;

use common::*;
use pcf_coloring::coloring::{check, check_pcf};
use pcf_coloring::graph::Bipartition;
use pcf_coloring::reductions::*;
use pcf_coloring::solver::{decide_coloring, Budget};
use pcf_coloring::{Graph, PlaneGraph, Variant};
use proptest::prelude::*;

fn roles_are_bijective(out: &GadgetOutput, n_orig: usize) -> bool {
    let labels = out.roles.labels();
    let distinct: HashSet<&String> = labels.iter().collect();
    labels.len() == out.graph.n()
        && distinct.len() == labels.len()
        && (0..n_orig).all(|v| out.roles.get(v) == format!("orig:{v}"))
}

fn reorder(side: &[usize], keys: &[u64]) -> Vec<usize> {
    let mut s = side.to_vec();
    s.sort_by_key(|&v| keys[v % keys.len()]);
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn constructor_counts(g in arb_graph(1, 9), k in 0usize..4) {
        let (n, m) = (g.n(), g.m());
        let s = subdivide(&g, k);
        prop_assert_eq!((s.graph.n(), s.graph.m()), (n + k * m, (k + 1) * m));
        prop_assert!(roles_are_bijective(&s, n));

        let p = add_pendants_all(&g);
        prop_assert_eq!((p.graph.n(), p.graph.m()), (2 * n, m + n));
        prop_assert!((n..2 * n).all(|v| p.graph.degree(v) == 1));
        prop_assert!(roles_are_bijective(&p, n));

        let evens = g.vertices().filter(|&v| g.degree(v) % 2 == 0).count();
        let e = add_pendants_even_degree(&g);
        prop_assert_eq!((e.graph.n(), e.graph.m()), (n + evens, m + evens));
        prop_assert!(g.vertices().all(|v| e.graph.degree(v) % 2 == 1));
        prop_assert!(roles_are_bijective(&e, n));

        let u = add_universal_vertex(&g);
        prop_assert_eq!((u.graph.n(), u.graph.m(), u.graph.degree(n)), (n + 1, m + n, n));
        prop_assert!(roles_are_bijective(&u, n));

        let t = add_two_universal(&g);
        prop_assert_eq!((t.graph.n(), t.graph.m()), (n + 2, m + 2 * n + 1));
        prop_assert!(t.graph.has_edge(n, n + 1));
        prop_assert!(roles_are_bijective(&t, n));
    }

    #[test]
    fn gadget_counts(a in 1usize..6, b in 1usize..6) {
        let out = build_gadget_gnm(a, b).unwrap();
        prop_assert_eq!((out.graph.n(), out.graph.m()), (2 * a + 2 * b + 6, 6 * a + 6 * b + 6));
        prop_assert!(roles_are_bijective(&out, 0));
    }

    #[test]
    fn tilde_counts_and_bipartite(g in arb_bipartite(5)) {
        if g.n() <= 3 {
            prop_assert_eq!(build_bipartite_tilde(&g).unwrap().graph, g);
            return Ok(());
        }
        let sides = tilde_sides(&g).unwrap();
        prop_assert!(sides.side_b.len() >= 2);
        let (a, b) = (sides.side_a.len(), sides.side_b.len());
        let out = build_bipartite_tilde(&g).unwrap();
        let gm = 6 * a + 6 * b + 6;
        prop_assert_eq!(out.graph.n(), g.n() + (2 * a + 2 * b + 6) + gm);
        prop_assert_eq!(out.graph.m(), g.m() + 2 * gm + 2 * a + 2 * b + 3);
        prop_assert!(out.graph.is_bipartite());
        prop_assert!(roles_are_bijective(&out, g.n()));
    }

    #[test]
    fn tent_counts_on_cycles(n in 3usize..12) {
        let pg = PlaneGraph::with_sorted_rotation(Graph::cycle(n)).unwrap();
        let out = attach_tents(&pg).unwrap();
        prop_assert_eq!(out.graph.n(), n + 2 * (8 * n + 6));
        prop_assert_eq!(out.graph.m(), n + 2 * (14 * n + 9));
        let last = format!("tent:1:v:{}", 4 * n + 2);
        prop_assert!(out.roles.find(&last).is_some());
        prop_assert!(roles_are_bijective(&out, n));
    }

    #[test]
    fn bipartite_lift_is_valid_for_any_side_order(g in arb_bipartite(4), keys in proptest::collection::vec(any::<u64>(), 16)) {
        let sides = tilde_sides(&g).unwrap();
        let shuffled = Bipartition {
            side_a: reorder(&sides.side_a, &keys),
            side_b: reorder(&sides.side_b, &keys),
        };
        let mut orders = vec![sides.clone(), shuffled];
        if sides.side_a.len() >= 2 {
            orders.push(sides.swapped());
        }
        for variant in [Variant::Pcf, Variant::Odd] {
            let Some(c) = decide_coloring(&g, 3, variant, Budget::default()).unwrap().witness else { continue };
            for order in &orders {
                let out = lift_bipartite_with_sides(&g, &c, variant, order).unwrap();
                let lifted = out.coloring.as_ref().unwrap();
                prop_assert!(check(&out.graph, lifted, variant).unwrap().verdict);
                prop_assert!(lifted.k() <= 4);
                let originals: Vec<usize> = g.vertices().collect();
                let restricted = lifted.restrict(&originals).unwrap();
                prop_assert_eq!(restricted.colors(), c.colors());
                for v in 0..out.graph.n() {
                    let role = out.roles.get(v);
                    if role.starts_with("a:") || role.starts_with("b:") {
                        prop_assert_eq!(lifted.color(v), 4);
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_extension_is_valid(g in arb_graph(1, 8), extra in 0usize..3) {
        let chi = (1..=g.n()).find(|&k| decide_coloring(&g, k, Variant::Proper, Budget::default()).unwrap().is_sat()).unwrap();
        let c = decide_coloring(&g, chi, Variant::Proper, Budget::default()).unwrap().witness.unwrap();
        let k = chi.max(5) + extra;
        let out = greedy_extend_subdivision(&g, &c, k).unwrap();
        let lifted = out.coloring.as_ref().unwrap();
        prop_assert!(satisfies(&out.graph, lifted.colors(), Variant::Pcf));
        prop_assert!(lifted.k() <= k);
        prop_assert_eq!(&lifted.colors()[..g.n()], c.colors());
    }
}

#[test]
fn tents_on_an_embedded_k4() {
    let pg = PlaneGraph::new(Graph::complete(4), vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]).unwrap();
    let out = attach_tents(&pg).unwrap();
    assert_eq!(out.graph.n(), 4 + 4 * (8 * 3 + 6));
    assert_eq!(out.graph.m(), 6 + 4 * (14 * 3 + 9));
    let c = decide_coloring(&Graph::complete(4), 3, Variant::Pcf, Budget::default()).unwrap();
    assert!(!c.is_sat(), "K4 needs four colors");
}

#[test]
fn planar_lift_restricts_to_input() {
    for n in [3, 6, 9] {
        let pg = PlaneGraph::with_sorted_rotation(Graph::cycle(n)).unwrap();
        let c = decide_coloring(pg.graph(), 3, Variant::Pcf, Budget::default()).unwrap().witness.unwrap();
        let out = lift_planar(&pg, &c).unwrap();
        let lifted = out.coloring.unwrap();
        assert!(check_pcf(&out.graph, &lifted).unwrap().verdict);
        let originals: Vec<usize> = (0..n).collect();
        assert_eq!(lifted.restrict(&originals).unwrap().colors(), c.colors());
    }
}

#[test]
fn lifts_reject_bad_input() {
    let g = Graph::path(4);
    let bad = pcf_coloring::Coloring::new(vec![1, 1, 2, 3]).unwrap();
    assert!(lift_bipartite(&g, &bad, Variant::Pcf).is_err());
    let four = pcf_coloring::Coloring::new(vec![1, 2, 3, 4]).unwrap();
    assert!(lift_bipartite(&g, &four, Variant::Pcf).is_err());
    assert!(build_bipartite_tilde(&Graph::cycle(5)).is_err());
    let pg = PlaneGraph::with_sorted_rotation(Graph::cycle(4)).unwrap();
    assert!(lift_planar(&pg, &four).is_err());
}
