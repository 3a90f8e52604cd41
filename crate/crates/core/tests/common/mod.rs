//! Shared strategies and independent reference implementations.
#![allow(dead_code)]

use std::collections::HashMap;

use pcf_coloring::{Coloring, Graph, Variant};
use proptest::prelude::*;

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Arbitrary simple graphs with `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

/// A graph together with an arbitrary (not necessarily proper) coloring from
/// `1..=k`.
pub fn arb_colored(lo: usize, hi: usize, k: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    arb_graph(lo, hi).prop_flat_map(move |g| {
        let n = g.n();
        proptest::collection::vec(1..=k, n)
            .prop_map(move |colors| (g.clone(), Coloring::with_palette(colors, k).unwrap()))
    })
}

/// Random bipartite graph: sides `0..a` and `a..a+b`, no isolated vertices.
pub fn arb_bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
    (1..=max_side, 2..=max_side).prop_flat_map(|(a, b)| {
        proptest::collection::vec(any::<bool>(), a * b).prop_map(move |mask| {
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    if mask[u * b + v] {
                        edges.push((u, a + v));
                    }
                }
            }
            // keep every vertex covered
            for u in 0..a {
                if !edges.iter().any(|&(x, _)| x == u) {
                    edges.push((u, a));
                }
            }
            for v in 0..b {
                if !edges.iter().any(|&(_, y)| y == a + v) {
                    edges.push((0, a + v));
                }
            }
            Graph::new(a + b, &edges).unwrap()
        })
    })
}

/// Neighbor color multiplicities, recomputed from the edge list.
fn multiset(g: &Graph, c: &[usize], v: usize) -> HashMap<usize, usize> {
    let mut m = HashMap::new();
    for &(x, y) in g.edges() {
        if x == v {
            *m.entry(c[y]).or_insert(0) += 1;
        } else if y == v {
            *m.entry(c[x]).or_insert(0) += 1;
        }
    }
    m
}

/// Reference predicate for the three variants.
pub fn satisfies(g: &Graph, c: &[usize], variant: Variant) -> bool {
    if g.edges().iter().any(|&(u, v)| c[u] == c[v]) {
        return false;
    }
    (0..g.n()).all(|v| {
        let m = multiset(g, c, v);
        if m.is_empty() {
            return true;
        }
        match variant {
            Variant::Proper => true,
            Variant::Pcf => m.values().any(|&x| x == 1),
            Variant::Odd => m.values().any(|&x| x % 2 == 1),
        }
    })
}

/// Exhaustive `k^n` decision with the reference predicate.
pub fn reference_decide(g: &Graph, k: usize, variant: Variant) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut c = vec![1; n];
    loop {
        if satisfies(g, &c, variant) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if c[i] < k {
                c[i] += 1;
                break;
            }
            c[i] = 1;
            i += 1;
        }
    }
}

pub fn reference_chi(g: &Graph, variant: Variant) -> usize {
    (1..=g.n().max(1)).find(|&k| reference_decide(g, k, variant)).unwrap()
}

/// Connectivity of `g` minus `removed`, by union-find over the edge list.
pub fn connected_without(g: &Graph, removed: Option<usize>) -> bool {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in g.edges() {
        if Some(u) == removed || Some(v) == removed {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = (0..n).filter(|&v| Some(v) != removed).map(|v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() <= 1
}
