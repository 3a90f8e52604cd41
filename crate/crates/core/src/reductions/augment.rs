//! Pendant and apex augmentations relating the chromatic number of a graph
//! to the PCF / odd chromatic number of the augmented graph.

use super::{Builder, GadgetOutput};
use crate::graph::Graph;

/// One new pendant per vertex. `chi(G) <= chi_pcf(H) <= chi(G) + 1`.
pub fn add_pendants_all(g: &Graph) -> GadgetOutput {
    add_pendants_where(g, |_| true)
}

/// One new pendant on every even-degree vertex (degree 0 included).
/// `chi(G) = chi_odd(H)`.
pub fn add_pendants_even_degree(g: &Graph) -> GadgetOutput {
    add_pendants_where(g, |v| g.degree(v).is_multiple_of(2))
}

fn add_pendants_where(g: &Graph, pick: impl Fn(usize) -> bool) -> GadgetOutput {
    let mut b = Builder::from_graph(g);
    for v in g.vertices().filter(|&v| pick(v)) {
        let p = b.add_vertex(format!("pendant:{v}"));
        b.add_edge(v, p);
    }
    b.output()
}

/// One new vertex adjacent to everything. `chi(G) + 1 <= chi_pcf(H) <= chi(G) + 2`.
pub fn add_universal_vertex(g: &Graph) -> GadgetOutput {
    add_apices(g, 1)
}

/// Two new adjacent vertices, both adjacent to everything. `chi(G) + 2 = chi_pcf(H)`.
pub fn add_two_universal(g: &Graph) -> GadgetOutput {
    add_apices(g, 2)
}

fn add_apices(g: &Graph, count: usize) -> GadgetOutput {
    let mut b = Builder::from_graph(g);
    let apices: Vec<usize> = (1..=count).map(|t| b.add_vertex(format!("apex:{t}"))).collect();
    for (i, &a) in apices.iter().enumerate() {
        for v in g.vertices() {
            b.add_edge(v, a);
        }
        for &other in &apices[i + 1..] {
            b.add_edge(a, other);
        }
    }
    b.output()
}
