//! Greedy extension of a proper coloring to a PCF coloring of the
//! 1-subdivision, against the exact PCF chromatic number.

use pcf_coloring::reductions::{greedy_extend_subdivision, subdivide};
use pcf_coloring::solver::{chromatic_number, decide_coloring, Budget};
use pcf_coloring::{Graph, Variant};

fn main() -> pcf_coloring::Result<()> {
    let graphs = [("C5", Graph::cycle(5)), ("K5", Graph::complete(5)), ("K3,3", k33()?)];
    for (name, g) in graphs {
        let chi = chromatic_number(&g, Variant::Proper, Budget::default())?.expect("tiny graph");
        let proper = decide_coloring(&g, chi, Variant::Proper, Budget::default())?
            .witness
            .expect("chi colors suffice");
        let k = chi.max(5);
        let out = greedy_extend_subdivision(&g, &proper, k)?;
        let exact = chromatic_number(&subdivide(&g, 1).graph, Variant::Pcf, Budget::default())?;
        println!(
            "{name}: chi = {chi}, greedy PCF coloring of sub1 with {} colors, exact chi_pcf(sub1) = {exact:?}",
            out.coloring.expect("greedy attaches a coloring").num_colors_used()
        );
    }
    Ok(())
}

fn k33() -> pcf_coloring::Result<Graph> {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    Graph::new(6, &edges)
}
