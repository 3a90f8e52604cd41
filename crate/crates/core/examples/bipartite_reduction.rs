//! The bipartite gadget: build `G~`, lift 3-colorings of `G` to
//! 4-colorings of `G~`, and decide `G~` directly when `G` needs 4 colors.

use pcf_coloring::coloring::check;
use pcf_coloring::reductions::{build_bipartite_tilde, lemma_sub1k4_coloring, lift_bipartite, Sub1K4Table};
use pcf_coloring::solver::{decide_coloring, Budget};
use pcf_coloring::{Coloring, Graph, Variant};

fn main() -> pcf_coloring::Result<()> {
    let k4 = lemma_sub1k4_coloring()?;
    println!("subdivided K4 table: {:?}", k4.coloring.as_ref().map(Coloring::colors));
    println!("printed table with s23 = 4: {:?}", Sub1K4Table::UNCORRECTED.check());

    let cases = [
        ("P4", Graph::path(4), vec![1, 2, 3, 1], Variant::Pcf),
        ("C6", Graph::cycle(6), vec![1, 2, 3, 1, 2, 3], Variant::Pcf),
        ("K1,3", Graph::star(3), vec![1, 2, 3, 2], Variant::Odd),
    ];
    for (name, g, colors, variant) in cases {
        let c = Coloring::new(colors)?;
        let out = lift_bipartite(&g, &c, variant)?;
        let lifted = out.coloring.as_ref().expect("lift attaches a coloring");
        println!(
            "{name}: G~ has {} vertices and {} edges; lifted {variant} coloring valid: {}",
            out.graph.n(),
            out.graph.m(),
            check(&out.graph, lifted, variant)?.verdict
        );
    }

    let tilde = build_bipartite_tilde(&Graph::cycle(4))?.graph;
    for variant in [Variant::Pcf, Variant::Odd] {
        let res = decide_coloring(&tilde, 4, variant, Budget::default())?;
        println!("C4: {variant} 4-coloring of G~ is {} after {} nodes", res.status, res.stats.nodes);
    }
    Ok(())
}
