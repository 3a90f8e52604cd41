//! Pendant and universal-vertex augmentations and how they shift the
//! chromatic numbers.

use pcf_coloring::reductions::{add_pendants_all, add_pendants_even_degree, add_two_universal, add_universal_vertex};
use pcf_coloring::solver::{chromatic_number, Budget};
use pcf_coloring::{Graph, Variant};

fn chi(g: &Graph, variant: Variant) -> pcf_coloring::Result<usize> {
    Ok(chromatic_number(g, variant, Budget::default())?.expect("small graphs stay within budget"))
}

fn main() -> pcf_coloring::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("P4", Graph::path(4)),
        ("K1,3", Graph::star(3)),
    ];
    println!("{:<6} {:>4} {:>14} {:>12} {:>18} {:>14}", "G", "chi", "pendants/pcf", "apex/pcf", "even-pendants/odd", "two-apex/pcf");
    for (name, g) in &graphs {
        println!(
            "{:<6} {:>4} {:>14} {:>12} {:>18} {:>14}",
            name,
            chi(g, Variant::Proper)?,
            chi(&add_pendants_all(g).graph, Variant::Pcf)?,
            chi(&add_universal_vertex(g).graph, Variant::Pcf)?,
            chi(&add_pendants_even_degree(g).graph, Variant::Odd)?,
            chi(&add_two_universal(g).graph, Variant::Pcf)?,
        );
    }
    Ok(())
}
