//! Certificate checking for proper, PCF and odd colorings.

use pcf_coloring::coloring::{check, degree_two_violations};
use pcf_coloring::{Coloring, Graph, Variant};

fn main() -> pcf_coloring::Result<()> {
    let c4 = Graph::cycle(4);
    // two colors: proper, but every vertex sees one color twice
    let two = Coloring::new(vec![1, 2, 1, 2])?;
    // four colors: each vertex sees two distinct colors once
    let four = Coloring::new(vec![1, 2, 3, 4])?;

    for (name, c) in [("1 2 1 2", &two), ("1 2 3 4", &four)] {
        for variant in Variant::ALL {
            let report = check(&c4, c, variant)?;
            println!("C4 colored {name}: {variant:<6} {}", report.verdict);
        }
    }

    println!("\nfull report for the failing PCF check:");
    println!("{}", check(&c4, &two, Variant::Pcf)?.to_json());

    // opposite vertices of C4 are the two neighbors of a degree-2 vertex
    println!("degree-2 vertices with equal-colored neighbors: {:?}", degree_two_violations(&c4, &two));
    Ok(())
}
