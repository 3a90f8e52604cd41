//! The 1-subdivision of `K_n` needs `n` colors for both PCF and odd
//! colorings, although it is bipartite.

use pcf_coloring::reductions::subdivide;
use pcf_coloring::solver::{chromatic_number, Budget};
use pcf_coloring::{Graph, Variant};

fn main() -> pcf_coloring::Result<()> {
    for n in 3..=5 {
        let g = subdivide(&Graph::complete(n), 1).graph;
        print!("sub1(K{n}): {} vertices, bipartite {}", g.n(), g.is_bipartite());
        for variant in Variant::ALL {
            match chromatic_number(&g, variant, Budget::default())? {
                Ok(k) => print!(", chi_{variant} = {k}"),
                Err(b) => print!(", chi_{variant} in {}..={}", b.lower, b.upper),
            }
        }
        println!();
    }
    Ok(())
}
