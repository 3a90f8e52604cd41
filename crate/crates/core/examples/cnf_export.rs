//! CNF encoding with a DIMACS round trip and the bundled DPLL solver.

use pcf_coloring::cnf::{encode_cnf, Cnf, DpllOutcome};
use pcf_coloring::coloring::check;
use pcf_coloring::{Graph, Variant};

fn main() -> pcf_coloring::Result<()> {
    let g = Graph::cycle(5);
    for variant in Variant::ALL {
        for k in 2..=4 {
            let cnf = encode_cnf(&g, k, variant)?;
            let text = cnf.to_dimacs();
            let back = Cnf::from_dimacs(&text)?;
            let answer = match back.solve(None) {
                DpllOutcome::Sat(model) => {
                    let c = back.decode(&model)?;
                    format!("SAT {:?} (valid: {})", c.colors(), check(&g, &c, variant)?.verdict)
                }
                DpllOutcome::Unsat => "UNSAT".to_string(),
                DpllOutcome::Unknown => "UNKNOWN".to_string(),
            };
            println!(
                "C5 {variant:<6} k={k}: {} vars, {} clauses: {answer}",
                cnf.num_vars(),
                cnf.clauses.len()
            );
        }
    }
    println!("\n{}", encode_cnf(&Graph::path(2), 2, Variant::Pcf)?.to_dimacs());
    Ok(())
}
