//! Face tracing on a rotation system and the tent gadget for plane graphs.

use pcf_coloring::coloring::check_pcf;
use pcf_coloring::reductions::{attach_tents, lift_planar};
use pcf_coloring::{Coloring, Graph, PlaneGraph};

fn main() -> pcf_coloring::Result<()> {
    // K4 drawn with vertex 3 inside the triangle 0 1 2
    let k4 = PlaneGraph::new(Graph::complete(4), vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]])?;
    for (i, face) in k4.trace_faces()?.iter().enumerate() {
        println!("K4 face {i}: {:?}", face.boundary);
    }
    let tents = attach_tents(&k4)?;
    println!("K4 with tents: {} vertices, {} edges", tents.graph.n(), tents.graph.m());

    let c6 = PlaneGraph::with_sorted_rotation(Graph::cycle(6))?;
    let c = Coloring::new(vec![1, 2, 3, 1, 2, 3])?;
    let out = lift_planar(&c6, &c)?;
    let lifted = out.coloring.as_ref().expect("lift attaches a coloring");
    println!(
        "C6 with tents: {} vertices; lifted coloring uses {} colors, PCF: {}",
        out.graph.n(),
        lifted.num_colors_used(),
        check_pcf(&out.graph, lifted)?.verdict
    );
    let center = out.roles.find("tent:0:center").expect("face 0 has a center");
    println!("face 0 center is vertex {center} with degree {}", out.graph.degree(center));
    Ok(())
}
