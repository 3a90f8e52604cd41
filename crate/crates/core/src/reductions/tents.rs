//! Tents attached to the faces of a 2-connected plane graph, and the lift of
//! a PCF 3-coloring to a PCF 4-coloring of the tented graph.

use super::{Builder, GadgetOutput};
use crate::coloring::{check_pcf, Coloring};
use crate::error::{Error, Result};
use crate::plane::PlaneGraph;

struct Tent {
    // cycle[i - 1] is v_i, i in 1..=4k+2
    cycle: Vec<usize>,
    pendants: Vec<usize>,
    center: usize,
    w: usize,
}

/// Attaches a tent to every face, with faces and boundary starts taken from
/// [`PlaneGraph::trace_faces`]. For a face bounded by `u_1 .. u_k`:
/// a cycle `v_1 .. v_{4k+2}`, a pendant `l_i` at each `v_i`, a center joined
/// to the whole cycle, a vertex `w` joined to the center, `v_1` and
/// `v_{4k+2}`, and `u_i` joined to `v_{4i-2}` and `v_{4i}`. That is
/// `8k + 6` new vertices and `14k + 9` new edges per face.
pub fn attach_tents(pg: &PlaneGraph) -> Result<GadgetOutput> {
    Ok(build(pg)?.0)
}

fn build(pg: &PlaneGraph) -> Result<(GadgetOutput, Vec<Tent>)> {
    let g = pg.graph();
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let faces = pg.trace_faces()?;
    let mut bld = Builder::from_graph(g);
    let mut tents = Vec::with_capacity(faces.len());
    for (f, face) in faces.iter().enumerate() {
        if !face.is_cycle() {
            return Err(Error::InvalidRotation(format!("face {f} is not bounded by a cycle")));
        }
        let len = 4 * face.len() + 2;
        let cycle: Vec<usize> = (1..=len).map(|i| bld.add_vertex(format!("tent:{f}:v:{i}"))).collect();
        let pendants: Vec<usize> = (1..=len).map(|i| bld.add_vertex(format!("tent:{f}:l:{i}"))).collect();
        let center = bld.add_vertex(format!("tent:{f}:center"));
        let w = bld.add_vertex(format!("tent:{f}:w"));
        for i in 0..len {
            bld.add_edge(cycle[i], cycle[(i + 1) % len]);
            bld.add_edge(cycle[i], pendants[i]);
            bld.add_edge(cycle[i], center);
        }
        bld.add_edge(w, center);
        bld.add_edge(w, cycle[0]);
        bld.add_edge(w, cycle[len - 1]);
        for (idx, &u) in face.boundary.iter().enumerate() {
            let i = idx + 1;
            bld.add_edge(u, cycle[4 * i - 3]);
            bld.add_edge(u, cycle[4 * i - 1]);
        }
        tents.push(Tent {
            cycle,
            pendants,
            center,
            w,
        });
    }
    Ok((bld.output(), tents))
}

/// Lifts a PCF coloring with colors in `1..=3`: originals keep their colors,
/// centers get 1, `w` and pendants get 2, `v_i` gets 3 for odd `i` and 4 for
/// even `i`.
pub fn lift_planar(pg: &PlaneGraph, c: &Coloring) -> Result<GadgetOutput> {
    let g = pg.graph();
    let report = check_pcf(g, c)?;
    if !report.verdict {
        return Err(Error::Precondition(format!(
            "input is not a PCF coloring: {:?}",
            report.violations
        )));
    }
    if c.colors().iter().any(|&col| col > 3) {
        return Err(Error::Precondition("input coloring must use colors 1..=3".into()));
    }
    let (mut out, tents) = build(pg)?;
    let mut colors = vec![0; out.graph.n()];
    colors[..g.n()].copy_from_slice(c.colors());
    for tent in &tents {
        colors[tent.center] = 1;
        colors[tent.w] = 2;
        for (idx, (&v, &l)) in tent.cycle.iter().zip(&tent.pendants).enumerate() {
            colors[v] = if idx % 2 == 0 { 3 } else { 4 };
            colors[l] = 2;
        }
    }
    let lifted = Coloring::with_palette(colors, 4)?;
    let report = check_pcf(&out.graph, &lifted)?;
    if !report.verdict {
        return Err(Error::Internal(format!(
            "tent lift fails the PCF check: {:?}",
            report.violations
        )));
    }
    out.coloring = Some(lifted);
    Ok(out)
}
