//! The bipartite reduction from 3 to 4 colors: the clique gadget `G_{n,m}`,
//! the subdivided `K4` coloring it is built from, the combined graph
//! `G~` and the lift of a 3-coloring of `G` to a 4-coloring of `G~`.

use serde::{Deserialize, Serialize};

use super::{subdivide, Builder, GadgetOutput, RoleMap};
use crate::coloring::{check, check_pcf, Coloring, Variant};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

/// A coloring of the 1-subdivision of `K4` given by the colors of the branch
/// vertices `v1..v4` and of the midpoints `s_ij`. Vertex `v4` plays `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sub1K4Table {
    pub branch: [usize; 4],
    /// `sub[i][j]` for `i < j` (0-based) is the color of `s_{i+1,j+1}`.
    pub sub: [[usize; 4]; 4],
}

impl Sub1K4Table {
    const fn from_values(branch: [usize; 4], s12: usize, s13: usize, s14: usize, s23: usize, s24: usize, s34: usize) -> Self {
        Sub1K4Table {
            branch,
            sub: [
                [0, s12, s13, s14],
                [s12, 0, s23, s24],
                [s13, s23, 0, s34],
                [s14, s24, s34, 0],
            ],
        }
    }

    /// The table used by [`lift_bipartite`]; satisfies PCF and both properties.
    pub const SHIPPED: Sub1K4Table = Sub1K4Table::from_values([1, 2, 3, 4], 3, 2, 2, 1, 3, 1);

    /// Same as [`Sub1K4Table::SHIPPED`] except `s23 = 4`. It is a PCF
    /// coloring, but `v2` then only sees the color of `x` uniquely.
    pub const UNCORRECTED: Sub1K4Table = Sub1K4Table::from_values([1, 2, 3, 4], 3, 2, 2, 4, 3, 1);

    /// The coloring on `subdivide(K4, 1)`: ids 0..4 are `v1..v4`, then the
    /// midpoints of (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
    pub fn coloring(&self) -> Coloring {
        let mut colors = self.branch.to_vec();
        for (i, j) in K4_EDGES {
            colors.push(self.sub[i][j]);
        }
        Coloring::with_palette(colors, 4).expect("table colors lie in 1..=4")
    }

    pub fn check(&self) -> Sub1K4Check {
        let g = subdivide(&Graph::complete(4), 1).graph;
        Sub1K4Check::evaluate(&g, &self.coloring(), 3)
    }
}

const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// How a coloring of the subdivided `K4` fares against the PCF condition and
/// the two extra properties the reduction needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sub1K4Check {
    pub pcf: bool,
    /// All neighbors of `x` have distinct colors.
    pub property_a: bool,
    /// Branch vertices `y != x` lacking a neighbor `z` that is non-adjacent to
    /// `x`, has `c(z) != c(x)`, and whose color is unique around `y`.
    pub property_b_failures: Vec<usize>,
}

impl Sub1K4Check {
    pub fn holds(&self) -> bool {
        self.pcf && self.property_a && self.property_b_failures.is_empty()
    }

    /// Evaluates on any subdivided `K4` whose branch vertices are the
    /// degree-3 vertices; `x` is one of them.
    pub fn evaluate(g: &Graph, c: &Coloring, x: usize) -> Sub1K4Check {
        let pcf = check_pcf(g, c).map(|r| r.verdict).unwrap_or(false);
        let mut around_x: Vec<usize> = g.neighbors(x).iter().map(|&w| c.color(w)).collect();
        around_x.sort_unstable();
        around_x.dedup();
        let property_a = around_x.len() == g.degree(x);
        let property_b_failures = g
            .vertices()
            .filter(|&y| y != x && g.degree(y) == 3)
            .filter(|&y| {
                let nb = g.neighbors(y);
                !nb.iter().any(|&z| {
                    let unique = nb.iter().filter(|&&w| c.color(w) == c.color(z)).count() == 1;
                    !g.has_edge(z, x) && c.color(z) != c.color(x) && unique
                })
            })
            .collect();
        Sub1K4Check {
            pcf,
            property_a,
            property_b_failures,
        }
    }
}

/// The subdivided `K4` with the shipped coloring, roles `v:<i>` / `s:<i><j>`.
/// Refuses to return a table that fails any required property.
pub fn lemma_sub1k4_coloring() -> Result<GadgetOutput> {
    let graph = subdivide(&Graph::complete(4), 1).graph;
    let table = Sub1K4Table::SHIPPED;
    let verdict = table.check();
    if !verdict.holds() {
        return Err(Error::Internal(format!("shipped subdivided-K4 table is invalid: {verdict:?}")));
    }
    let mut labels: Vec<String> = (1..=4).map(|i| format!("v:{i}")).collect();
    labels.extend(K4_EDGES.iter().map(|(i, j)| format!("s:{}{}", i + 1, j + 1)));
    Ok(GadgetOutput {
        graph,
        roles: RoleMap(labels),
        coloring: Some(table.coloring()),
    })
}

struct GnmIds {
    a: Vec<usize>,
    alpha: [usize; 3],
    b: Vec<usize>,
    beta: [usize; 3],
}

/// A gadget edge together with the subdivided-`K4` positions (0..4, where 3
/// is `x`) of its endpoints.
type GnmEdge = (usize, usize, usize, usize);

fn add_gnm_vertices(bld: &mut Builder, n: usize, m: usize) -> GnmIds {
    let a = (1..=2 * n).map(|i| bld.add_vertex(format!("a:{i}"))).collect();
    let alpha = [1, 2, 3].map(|l| bld.add_vertex(format!("alpha:{l}")));
    let b = (1..=2 * m).map(|j| bld.add_vertex(format!("b:{j}"))).collect();
    let beta = [1, 2, 3].map(|l| bld.add_vertex(format!("beta:{l}")));
    GnmIds { a, alpha, b, beta }
}

fn gnm_edges(ids: &GnmIds) -> Vec<GnmEdge> {
    let mut edges = Vec::new();
    for (leaves, hub) in [(&ids.a, &ids.alpha), (&ids.b, &ids.beta)] {
        for &leaf in leaves {
            for (l, &h) in hub.iter().enumerate() {
                edges.push((leaf, h, 3, l));
            }
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            edges.push((hub[p], hub[q], p, q));
        }
    }
    edges
}

/// `G_{n,m}`: `a_1..a_{2n}` each joined to the triangle `alpha_1..3`, and
/// `b_1..b_{2m}` each joined to the triangle `beta_1..3`.
pub fn build_gadget_gnm(n: usize, m: usize) -> Result<GadgetOutput> {
    if n == 0 || m == 0 {
        return Err(Error::Precondition("G_{n,m} needs n, m >= 1".into()));
    }
    let mut bld = Builder::empty();
    let ids = add_gnm_vertices(&mut bld, n, m);
    for (u, v, _, _) in gnm_edges(&ids) {
        bld.add_edge(u, v);
    }
    Ok(bld.output())
}

/// Sides `(A, B)` used for `G~`: a side with at least two vertices becomes
/// `B`; if both qualify the larger one does, ties going to the side holding
/// the smallest id. Each side is in ascending id order.
pub fn tilde_sides(g: &Graph) -> Result<Bipartition> {
    let sides = g.bipartition().ok_or(Error::NotBipartite)?;
    let (na, nb) = (sides.side_a.len(), sides.side_b.len());
    // side_a always holds the smallest id
    let a_becomes_b = if na >= 2 && nb >= 2 { na >= nb } else { na >= 2 };
    Ok(if a_becomes_b { sides.swapped() } else { sides })
}

struct TildeLayout {
    ids: GnmIds,
    // (midpoint, K4 position of one end, K4 position of the other)
    midpoints: Vec<(usize, usize, usize)>,
}

/// Builds `G~` for a bipartite `g`: `g` plus the 1-subdivision of
/// `G_{|A|,|B|}`, the `i`-th vertex of `A` joined to `a_{2i-1}, a_{2i}`, the
/// `j`-th vertex of `B` to `b_{2j-1}, b_{2j}`, and `alpha_l b_l` for
/// `l = 1, 2, 3`. Graphs on at most 3 vertices are returned unchanged.
pub fn build_bipartite_tilde(g: &Graph) -> Result<GadgetOutput> {
    let sides = tilde_sides(g)?;
    build_bipartite_tilde_with_sides(g, &sides)
}

/// As [`build_bipartite_tilde`], with the sides and their order given.
pub fn build_bipartite_tilde_with_sides(g: &Graph, sides: &Bipartition) -> Result<GadgetOutput> {
    Ok(build_tilde(g, sides)?.0)
}

fn build_tilde(g: &Graph, sides: &Bipartition) -> Result<(GadgetOutput, Option<TildeLayout>)> {
    if !sides.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    if g.n() <= 3 {
        return Ok((Builder::from_graph(g).output(), None));
    }
    if sides.side_b.len() < 2 {
        return Err(Error::Precondition("side B needs at least two vertices".into()));
    }
    let mut bld = Builder::from_graph(g);
    let ids = add_gnm_vertices(&mut bld, sides.side_a.len(), sides.side_b.len());
    let midpoints = gnm_edges(&ids)
        .into_iter()
        .map(|(u, v, pu, pv)| (bld.add_midpoint(u, v), pu, pv))
        .collect();
    for (side, leaves) in [(&sides.side_a, &ids.a), (&sides.side_b, &ids.b)] {
        for (i, &v) in side.iter().enumerate() {
            bld.add_edge(v, leaves[2 * i]);
            bld.add_edge(v, leaves[2 * i + 1]);
        }
    }
    for l in 0..3 {
        bld.add_edge(ids.alpha[l], ids.b[l]);
    }
    let out = bld.output();
    debug_assert!(out.graph.is_bipartite());
    Ok((out, Some(TildeLayout { ids, midpoints })))
}

/// Lifts a PCF (or odd) coloring of `g` with colors in `1..=3` to a
/// 4-coloring of `G~` of the same kind: originals keep their colors, every
/// `a_i` and `b_j` gets 4, and each subdivided `K4` inside the gadget is
/// colored by [`Sub1K4Table::SHIPPED`] with `a_i` / `b_j` playing `x`.
pub fn lift_bipartite(g: &Graph, c: &Coloring, variant: Variant) -> Result<GadgetOutput> {
    let sides = tilde_sides(g)?;
    lift_bipartite_with_sides(g, c, variant, &sides)
}

pub fn lift_bipartite_with_sides(g: &Graph, c: &Coloring, variant: Variant, sides: &Bipartition) -> Result<GadgetOutput> {
    if variant == Variant::Proper {
        return Err(Error::Precondition("lift_bipartite handles the pcf and odd variants".into()));
    }
    let report = check(g, c, variant)?;
    if !report.verdict {
        return Err(Error::Precondition(format!(
            "input is not a {variant} coloring: {:?}",
            report.violations
        )));
    }
    if c.colors().iter().any(|&col| col > 3) {
        return Err(Error::Precondition("input coloring must use colors 1..=3".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated; it would see only its two gadget neighbors, both colored 4"
        )));
    }
    let (mut out, layout) = build_tilde(g, sides)?;
    let Some(layout) = layout else {
        out.coloring = Some(c.clone());
        return Ok(out);
    };
    let table = Sub1K4Table::SHIPPED;
    let mut colors = vec![0; out.graph.n()];
    colors[..g.n()].copy_from_slice(c.colors());
    for &v in layout.ids.a.iter().chain(&layout.ids.b) {
        colors[v] = table.branch[3];
    }
    for l in 0..3 {
        colors[layout.ids.alpha[l]] = table.branch[l];
        colors[layout.ids.beta[l]] = table.branch[l];
    }
    for &(s, p, q) in &layout.midpoints {
        colors[s] = table.sub[p][q];
    }
    let lifted = Coloring::with_palette(colors, 4)?;
    let report = check(&out.graph, &lifted, variant)?;
    if !report.verdict {
        return Err(Error::Internal(format!(
            "lifted coloring fails the {variant} check: {:?}",
            report.violations
        )));
    }
    out.coloring = Some(lifted);
    Ok(out)
}
