use super::{Builder, GadgetOutput};
use crate::coloring::{check_pcf, check_proper, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Replaces every edge by a path with `k` internal vertices. New vertices are
/// appended edge by edge in sorted edge order; `k = 0` copies the graph.
pub fn subdivide(g: &Graph, k: usize) -> GadgetOutput {
    if k == 0 {
        return Builder::from_graph(g).output();
    }
    let mut b = Builder {
        edges: Vec::with_capacity((k + 1) * g.m()),
        roles: super::RoleMap::originals(g.n()),
    };
    for &(u, v) in g.edges() {
        if k == 1 {
            b.add_midpoint(u, v);
            continue;
        }
        let mut prev = u;
        for i in 1..=k {
            let s = b.add_vertex(format!("sub:{u}-{v}:{i}"));
            b.add_edge(prev, s);
            prev = s;
        }
        b.add_edge(prev, v);
    }
    b.output()
}

/// Extends a proper coloring `c` of `g` to a PCF `k`-coloring of the
/// 1-subdivision, for any `k >= 5` covering `c`'s colors.
///
/// Subdivision vertices are colored in sorted edge order. Each branch vertex
/// protects the color of its first colored subdivision neighbor; the midpoint
/// of `xy` takes the smallest color outside `{c(x), c(y), protected(x),
/// protected(y)}`. The protected color then stays unique around its branch
/// vertex, and every midpoint sees two distinct colors.
pub fn greedy_extend_subdivision(g: &Graph, c: &Coloring, k: usize) -> Result<GadgetOutput> {
    let proper = check_proper(g, c)?;
    if !proper.verdict {
        return Err(Error::Precondition(format!(
            "input coloring is not proper: {:?}",
            proper.violations
        )));
    }
    if k < 5 || k < c.k() {
        return Err(Error::Precondition(format!(
            "k = {k} must be at least max(5, {})",
            c.k()
        )));
    }
    let mut out = subdivide(g, 1);
    let mut colors = c.colors().to_vec();
    let mut protected: Vec<Option<usize>> = vec![None; g.n()];
    for &(x, y) in g.edges() {
        let forbidden = [Some(c.color(x)), Some(c.color(y)), protected[x], protected[y]];
        let pick = (1..=k)
            .find(|col| !forbidden.contains(&Some(*col)))
            .expect("at most four colors are forbidden and k >= 5");
        colors.push(pick);
        protected[x].get_or_insert(pick);
        protected[y].get_or_insert(pick);
    }
    let lifted = Coloring::with_palette(colors, k)?;
    let report = check_pcf(&out.graph, &lifted)?;
    if !report.verdict {
        return Err(Error::Internal(format!(
            "greedy extension failed the PCF check: {:?}",
            report.violations
        )));
    }
    out.coloring = Some(lifted);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_counts() {
        let c6 = subdivide(&Graph::complete(3), 1);
        assert_eq!((c6.graph.n(), c6.graph.m()), (6, 6));
        assert!(c6.graph.vertices().all(|v| c6.graph.degree(v) == 2));
        let k4 = subdivide(&Graph::complete(4), 1);
        assert_eq!((k4.graph.n(), k4.graph.m()), (10, 12));
        assert_eq!(k4.roles.get(4), "sub:0-1");
        let p = Graph::path(4);
        assert_eq!(subdivide(&p, 0).graph, p);
        let g3 = subdivide(&p, 3);
        assert_eq!((g3.graph.n(), g3.graph.m()), (4 + 9, 12));
        assert_eq!(g3.roles.get(4), "sub:0-1:1");
    }

    #[test]
    fn greedy_on_an_edge() {
        let c = Coloring::new(vec![1, 2]).unwrap();
        let out = greedy_extend_subdivision(&Graph::complete(2), &c, 5).unwrap();
        assert_eq!(out.coloring.unwrap().colors(), &[1, 2, 3]);
    }

    #[test]
    fn greedy_on_k5() {
        let c = Coloring::new(vec![1, 2, 3, 4, 5]).unwrap();
        let out = greedy_extend_subdivision(&Graph::complete(5), &c, 5).unwrap();
        assert_eq!(out.graph.n(), 15);
        assert!(check_pcf(&out.graph, out.coloring.as_ref().unwrap()).unwrap().verdict);
    }

    #[test]
    fn greedy_rejects_bad_input() {
        let c = Coloring::new(vec![1, 1]).unwrap();
        assert!(matches!(
            greedy_extend_subdivision(&Graph::complete(2), &c, 5),
            Err(Error::Precondition(_))
        ));
        let c = Coloring::new(vec![1, 2]).unwrap();
        assert!(matches!(
            greedy_extend_subdivision(&Graph::complete(2), &c, 4),
            Err(Error::Precondition(_))
        ));
    }
}
