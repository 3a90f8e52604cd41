//! Combinatorial embeddings given by rotation systems, and face tracing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with a cyclic order of the neighbors around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    // rot_pos[v][i] = position of neighbors(v)[i] inside rotation[v]
    rot_pos: Vec<Vec<usize>>,
}

/// One face, as the cyclic sequence of vertices met while walking its boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// True when no vertex repeats along the boundary walk.
    pub fn is_cycle(&self) -> bool {
        let mut seen = self.boundary.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.boundary.len() && self.boundary.len() >= 3
    }
}

impl PlaneGraph {
    /// Pairs a graph with a rotation system; each rotation must list exactly the
    /// vertex's neighbors, once each.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                graph.n()
            )));
        }
        let mut rot_pos = Vec::with_capacity(graph.n());
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at vertex {v} is {rot:?}, neighbors are {:?}",
                    graph.neighbors(v)
                )));
            }
            let mut pos = vec![0; rot.len()];
            for (p, &w) in rot.iter().enumerate() {
                let i = graph.neighbors(v).binary_search(&w).unwrap();
                pos[i] = p;
            }
            rot_pos.push(pos);
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            rot_pos,
        })
    }

    /// Uses each sorted neighbor list as the rotation. This is a valid planar
    /// embedding for cycles and for other graphs whose vertices have degree <= 2.
    pub fn with_sorted_rotation(graph: Graph) -> Result<Self> {
        let rotation = graph.vertices().map(|v| graph.neighbors(v).to_vec()).collect();
        PlaneGraph::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// The neighbor following `from` in the rotation at `at`.
    fn successor(&self, at: usize, from: usize) -> usize {
        let i = self.graph.neighbors(at).binary_search(&from).unwrap();
        let rot = &self.rotation[at];
        rot[(self.rot_pos[at][i] + 1) % rot.len()]
    }

    /// Traces every face. Arriving at `v` from `u`, the walk continues to the
    /// successor of `u` in the rotation at `v`. Faces are listed in order of
    /// their lexicographically smallest directed edge, and each boundary starts
    /// at that edge's tail.
    pub fn trace_faces(&self) -> Result<Vec<Face>> {
        let g = &self.graph;
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        if g.m() == 0 {
            return Ok(vec![Face {
                boundary: g.vertices().collect(),
            }]);
        }
        let mut offset = vec![0; g.n() + 1];
        for v in g.vertices() {
            offset[v + 1] = offset[v] + g.degree(v);
        }
        let dart = |u: usize, v: usize| offset[u] + g.neighbors(u).binary_search(&v).unwrap();
        let mut used = vec![false; 2 * g.m()];
        let mut faces = Vec::new();
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                if used[dart(u, v)] {
                    continue;
                }
                let mut boundary = Vec::new();
                let (mut a, mut b) = (u, v);
                while !used[dart(a, b)] {
                    used[dart(a, b)] = true;
                    boundary.push(a);
                    let next = self.successor(b, a);
                    a = b;
                    b = next;
                }
                if (a, b) != (u, v) {
                    return Err(Error::InvalidRotation(
                        "face walk did not close on its starting edge".into(),
                    ));
                }
                faces.push(Face { boundary });
            }
        }
        let euler = g.n() as i64 - g.m() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::InvalidRotation(format!(
                "n - m + f = {euler}, expected 2 for a planar embedding"
            )));
        }
        Ok(faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_embedding() -> PlaneGraph {
        // vertex 3 in the middle of triangle 0,1,2
        let rotation = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        PlaneGraph::new(Graph::complete(4), rotation).unwrap()
    }

    #[test]
    fn cycle_has_two_faces() {
        for n in [4, 6] {
            let pg = PlaneGraph::with_sorted_rotation(Graph::cycle(n)).unwrap();
            let faces = pg.trace_faces().unwrap();
            assert_eq!(faces.len(), 2);
            assert!(faces.iter().all(|f| f.len() == n && f.is_cycle()));
        }
    }

    #[test]
    fn c4_faces_start_at_smallest_dart() {
        let pg = PlaneGraph::with_sorted_rotation(Graph::cycle(4)).unwrap();
        let faces = pg.trace_faces().unwrap();
        assert_eq!(faces[0].boundary, vec![0, 1, 2, 3]);
        assert_eq!(faces[1].boundary, vec![0, 3, 2, 1]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let faces = k4_embedding().trace_faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3 && f.is_cycle()));
        let total: usize = faces.iter().map(Face::len).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K4 with every rotation sorted is a toroidal-type embedding
        let pg = PlaneGraph::with_sorted_rotation(Graph::complete(4)).unwrap();
        assert!(matches!(pg.trace_faces(), Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn rotation_must_match_adjacency() {
        let err = PlaneGraph::new(Graph::path(3), vec![vec![1], vec![0], vec![0]]);
        assert!(matches!(err, Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let pg = PlaneGraph::with_sorted_rotation(Graph::new(4, &[(0, 1), (2, 3)]).unwrap()).unwrap();
        assert_eq!(pg.trace_faces(), Err(Error::NotConnected));
    }
}
