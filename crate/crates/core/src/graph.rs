//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple finite undirected graph.
///
/// Vertices are `0..n`. Edges are stored once as `(u, v)` with `u < v`, sorted,
/// and every neighbor list is sorted ascending. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Symmetric duplicates are merged.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            isolated: (0..self.n).filter(|&v| degrees[v] == 0).collect(),
            even: (0..self.n).filter(|&v| degrees[v].is_multiple_of(2)).collect(),
            degrees,
        }
    }

    /// Two-coloring by BFS. The smallest id of every component lands in side A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| side[v] == Some(false));
        Some(Bipartition { side_a: a, side_b: b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff `n > 2`, the graph is connected and it has no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n > 2 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Articulation points via DFS low-links (iterative).
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Induced subgraph on `vertices`, renumbered by ascending id.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(sorted.len(), &edges).expect("induced edges are valid")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }
}

/// Degree data for a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub isolated: Vec<usize>,
    /// Vertices of even degree, degree 0 included.
    pub even: Vec<usize>,
}

/// The two color classes of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Bipartition {
    /// Checks disjointness, coverage of `0..g.n()` and that no edge stays inside a side.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for (s, members) in [(0u8, &self.side_a), (1u8, &self.side_b)] {
            for &v in members {
                if v >= g.n() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        side.iter().all(Option::is_some) && g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }

    pub fn swapped(self) -> Bipartition {
        Bipartition {
            side_a: self.side_b,
            side_b: self.side_a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_path_with_degrees() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.degree_profile().degrees, vec![1, 2, 1]);
    }

    #[test]
    fn complete_graph_has_all_pairs() {
        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let g = Graph::new(4, &all).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn symmetric_pair_is_deduplicated() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange(0, 2, 2)));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn bipartition_examples() {
        let c4 = Graph::cycle(4).bipartition().unwrap();
        assert_eq!(c4.side_a, vec![0, 2]);
        assert_eq!(c4.side_b, vec![1, 3]);
        assert!(Graph::cycle(3).bipartition().is_none());
        // lowest id of each component goes to side A
        let g = Graph::new(5, &[(3, 4), (1, 2)]).unwrap();
        let b = g.bipartition().unwrap();
        assert_eq!(b.side_a, vec![0, 1, 3]);
        assert!(b.is_valid_for(&g));
    }

    #[test]
    fn degree_profile_examples() {
        let star = Graph::star(3).degree_profile();
        assert_eq!(star.max_degree, 3);
        assert!(star.even.is_empty());
        let c4 = Graph::cycle(4).degree_profile();
        assert_eq!(c4.even, vec![0, 1, 2, 3]);
        assert_eq!(Graph::empty(3).degree_profile().isolated, vec![0, 1, 2]);
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(Graph::cycle(3).is_two_connected());
        assert!(!Graph::path(3).is_two_connected());
        assert!(Graph::complete(4).is_two_connected());
        assert!(!Graph::complete(2).is_two_connected());
        // two triangles sharing vertex 2
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.cut_vertices(), vec![2]);
    }

    #[test]
    fn handshake_identity() {
        let g = Graph::new(6, &[(0, 1), (0, 2), (3, 4), (2, 5), (1, 5)]).unwrap();
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.m());
    }
}
