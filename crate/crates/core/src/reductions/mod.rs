//! Gadget constructions and constructive colorings ("lifts").
//!
//! Every constructor keeps the input vertices at ids `0..n` and appends new
//! vertices after them. The returned [`RoleMap`] names every vertex of the
//! output:
//!
//! | label | vertex |
//! |---|---|
//! | `orig:<v>` | input vertex `v` |
//! | `sub:<u>-<v>` | subdivision vertex of edge `uv` (output ids); `sub:<u>-<v>:<i>` for longer paths |
//! | `pendant:<v>` | pendant attached to `v` |
//! | `apex:<t>` | added universal vertex `t` |
//! | `a:<i>`, `alpha:<l>`, `b:<j>`, `beta:<l>` | vertices of the two-sided clique gadget |
//! | `v:<i>`, `s:<i><j>` | branch and subdivision vertices of the subdivided `K4` |
//! | `tent:<f>:v:<i>`, `tent:<f>:l:<i>`, `tent:<f>:center`, `tent:<f>:w` | tent on face `f` |

mod augment;
mod bipartite;
mod subdivision;
mod tents;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::Coloring;
use crate::error::{parse_err, Result};
use crate::graph::Graph;

pub use augment::{add_pendants_all, add_pendants_even_degree, add_two_universal, add_universal_vertex};
pub use bipartite::{
    build_bipartite_tilde, build_bipartite_tilde_with_sides, build_gadget_gnm, lemma_sub1k4_coloring,
    lift_bipartite, lift_bipartite_with_sides, tilde_sides, Sub1K4Check, Sub1K4Table,
};
pub use subdivision::{greedy_extend_subdivision, subdivide};
pub use tents::{attach_tents, lift_planar};

/// Role label of every vertex in a constructed graph, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RoleMap(Vec<String>);

impl RoleMap {
    pub fn originals(n: usize) -> Self {
        RoleMap((0..n).map(|v| format!("orig:{v}")).collect())
    }

    pub fn get(&self, v: usize) -> &str {
        &self.0[v]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    fn push(&mut self, label: String) -> usize {
        self.0.push(label);
        self.0.len() - 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("role map serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
    }
}

impl Serialize for RoleMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, label) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), label)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for RoleMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = std::collections::BTreeMap::<usize, String>::deserialize(deserializer)?;
        if raw.keys().copied().ne(0..raw.len()) {
            return Err(serde::de::Error::custom("role map keys must be 0..n"));
        }
        Ok(RoleMap(raw.into_values().collect()))
    }
}

/// A constructed graph, the role of each of its vertices and, for lifts, a
/// coloring that has already passed the relevant checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub roles: RoleMap,
    pub coloring: Option<Coloring>,
}

/// Incremental construction on top of a base graph.
struct Builder {
    edges: Vec<(usize, usize)>,
    roles: RoleMap,
}

impl Builder {
    fn from_graph(g: &Graph) -> Self {
        Builder {
            edges: g.edges().to_vec(),
            roles: RoleMap::originals(g.n()),
        }
    }

    fn empty() -> Self {
        Builder {
            edges: Vec::new(),
            roles: RoleMap::default(),
        }
    }

    fn add_vertex(&mut self, role: impl Into<String>) -> usize {
        self.roles.push(role.into())
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Adds the midpoint of a would-be edge `uv` and returns it.
    fn add_midpoint(&mut self, u: usize, v: usize) -> usize {
        let s = self.add_vertex(format!("sub:{}-{}", u.min(v), u.max(v)));
        self.add_edge(u, s);
        self.add_edge(s, v);
        s
    }

    fn finish(self) -> (Graph, RoleMap) {
        let g = Graph::new(self.roles.len(), &self.edges).expect("builder only emits valid edges");
        (g, self.roles)
    }

    fn output(self) -> GadgetOutput {
        let (graph, roles) = self.finish();
        GadgetOutput {
            graph,
            roles,
            coloring: None,
        }
    }
}
