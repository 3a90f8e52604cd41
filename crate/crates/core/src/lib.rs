//! Proper conflict-free (PCF) and odd graph colorings: certificate checkers,
//! an exact backtracking solver with a brute-force reference, CNF encodings,
//! and the gadget constructions that reduce 3-coloring questions to
//! 4-coloring questions on bipartite and planar graphs.

pub mod cnf;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod plane;
pub mod reductions;
pub mod solver;

pub use coloring::{CertificateReport, Coloring, Variant};
pub use error::{Error, Result};
pub use graph::Graph;
pub use plane::PlaneGraph;
