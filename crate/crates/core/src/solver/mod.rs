//! Exact decision and optimization for proper, PCF and odd colorings.

mod backtrack;
mod oracle;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::{self, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use crate::coloring::Variant;
pub use oracle::{brute_force_oracle, brute_force_oracle_with_cap, DEFAULT_ORACLE_CAP};

/// Limits on a single decision. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time_ms: Option<u64>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;
    pub const DEFAULT_TIME_MS: u64 = 60_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time_ms: None,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_time_ms: None,
        }
    }

    pub(crate) fn max_time(&self) -> Option<Duration> {
        self.max_time_ms.map(Duration::from_millis)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(Self::DEFAULT_NODES),
            max_time_ms: Some(Self::DEFAULT_TIME_MS),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Sat,
    Unsat,
    Timeout,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Sat => "SAT",
            Status::Unsat => "UNSAT",
            Status::Timeout => "TIMEOUT",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: Status,
    pub witness: Option<Coloring>,
    pub stats: Stats,
    pub budget: Budget,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        self.status == Status::Sat
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

/// Tuning knobs for the backtracking search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Prune a PCF branch as soon as some vertex sees every color at least
    /// twice among its colored neighbors, before its neighborhood is complete.
    pub early_pcf_prune: bool,
}

/// Decides whether `g` has a `variant` coloring with `k` colors.
pub fn decide_coloring(g: &Graph, k: usize, variant: Variant, budget: Budget) -> Result<SolveResult> {
    decide_coloring_with(g, k, variant, budget, SearchOptions::default())
}

pub fn decide_coloring_with(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: Budget,
    options: SearchOptions,
) -> Result<SolveResult> {
    let mut witness = None;
    let outcome = backtrack::search(g, k, variant, budget, options, |colors| {
        witness = Some(colors.to_vec());
        false
    })?;
    let witness = witness.map(|colors| finish_witness(g, colors, k, variant)).transpose()?;
    let status = match (&witness, outcome.exhausted_budget) {
        (Some(_), _) => Status::Sat,
        (None, true) => Status::Timeout,
        (None, false) => Status::Unsat,
    };
    Ok(SolveResult {
        status,
        witness,
        stats: outcome.stats,
        budget,
    })
}

/// Every witness leaving the solver is re-checked by the certificate checker.
fn finish_witness(g: &Graph, colors: Vec<usize>, k: usize, variant: Variant) -> Result<Coloring> {
    let c = Coloring::with_palette(colors, k)?;
    let report = coloring::check(g, &c, variant)?;
    if !report.verdict {
        return Err(Error::Internal(format!(
            "solver produced a {variant} coloring that fails the checker: {:?}",
            report.violations
        )));
    }
    Ok(c)
}

/// Outcome of a bounded enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Colorings found, up to symmetry of color names.
    pub colorings: Vec<Coloring>,
    /// True when the search space was fully explored.
    pub complete: bool,
    pub stats: Stats,
}

/// Lists up to `limit` `variant` colorings with `k` colors, one per class of
/// color renamings (the canonical representative uses colors in order of
/// first appearance along the search order).
pub fn enumerate_colorings(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: Budget,
    limit: usize,
) -> Result<Enumeration> {
    let mut found = Vec::new();
    let outcome = backtrack::search(g, k, variant, budget, SearchOptions::default(), |colors| {
        found.push(colors.to_vec());
        found.len() < limit
    })?;
    let stopped_early = found.len() >= limit && limit > 0;
    let colorings = found
        .into_iter()
        .map(|colors| finish_witness(g, colors, k, variant))
        .collect::<Result<Vec<_>>>()?;
    Ok(Enumeration {
        colorings,
        complete: !outcome.exhausted_budget && !stopped_early,
        stats: outcome.stats,
    })
}

/// Result of an optimization run that hit the budget: the true value lies in
/// `lower..=upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub lower: usize,
    pub upper: usize,
}

/// Smallest `k` admitting a `variant` coloring, by ascending search from 1
/// (or 2 when `g` has an edge).
pub fn chromatic_number(g: &Graph, variant: Variant, budget: Budget) -> Result<std::result::Result<usize, Bracket>> {
    let start = if g.m() > 0 { 2 } else { 1 };
    // all-distinct colors satisfy every variant
    let upper = g.n().max(1);
    for k in start..=upper {
        let res = decide_coloring(g, k, variant, budget)?;
        match res.status {
            Status::Sat => return Ok(Ok(k)),
            Status::Unsat => {}
            Status::Timeout => return Ok(Err(Bracket { lower: k, upper })),
        }
    }
    Ok(Ok(upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::subdivide;

    fn decide(g: &Graph, k: usize, v: Variant) -> Status {
        decide_coloring(g, k, v, Budget::default()).unwrap().status
    }

    #[test]
    fn c4_pcf() {
        assert_eq!(decide(&Graph::cycle(4), 3, Variant::Pcf), Status::Unsat);
        let res = decide_coloring(&Graph::cycle(4), 4, Variant::Pcf, Budget::default()).unwrap();
        assert_eq!(res.status, Status::Sat);
        assert_eq!(res.witness.unwrap().num_colors_used(), 4);
    }

    #[test]
    fn star_is_odd_two_colorable() {
        assert_eq!(decide(&Graph::star(3), 2, Variant::Odd), Status::Sat);
    }

    #[test]
    fn sub1_k4_needs_four_pcf_colors() {
        let g = subdivide(&Graph::complete(4), 1).graph;
        assert_eq!(decide(&g, 3, Variant::Pcf), Status::Unsat);
        assert_eq!(decide(&g, 4, Variant::Pcf), Status::Sat);
    }

    #[test]
    fn chromatic_numbers() {
        let b = Budget::default();
        assert_eq!(chromatic_number(&Graph::cycle(4), Variant::Pcf, b).unwrap(), Ok(4));
        assert_eq!(chromatic_number(&Graph::star(3), Variant::Odd, b).unwrap(), Ok(2));
        assert_eq!(chromatic_number(&Graph::cycle(5), Variant::Proper, b).unwrap(), Ok(3));
        assert_eq!(chromatic_number(&Graph::empty(3), Variant::Pcf, b).unwrap(), Ok(1));
        assert_eq!(chromatic_number(&Graph::cycle(5), Variant::Pcf, b).unwrap(), Ok(5));
    }

    #[test]
    fn tiny_budget_times_out_and_brackets() {
        let g = subdivide(&Graph::complete(5), 1).graph;
        let res = decide_coloring(&g, 5, Variant::Pcf, Budget::nodes(3)).unwrap();
        assert_eq!(res.status, Status::Timeout);
        assert!(res.witness.is_none());
        let bracket = chromatic_number(&g, Variant::Pcf, Budget::nodes(3)).unwrap();
        assert_eq!(bracket, Err(Bracket { lower: 2, upper: 15 }));
    }

    #[test]
    fn one_color_and_zero_colors() {
        assert_eq!(decide(&Graph::complete(2), 1, Variant::Proper), Status::Unsat);
        assert_eq!(decide(&Graph::empty(2), 1, Variant::Pcf), Status::Sat);
        assert_eq!(decide(&Graph::empty(0), 1, Variant::Odd), Status::Sat);
        assert!(decide_coloring(&Graph::empty(1), 0, Variant::Proper, Budget::default()).is_err());
    }

    #[test]
    fn early_prune_agrees() {
        let opts = SearchOptions { early_pcf_prune: true };
        for n in 3..8 {
            let g = Graph::cycle(n);
            for k in 1..=5 {
                let a = decide_coloring_with(&g, k, Variant::Pcf, Budget::default(), opts).unwrap();
                assert_eq!(a.status, decide(&g, k, Variant::Pcf), "C{n} k={k}");
            }
        }
    }

    #[test]
    fn enumeration_counts_canonical_colorings() {
        // proper 3-colorings of a triangle up to renaming: exactly one
        let e = enumerate_colorings(&Graph::complete(3), 3, Variant::Proper, Budget::default(), 100).unwrap();
        assert_eq!(e.colorings.len(), 1);
        assert!(e.complete);
        // P3 with 2 colors: only 1,2,1 up to renaming
        let e = enumerate_colorings(&Graph::path(3), 3, Variant::Proper, Budget::default(), 100).unwrap();
        assert_eq!(e.colorings.len(), 2);
        let e = enumerate_colorings(&Graph::path(3), 3, Variant::Proper, Budget::default(), 1).unwrap();
        assert!(!e.complete);
    }
}
