use std::time::Instant;

use super::{Budget, SearchOptions, Stats};
use crate::coloring::Variant;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(super) struct Outcome {
    pub stats: Stats,
    pub exhausted_budget: bool,
}

/// Backtracking over vertices in descending-degree order (ties by id), colors
/// ascending, each vertex capped at one more than the largest color used so
/// far. Properness is enforced on assignment. The PCF / odd condition of a
/// vertex depends only on its neighbors, so it is tested the moment its last
/// neighbor gets colored.
///
/// `on_solution` returns whether to keep searching.
pub(super) fn search(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: Budget,
    options: SearchOptions,
    mut on_solution: impl FnMut(&[usize]) -> bool,
) -> Result<Outcome> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = Search {
        g,
        k,
        variant,
        options,
        order,
        color: vec![0; g.n()],
        counts: vec![0; g.n() * (k + 1)],
        remaining: g.vertices().map(|v| g.degree(v)).collect(),
        nodes: 0,
        max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
        deadline: budget.max_time().map(|d| Instant::now() + d),
        started: Instant::now(),
        exhausted: false,
    };
    s.descend(0, 0, &mut on_solution);
    Ok(Outcome {
        stats: Stats {
            nodes: s.nodes,
            elapsed_ms: s.started.elapsed().as_millis() as u64,
        },
        exhausted_budget: s.exhausted,
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    variant: Variant,
    options: SearchOptions,
    order: Vec<usize>,
    color: Vec<usize>,
    // counts[w * (k + 1) + c]: colored neighbors of w with color c
    counts: Vec<u32>,
    // uncolored neighbors per vertex
    remaining: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    started: Instant,
    exhausted: bool,
}

impl Search<'_> {
    #[inline]
    fn row(&self, w: usize) -> &[u32] {
        let base = w * (self.k + 1);
        &self.counts[base + 1..base + self.k + 1]
    }

    fn satisfied(&self, w: usize) -> bool {
        match self.variant {
            Variant::Proper => true,
            Variant::Pcf => self.row(w).contains(&1),
            Variant::Odd => self.row(w).iter().any(|&c| c % 2 == 1),
        }
    }

    /// Some color could still end up unique at `w`.
    fn pcf_still_possible(&self, w: usize) -> bool {
        self.row(w).iter().any(|&c| c <= 1)
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let g = self.g;
        for &w in g.neighbors(v) {
            self.counts[w * (self.k + 1) + c] += 1;
            self.remaining[w] -= 1;
        }
        if self.variant == Variant::Proper {
            return true;
        }
        g.neighbors(v).iter().all(|&w| {
            if self.remaining[w] == 0 {
                self.satisfied(w)
            } else if self.options.early_pcf_prune && self.variant == Variant::Pcf {
                self.pcf_still_possible(w)
            } else {
                true
            }
        })
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        for &w in self.g.neighbors(v) {
            self.counts[w * (self.k + 1) + c] -= 1;
            self.remaining[w] += 1;
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.max_nodes {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                }
            }
        }
        self.exhausted
    }

    /// Returns true when the whole search must stop.
    fn descend(&mut self, depth: usize, max_used: usize, on_solution: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return !on_solution(&self.color);
        }
        let v = self.order[depth];
        let cap = self.k.min(max_used + 1);
        for c in 1..=cap {
            if self.out_of_budget() {
                return true;
            }
            self.nodes += 1;
            if self.counts[v * (self.k + 1) + c] != 0 {
                continue;
            }
            let ok = self.assign(v, c);
            let stop = ok && self.descend(depth + 1, max_used.max(c), on_solution);
            self.unassign(v, c);
            if stop {
                return true;
            }
        }
        false
    }
}
