//! Exhaustive enumeration of all `k^n` colorings. Shares no code with the
//! backtracking search or the certificate checker so that it can serve as an
//! independent reference.

use std::time::Instant;

use super::{Budget, SolveResult, Stats, Status};
use crate::coloring::{Coloring, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_CAP: u128 = 100_000_000;

pub fn brute_force_oracle(g: &Graph, k: usize, variant: Variant) -> Result<SolveResult> {
    brute_force_oracle_with_cap(g, k, variant, DEFAULT_ORACLE_CAP)
}

/// Returns the lexicographically first satisfying coloring (vertex 0 most
/// significant), or UNSAT after trying all of them.
pub fn brute_force_oracle_with_cap(g: &Graph, k: usize, variant: Variant, cap: u128) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let n = g.n();
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::OracleCapExceeded(total, cap));
    }
    let started = Instant::now();
    let mut colors = vec![1usize; n];
    let mut tried = 0u64;
    let mut tally = vec![0usize; k + 1];
    loop {
        tried += 1;
        if accepts(g, &colors, variant, &mut tally) {
            return Ok(SolveResult {
                status: Status::Sat,
                witness: Some(Coloring::with_palette(colors, k)?),
                stats: Stats {
                    nodes: tried,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                },
                budget: Budget::unlimited(),
            });
        }
        // odometer step, last vertex fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(SolveResult {
                    status: Status::Unsat,
                    witness: None,
                    stats: Stats {
                        nodes: tried,
                        elapsed_ms: started.elapsed().as_millis() as u64,
                    },
                    budget: Budget::unlimited(),
                });
            }
            i -= 1;
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

fn accepts(g: &Graph, colors: &[usize], variant: Variant, tally: &mut [usize]) -> bool {
    for &(u, v) in g.edges() {
        if colors[u] == colors[v] {
            return false;
        }
    }
    if variant == Variant::Proper {
        return true;
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        if nb.is_empty() {
            continue;
        }
        tally.iter_mut().for_each(|t| *t = 0);
        for &w in nb {
            tally[colors[w]] += 1;
        }
        let ok = match variant {
            Variant::Pcf => tally.contains(&1),
            _ => tally.iter().any(|t| t % 2 == 1),
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_pcf_first_witness() {
        let res = brute_force_oracle(&Graph::path(4), 3, Variant::Pcf).unwrap();
        assert_eq!(res.status, Status::Sat);
        assert_eq!(res.witness.unwrap().colors(), &[1, 2, 3, 1]);
    }

    #[test]
    fn k2_one_color() {
        assert_eq!(
            brute_force_oracle(&Graph::complete(2), 1, Variant::Proper).unwrap().status,
            Status::Unsat
        );
    }

    #[test]
    fn c6_two_colors_not_odd() {
        let res = brute_force_oracle(&Graph::cycle(6), 2, Variant::Odd).unwrap();
        assert_eq!(res.status, Status::Unsat);
        assert_eq!(res.stats.nodes, 64);
    }

    #[test]
    fn c4_three_colors_not_pcf() {
        let res = brute_force_oracle(&Graph::cycle(4), 3, Variant::Pcf).unwrap();
        assert_eq!(res.status, Status::Unsat);
        assert_eq!(res.stats.nodes, 81);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            brute_force_oracle_with_cap(&Graph::empty(10), 4, Variant::Proper, 1000).unwrap_err(),
            Error::OracleCapExceeded(1 << 20, 1000)
        );
    }
}
