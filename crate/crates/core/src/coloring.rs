//! Colorings and certificate-producing checkers for proper, PCF and odd colorings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which coloring predicate is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// No monochromatic edge.
    Proper,
    /// Proper, and every non-isolated vertex has a neighbor whose color is
    /// unique in its neighborhood.
    Pcf,
    /// Proper, and every non-isolated vertex sees some color an odd number of times.
    Odd,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Proper, Variant::Pcf, Variant::Odd];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Proper => "proper",
            Variant::Pcf => "pcf",
            Variant::Odd => "odd",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "proper" => Ok(Variant::Proper),
            "pcf" => Ok(Variant::Pcf),
            "odd" => Ok(Variant::Odd),
            other => Err(format!("unknown variant {other:?} (expected proper, pcf or odd)")),
        }
    }
}

/// A total assignment of colors `1..=k` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Palette size is taken to be the largest color present.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::with_palette(colors, k)
    }

    pub fn with_palette(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { colors, k })
    }

    /// Builds a coloring from `(vertex, color)` pairs, which must cover `0..n`
    /// exactly once.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut colors = vec![0; n];
        for &(v, c) in pairs {
            if v >= n {
                return Err(Error::NotInDomain(v));
            }
            if colors[v] != 0 {
                return Err(Error::Precondition(format!("vertex {v} is colored twice")));
            }
            if c == 0 {
                return Err(Error::ColorOutOfRange { vertex: v, color: 0, k: 0 });
            }
            colors[v] = c;
        }
        let got = colors.iter().filter(|&&c| c != 0).count();
        if got != n {
            return Err(Error::PartialColoring { expected: n, got });
        }
        Coloring::new(colors)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_colors_used(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Restriction to the vertex set `s`, renumbered by ascending id. The
    /// palette shrinks to the largest color still present; use
    /// [`Coloring::num_colors_used`] for the number of distinct colors.
    pub fn restrict(&self, s: &[usize]) -> Result<Coloring> {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.colors.len()) {
            return Err(Error::NotInDomain(v));
        }
        Coloring::new(sorted.iter().map(|&v| self.colors[v]).collect())
    }
}

/// Per-vertex evidence that a vertex meets the PCF or odd condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// The smallest-id neighbor whose color is unique in the neighborhood.
    Neighbor(usize),
    /// The smallest color with odd multiplicity in the neighborhood.
    Color(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MonochromaticEdge { u: usize, v: usize },
    NoUniqueColor { vertex: usize },
    NoOddColor { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub variant: Variant,
    pub verdict: bool,
    /// Indexed by vertex; `None` for isolated vertices, failing vertices and
    /// the proper variant.
    pub witnesses: Vec<Option<Witness>>,
    pub violations: Vec<Violation>,
}

impl CertificateReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn ensure_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::PartialColoring {
            expected: g.n(),
            got: c.len(),
        });
    }
    Ok(())
}

fn monochromatic_edges(g: &Graph, c: &Coloring) -> Vec<Violation> {
    g.edges()
        .iter()
        .filter(|&&(u, v)| c.color(u) == c.color(v))
        .map(|&(u, v)| Violation::MonochromaticEdge { u, v })
        .collect()
}

fn neighbor_counts(g: &Graph, c: &Coloring, v: usize, counts: &mut Vec<usize>) {
    counts.clear();
    counts.resize(c.k() + 1, 0);
    for &w in g.neighbors(v) {
        counts[c.color(w)] += 1;
    }
}

pub fn check_proper(g: &Graph, c: &Coloring) -> Result<CertificateReport> {
    check(g, c, Variant::Proper)
}

pub fn check_pcf(g: &Graph, c: &Coloring) -> Result<CertificateReport> {
    check(g, c, Variant::Pcf)
}

pub fn check_odd(g: &Graph, c: &Coloring) -> Result<CertificateReport> {
    check(g, c, Variant::Odd)
}

/// Checks `c` against `variant` on `g`. The verdict is true iff no violation
/// was found.
pub fn check(g: &Graph, c: &Coloring, variant: Variant) -> Result<CertificateReport> {
    ensure_total(g, c)?;
    let mut violations = monochromatic_edges(g, c);
    let mut witnesses = vec![None; g.n()];
    if variant != Variant::Proper {
        let mut counts = Vec::new();
        for v in g.vertices() {
            if g.degree(v) == 0 {
                continue;
            }
            neighbor_counts(g, c, v, &mut counts);
            let witness = match variant {
                Variant::Pcf => g
                    .neighbors(v)
                    .iter()
                    .find(|&&w| counts[c.color(w)] == 1)
                    .map(|&w| Witness::Neighbor(w)),
                Variant::Odd => (1..counts.len())
                    .find(|&col| counts[col] % 2 == 1)
                    .map(Witness::Color),
                Variant::Proper => unreachable!(),
            };
            match witness {
                Some(w) => witnesses[v] = Some(w),
                None if variant == Variant::Pcf => violations.push(Violation::NoUniqueColor { vertex: v }),
                None => violations.push(Violation::NoOddColor { vertex: v }),
            }
        }
    }
    Ok(CertificateReport {
        variant,
        verdict: violations.is_empty(),
        witnesses,
        violations,
    })
}

/// Degree-2 vertices whose two neighbors share a color. Empty for every odd
/// (hence every PCF) coloring.
pub fn degree_two_violations(g: &Graph, c: &Coloring) -> Vec<usize> {
    g.vertices()
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.len() == 2 && c.color(nb[0]) == c.color(nb[1])
        })
        .collect()
}
