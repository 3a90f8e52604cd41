//! CNF encodings of the three coloring predicates, DIMACS I/O, and model
//! decoding.
//!
//! Variables:
//! - `x(v, c)`: vertex `v` has color `c`, exactly one per vertex;
//! - `u(v, w, c)` (PCF): `w` is the only neighbor of `v` colored `c`;
//! - `par(v, c, i)` (odd): parity of the number of `c`-colored vertices among
//!   the first `i` neighbors of `v`, built as a sequential XOR chain. The last
//!   link of the chain is the odd-multiplicity indicator of `(v, c)`.

mod dpll;

use std::fmt::Write as _;

use crate::coloring::{Coloring, Variant};
use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;

pub use dpll::DpllOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarMeaning {
    Color { vertex: usize, color: usize },
    Unique { vertex: usize, neighbor: usize, color: usize },
    Parity { vertex: usize, color: usize, prefix: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub n: usize,
    pub k: usize,
    pub variant: Variant,
    /// `meanings[i]` describes DIMACS variable `i + 1`.
    pub meanings: Vec<VarMeaning>,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn num_vars(&self) -> usize {
        self.meanings.len()
    }

    /// DIMACS variable of `x(v, c)`.
    pub fn color_var(k: usize, v: usize, c: usize) -> i32 {
        (v * k + c) as i32
    }

    fn fresh(&mut self, meaning: VarMeaning) -> i32 {
        self.meanings.push(meaning);
        self.meanings.len() as i32
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("c pcf-coloring n={} k={} variant={}\n", self.n, self.k, self.variant);
        for (i, m) in self.meanings.iter().enumerate() {
            let id = i + 1;
            let _ = match *m {
                VarMeaning::Color { vertex, color } => writeln!(out, "c var {id} = x {vertex} {color}"),
                VarMeaning::Unique { vertex, neighbor, color } => {
                    writeln!(out, "c aux {id} = u {vertex} {neighbor} {color}")
                }
                VarMeaning::Parity { vertex, color, prefix } => {
                    writeln!(out, "c aux {id} = par {vertex} {color} {prefix}")
                }
            };
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars(), self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// Reads DIMACS text written by [`Cnf::to_dimacs`], recovering the
    /// variable map from the comment lines.
    pub fn from_dimacs(text: &str) -> Result<Cnf> {
        let mut header = None;
        let mut meanings: Vec<Option<VarMeaning>> = Vec::new();
        let mut declared = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "c" {
                match toks.get(1).copied() {
                    Some("pcf-coloring") => header = Some(parse_header(line_no, &toks[2..])?),
                    Some("var") | Some("aux") => {
                        let (id, meaning) = parse_meaning(line_no, &toks)?;
                        if meanings.len() < id {
                            meanings.resize(id, None);
                        }
                        meanings[id - 1] = Some(meaning);
                    }
                    _ => {}
                }
                continue;
            }
            if toks[0] == "p" {
                if toks.len() != 4 || toks[1] != "cnf" {
                    return Err(parse_err(line_no, "problem line must be `p cnf V C`"));
                }
                let v: usize = toks[2].parse().map_err(|_| parse_err(line_no, "bad variable count"))?;
                let c: usize = toks[3].parse().map_err(|_| parse_err(line_no, "bad clause count"))?;
                declared = Some((v, c));
                continue;
            }
            for tok in toks {
                let lit: i32 = tok.parse().map_err(|_| parse_err(line_no, format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = declared.ok_or_else(|| parse_err(1, "missing `p cnf` line"))?;
        if clauses.len() != num_clauses {
            return Err(parse_err(1, format!("declared {num_clauses} clauses, read {}", clauses.len())));
        }
        let (n, k, variant) = header.ok_or_else(|| parse_err(1, "missing `c pcf-coloring` header"))?;
        meanings.resize(num_vars, None);
        let meanings = meanings
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| parse_err(1, format!("variable {} has no map entry", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Cnf {
            n,
            k,
            variant,
            meanings,
            clauses,
        })
    }

    /// Runs the bundled DPLL procedure.
    pub fn solve(&self, max_decisions: Option<u64>) -> DpllOutcome {
        dpll::solve(self.num_vars(), &self.clauses, max_decisions)
    }

    /// Reads the coloring off a model through the `x(v, c)` variables.
    pub fn decode(&self, model: &[bool]) -> Result<Coloring> {
        let mut colors = vec![0; self.n];
        for (i, m) in self.meanings.iter().enumerate() {
            if let VarMeaning::Color { vertex, color } = *m {
                if model.get(i + 1).copied().unwrap_or(false) {
                    if colors[vertex] != 0 {
                        return Err(Error::Internal(format!("vertex {vertex} has two colors in the model")));
                    }
                    colors[vertex] = color;
                }
            }
        }
        Coloring::with_palette(colors, self.k)
    }
}

fn parse_header(line_no: usize, toks: &[&str]) -> Result<(usize, usize, Variant)> {
    let mut n = None;
    let mut k = None;
    let mut variant = None;
    for tok in toks {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("expected key=value, got {tok:?}")))?;
        match key {
            "n" => n = val.parse().ok(),
            "k" => k = val.parse().ok(),
            "variant" => variant = val.parse().ok(),
            _ => {}
        }
    }
    match (n, k, variant) {
        (Some(n), Some(k), Some(v)) => Ok((n, k, v)),
        _ => Err(parse_err(line_no, "header needs n=, k= and variant=")),
    }
}

fn parse_meaning(line_no: usize, toks: &[&str]) -> Result<(usize, VarMeaning)> {
    let num = |i: usize| -> Result<usize> {
        toks.get(i)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "malformed variable map line"))
    };
    let id = num(2)?;
    if id == 0 || toks.get(3) != Some(&"=") {
        return Err(parse_err(line_no, "malformed variable map line"));
    }
    let meaning = match toks.get(4).copied() {
        Some("x") => VarMeaning::Color {
            vertex: num(5)?,
            color: num(6)?,
        },
        Some("u") => VarMeaning::Unique {
            vertex: num(5)?,
            neighbor: num(6)?,
            color: num(7)?,
        },
        Some("par") => VarMeaning::Parity {
            vertex: num(5)?,
            color: num(6)?,
            prefix: num(7)?,
        },
        _ => return Err(parse_err(line_no, "unknown variable kind")),
    };
    Ok((id, meaning))
}

/// Encodes "`g` has a `variant` coloring with `k` colors".
pub fn encode_cnf(g: &Graph, k: usize, variant: Variant) -> Result<Cnf> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut cnf = Cnf {
        n: g.n(),
        k,
        variant,
        meanings: Vec::new(),
        clauses: Vec::new(),
    };
    let x = |v: usize, c: usize| Cnf::color_var(k, v, c);
    for vertex in g.vertices() {
        for color in 1..=k {
            cnf.fresh(VarMeaning::Color { vertex, color });
        }
    }
    for v in g.vertices() {
        cnf.clauses.push((1..=k).map(|c| x(v, c)).collect());
        for c1 in 1..=k {
            for c2 in c1 + 1..=k {
                cnf.clauses.push(vec![-x(v, c1), -x(v, c2)]);
            }
        }
    }
    for &(u, v) in g.edges() {
        for c in 1..=k {
            cnf.clauses.push(vec![-x(u, c), -x(v, c)]);
        }
    }
    match variant {
        Variant::Proper => {}
        Variant::Pcf => encode_pcf(g, &mut cnf),
        Variant::Odd => encode_odd(g, &mut cnf),
    }
    Ok(cnf)
}

fn encode_pcf(g: &Graph, cnf: &mut Cnf) {
    let k = cnf.k;
    for v in g.vertices() {
        let nb = g.neighbors(v);
        if nb.is_empty() {
            continue;
        }
        let mut some_unique = Vec::with_capacity(nb.len() * k);
        for &w in nb {
            for c in 1..=k {
                let u = cnf.fresh(VarMeaning::Unique {
                    vertex: v,
                    neighbor: w,
                    color: c,
                });
                cnf.clauses.push(vec![-u, Cnf::color_var(k, w, c)]);
                for &other in nb.iter().filter(|&&o| o != w) {
                    cnf.clauses.push(vec![-u, -Cnf::color_var(k, other, c)]);
                }
                some_unique.push(u);
            }
        }
        cnf.clauses.push(some_unique);
    }
}

fn encode_odd(g: &Graph, cnf: &mut Cnf) {
    let k = cnf.k;
    for v in g.vertices() {
        let nb = g.neighbors(v);
        if nb.is_empty() {
            continue;
        }
        let mut some_odd = Vec::with_capacity(k);
        for c in 1..=k {
            let mut acc = Cnf::color_var(k, nb[0], c);
            for (i, &w) in nb.iter().enumerate().skip(1) {
                let b = Cnf::color_var(k, w, c);
                let z = cnf.fresh(VarMeaning::Parity {
                    vertex: v,
                    color: c,
                    prefix: i + 1,
                });
                // z <-> acc xor b
                cnf.clauses.push(vec![-z, acc, b]);
                cnf.clauses.push(vec![-z, -acc, -b]);
                cnf.clauses.push(vec![z, -acc, b]);
                cnf.clauses.push(vec![z, acc, -b]);
                acc = z;
            }
            some_odd.push(acc);
        }
        cnf.clauses.push(some_odd);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_proper_has_four_color_vars() {
        let cnf = encode_cnf(&Graph::complete(2), 2, Variant::Proper).unwrap();
        assert_eq!(cnf.num_vars(), 4);
        let DpllOutcome::Sat(model) = cnf.solve(None) else {
            panic!("K2 is 2-colorable");
        };
        assert_eq!(cnf.decode(&model).unwrap().num_colors_used(), 2);
    }

    #[test]
    fn c4_three_colors_pcf_is_unsat() {
        let cnf = encode_cnf(&Graph::cycle(4), 3, Variant::Pcf).unwrap();
        assert_eq!(cnf.solve(None), DpllOutcome::Unsat);
    }

    #[test]
    fn parity_chain_size() {
        // star center has 3 neighbors: 2 links per color, 4 clauses each
        let cnf = encode_cnf(&Graph::star(3), 2, Variant::Odd).unwrap();
        let parity = cnf
            .meanings
            .iter()
            .filter(|m| matches!(m, VarMeaning::Parity { .. }))
            .count();
        assert_eq!(parity, 2 * 2);
    }

    #[test]
    fn dimacs_round_trip() {
        for variant in Variant::ALL {
            let cnf = encode_cnf(&Graph::path(3), 3, variant).unwrap();
            let text = cnf.to_dimacs();
            assert!(text.contains("p cnf"));
            assert!(text.contains("c var 1 = x 0 1"));
            assert_eq!(Cnf::from_dimacs(&text).unwrap(), cnf);
        }
    }

    #[test]
    fn rejects_malformed_dimacs() {
        assert!(Cnf::from_dimacs("p cnf 1 1\n1 0\n").is_err());
        assert!(Cnf::from_dimacs("c pcf-coloring n=1 k=1 variant=proper\nc var 1 = x 0 1\np cnf 1 2\n1 0\n").is_err());
    }
}
