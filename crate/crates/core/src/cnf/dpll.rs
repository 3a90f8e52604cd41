//! A small DPLL procedure (unit propagation with two watched literals,
//! chronological backtracking). Good enough for desk-sized encodings; it makes
//! no attempt to compete with a CDCL solver.

/// Outcome of a bounded DPLL run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DpllOutcome {
    /// A model, indexed by DIMACS variable (index 0 unused).
    Sat(Vec<bool>),
    Unsat,
    /// The decision budget ran out.
    Unknown,
}

fn lit_index(lit: i32) -> usize {
    let var = lit.unsigned_abs() as usize - 1;
    2 * var + usize::from(lit < 0)
}

pub fn solve(num_vars: usize, clauses: &[Vec<i32>], max_decisions: Option<u64>) -> DpllOutcome {
    Dpll::new(num_vars, clauses).run(max_decisions.unwrap_or(u64::MAX))
}

struct Dpll {
    clauses: Vec<Vec<usize>>,
    watches: Vec<Vec<usize>>,
    // value per variable: 0 unassigned, 1 true, 2 false
    value: Vec<u8>,
    trail: Vec<usize>,
    qhead: usize,
    // (trail length before decision, decision literal, already flipped)
    decisions: Vec<(usize, usize, bool)>,
    units: Vec<usize>,
    trivially_unsat: bool,
}

impl Dpll {
    fn new(num_vars: usize, input: &[Vec<i32>]) -> Self {
        let mut clauses = Vec::new();
        let mut watches = vec![Vec::new(); 2 * num_vars];
        let mut units = Vec::new();
        let mut trivially_unsat = false;
        for clause in input {
            let mut lits: Vec<usize> = clause.iter().map(|&l| lit_index(l)).collect();
            lits.sort_unstable();
            lits.dedup();
            if lits.windows(2).any(|w| w[0] ^ 1 == w[1]) {
                continue; // tautology
            }
            match lits.len() {
                0 => trivially_unsat = true,
                1 => units.push(lits[0]),
                _ => {
                    let id = clauses.len();
                    watches[lits[0]].push(id);
                    watches[lits[1]].push(id);
                    clauses.push(lits);
                }
            }
        }
        Dpll {
            clauses,
            watches,
            value: vec![0; num_vars],
            trail: Vec::new(),
            qhead: 0,
            decisions: Vec::new(),
            units,
            trivially_unsat,
        }
    }

    #[inline]
    fn lit_value(&self, lit: usize) -> u8 {
        match self.value[lit / 2] {
            0 => 0,
            v if (v == 1) == lit.is_multiple_of(2) => 1,
            _ => 2,
        }
    }

    fn enqueue(&mut self, lit: usize) -> bool {
        match self.lit_value(lit) {
            1 => true,
            2 => false,
            _ => {
                self.value[lit / 2] = if lit.is_multiple_of(2) { 1 } else { 2 };
                self.trail.push(lit);
                true
            }
        }
    }

    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let false_lit = self.trail[self.qhead] ^ 1;
            self.qhead += 1;
            let watching = std::mem::take(&mut self.watches[false_lit]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = false;
            for (pos, &cid) in watching.iter().enumerate() {
                if conflict {
                    keep.extend_from_slice(&watching[pos..]);
                    break;
                }
                let clause = &mut self.clauses[cid];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                let first_val = match self.value[first / 2] {
                    0 => 0,
                    v if (v == 1) == first.is_multiple_of(2) => 1,
                    _ => 2,
                };
                if first_val == 1 {
                    keep.push(cid);
                    continue;
                }
                let mut moved = false;
                for i in 2..clause.len() {
                    let l = clause[i];
                    let val = self.value[l / 2];
                    let is_false = val != 0 && (val == 1) != l.is_multiple_of(2);
                    if !is_false {
                        clause.swap(1, i);
                        self.watches[clause[1]].push(cid);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                keep.push(cid);
                if first_val == 2 || !self.enqueue(first) {
                    conflict = true;
                }
            }
            self.watches[false_lit] = keep;
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let lit = self.trail.pop().unwrap();
            self.value[lit / 2] = 0;
        }
        self.qhead = len;
    }

    fn run(mut self, max_decisions: u64) -> DpllOutcome {
        if self.trivially_unsat {
            return DpllOutcome::Unsat;
        }
        for lit in std::mem::take(&mut self.units) {
            if !self.enqueue(lit) {
                return DpllOutcome::Unsat;
            }
        }
        let mut decisions = 0u64;
        let mut next_var = 0;
        loop {
            if !self.propagate() {
                // chronological backtrack: flip the deepest unflipped decision
                loop {
                    let Some((len, lit, flipped)) = self.decisions.pop() else {
                        return DpllOutcome::Unsat;
                    };
                    self.undo_to(len);
                    if !flipped {
                        self.decisions.push((len, lit ^ 1, true));
                        self.enqueue(lit ^ 1);
                        break;
                    }
                }
                next_var = 0;
                continue;
            }
            while next_var < self.value.len() && self.value[next_var] != 0 {
                next_var += 1;
            }
            if next_var == self.value.len() {
                let mut model = vec![false; self.value.len() + 1];
                for (v, &val) in self.value.iter().enumerate() {
                    model[v + 1] = val == 1;
                }
                return DpllOutcome::Sat(model);
            }
            decisions += 1;
            if decisions > max_decisions {
                return DpllOutcome::Unknown;
            }
            let lit = 2 * next_var;
            self.decisions.push((self.trail.len(), lit, false));
            self.enqueue(lit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sat(n: usize, cls: &[&[i32]]) -> DpllOutcome {
        let v: Vec<Vec<i32>> = cls.iter().map(|c| c.to_vec()).collect();
        solve(n, &v, None)
    }

    #[test]
    fn simple_cases() {
        assert!(matches!(sat(1, &[&[1]]), DpllOutcome::Sat(m) if m[1]));
        assert_eq!(sat(1, &[&[1], &[-1]]), DpllOutcome::Unsat);
        assert_eq!(sat(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]), DpllOutcome::Unsat);
        assert_eq!(sat(0, &[&[]]), DpllOutcome::Unsat);
        assert!(matches!(sat(3, &[&[1, 2, 3], &[-1], &[-2]]), DpllOutcome::Sat(m) if m[3]));
    }

    #[test]
    fn pigeonhole_three_into_two() {
        // p(i,j) = pigeon i in hole j, var 2*i + j + 1
        let p = |i: i32, j: i32| 2 * i + j + 1;
        let mut cls: Vec<Vec<i32>> = (0..3).map(|i| vec![p(i, 0), p(i, 1)]).collect();
        for j in 0..2 {
            for a in 0..3 {
                for b in a + 1..3 {
                    cls.push(vec![-p(a, j), -p(b, j)]);
                }
            }
        }
        assert_eq!(solve(6, &cls, None), DpllOutcome::Unsat);
        assert_eq!(solve(6, &cls, Some(0)), DpllOutcome::Unknown);
    }
}
