//! Batch verification suites. Each suite confronts a family of claims with
//! solver, oracle and lift evidence and returns a [`SuiteReport`] whose JSON
//! form is byte-for-byte reproducible for a fixed seed and budget.

mod characterization;
pub mod graphs;
mod lemmas;
mod reductions;

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{degree_two_violations, Coloring, Variant};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::write_edge_list;
use crate::solver::{decide_coloring, Budget, Status};

pub use characterization::run_characterization_suite;
pub use lemmas::run_lemma_suite;
pub use reductions::{default_reduction_instances, run_reduction_suite, ReductionInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Timeout,
}

/// A file produced by a case: a witness, a counterexample or a CNF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    /// Relative to the report directory.
    pub path: String,
    pub contents: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub claim: String,
    /// Short name of the statement under test.
    pub reference: String,
    pub verdict: Verdict,
    pub detail: String,
    pub artifact_paths: Vec<String>,
    #[serde(skip)]
    pub artifacts: Vec<Artifact>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub refuted: usize,
    pub timeout: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub budgets: Budget,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl SuiteReport {
    fn new(suite: &str, config: &SuiteConfig) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed: config.seed,
            budgets: config.budget,
            cases: Vec::new(),
            summary: Summary::default(),
        }
    }

    fn push(&mut self, mut case: Case) {
        case.artifact_paths = case.artifacts.iter().map(|a| a.path.clone()).collect();
        self.summary.total += 1;
        match case.verdict {
            Verdict::Verified => self.summary.verified += 1,
            Verdict::Refuted => self.summary.refuted += 1,
            Verdict::Timeout => self.summary.timeout += 1,
        }
        self.cases.push(case);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn case(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// Writes `<suite>.json` and every artifact under `dir`; artifact paths
    /// already start with the suite name.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<PathBuf> {
        std::fs::create_dir_all(dir)?;
        for case in &self.cases {
            for artifact in &case.artifacts {
                let path = dir.join(&artifact.path);
                if let Some(parent) = path.parent() {
                    std::fs::create_dir_all(parent)?;
                }
                std::fs::write(path, &artifact.contents)?;
            }
        }
        let report = dir.join(format!("{}.json", self.suite));
        std::fs::write(&report, self.to_json())?;
        Ok(report)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Applied to every single decision.
    pub budget: Budget,
    /// Largest order for exhaustive sweeps.
    pub max_n: usize,
    /// Number of random instances for sampled claims.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            budget: Budget::default(),
            max_n: 5,
            samples: 200,
        }
    }
}

/// Outcome of one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(String),
    Timeout(String),
}

/// Result of evaluating a claim, plus the bookkeeping for the degree-2
/// property on every PCF / odd witness the evaluation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eval {
    pub outcome: Outcome,
    pub witnesses: usize,
    pub degree2_violations: Vec<String>,
}

/// Solver access used inside claims; records witnesses as they appear.
pub struct Probe {
    budget: Budget,
    witnesses: usize,
    degree2_violations: Vec<String>,
}

impl Probe {
    pub fn new(budget: Budget) -> Self {
        Probe {
            budget,
            witnesses: 0,
            degree2_violations: Vec::new(),
        }
    }

    /// Counts a witness produced outside the solver.
    pub fn record(&mut self, g: &Graph, variant: Variant, c: &Coloring) {
        if variant == Variant::Proper {
            return;
        }
        self.witnesses += 1;
        let bad = degree_two_violations(g, c);
        if !bad.is_empty() {
            self.degree2_violations.push(format!(
                "{variant} witness {:?} on graph {:?}: degree-2 vertices {bad:?}",
                c.colors(),
                g.edges()
            ));
        }
    }

    /// `Ok(Some(c))` if SAT, `Ok(None)` if UNSAT, `Err(message)` on timeout.
    pub fn decide(&mut self, g: &Graph, k: usize, variant: Variant) -> Result<std::result::Result<Option<Coloring>, String>> {
        let res = decide_coloring(g, k, variant, self.budget)?;
        Ok(match res.status {
            Status::Sat => {
                let c = res.witness.expect("SAT carries a witness");
                self.record(g, variant, &c);
                Ok(Some(c))
            }
            Status::Unsat => Ok(None),
            Status::Timeout => Err(format!(
                "{variant} k={k} on a {}-vertex graph exhausted the budget",
                g.n()
            )),
        })
    }

    /// Chromatic number and an optimal witness, or a timeout message.
    pub fn chi(&mut self, g: &Graph, variant: Variant) -> Result<std::result::Result<(usize, Coloring), String>> {
        let start = if g.m() > 0 { 2 } else { 1 };
        for k in start..=g.n().max(1) {
            match self.decide(g, k, variant)? {
                Ok(Some(c)) => return Ok(Ok((k, c))),
                Ok(None) => {}
                Err(msg) => return Ok(Err(msg)),
            }
        }
        Err(crate::error::Error::Internal("all-distinct coloring was rejected".into()))
    }

    pub fn finish(self, outcome: Outcome) -> Eval {
        Eval {
            outcome,
            witnesses: self.witnesses,
            degree2_violations: self.degree2_violations,
        }
    }
}

/// Evaluates a claim over every graph (in parallel, order preserved) and folds
/// the results into one case. The first failing graph becomes the
/// counterexample artifact. Returns the case and the degree-2 tallies.
pub(crate) fn sweep<F>(
    suite: &str,
    id: &str,
    claim: &str,
    reference: &str,
    graphs: &[Graph],
    eval: F,
) -> Result<(Case, usize, Vec<String>)>
where
    F: Fn(&Graph) -> Result<Eval> + Sync,
{
    let results: Vec<Eval> = graphs.par_iter().map(&eval).collect::<Result<_>>()?;
    let mut witnesses = 0;
    let mut degree2 = Vec::new();
    let mut first_failure = None;
    let mut first_timeout = None;
    let mut timeouts = 0;
    for (g, r) in graphs.iter().zip(&results) {
        witnesses += r.witnesses;
        degree2.extend(r.degree2_violations.iter().cloned());
        match &r.outcome {
            Outcome::Holds => {}
            Outcome::Fails(msg) => {
                first_failure.get_or_insert((g, msg.clone()));
            }
            Outcome::Timeout(msg) => {
                timeouts += 1;
                first_timeout.get_or_insert(msg.clone());
            }
        }
    }
    let mut artifacts = Vec::new();
    let (verdict, detail) = if let Some((g, msg)) = first_failure {
        artifacts.push(Artifact {
            path: format!("{suite}/{id}/counterexample.txt"),
            contents: write_edge_list(g),
        });
        (Verdict::Refuted, format!("counterexample: {msg}"))
    } else if let Some(msg) = first_timeout {
        (
            Verdict::Timeout,
            format!("{timeouts} of {} instances timed out; first: {msg}", graphs.len()),
        )
    } else {
        (Verdict::Verified, format!("holds on all {} instances", graphs.len()))
    };
    Ok((
        Case {
            id: id.to_string(),
            claim: claim.to_string(),
            reference: reference.to_string(),
            verdict,
            detail,
            artifact_paths: Vec::new(),
            artifacts,
        },
        witnesses,
        degree2,
    ))
}

/// The case summarizing the degree-2 property over the witnesses of a suite.
pub(crate) fn degree_two_case(suite: &str, witnesses: usize, violations: &[String]) -> Case {
    let (verdict, detail, artifacts) = if violations.is_empty() {
        (
            Verdict::Verified,
            format!("{witnesses} pcf/odd witnesses checked, no violation"),
            Vec::new(),
        )
    } else {
        (
            Verdict::Refuted,
            format!("{} of {witnesses} witnesses violate it", violations.len()),
            vec![Artifact {
                path: format!("{suite}/degree-two/violations.txt"),
                contents: violations.join("\n"),
            }],
        )
    };
    Case {
        id: "degree-two-witnesses".into(),
        claim: "in every odd coloring the two neighbors of a degree-2 vertex have distinct colors".into(),
        reference: "degree-2 lemma".into(),
        verdict,
        detail,
        artifact_paths: Vec::new(),
        artifacts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_edge_list;

    fn false_claim(g: &Graph) -> Result<Eval> {
        let mut probe = Probe::new(Budget::default());
        let outcome = match probe.decide(g, 2, Variant::Pcf)? {
            Ok(Some(_)) => Outcome::Holds,
            Ok(None) => Outcome::Fails(format!("{:?} has no PCF 2-coloring", g.edges())),
            Err(msg) => Outcome::Timeout(msg),
        };
        Ok(probe.finish(outcome))
    }

    #[test]
    fn refuted_case_replays() {
        let graphs: Vec<Graph> = graphs::all_labeled_graphs(3).collect();
        let (case, witnesses, degree2) = sweep("t", "everything-pcf2", "every graph has a PCF 2-coloring", "none", &graphs, false_claim).unwrap();
        assert_eq!(case.verdict, Verdict::Refuted);
        assert!(witnesses > 0 && degree2.is_empty());
        let g = parse_edge_list(&case.artifacts[0].contents).unwrap();
        assert_eq!(g, graphs::all_labeled_graphs(3).nth(3).unwrap());
        assert!(matches!(false_claim(&g).unwrap().outcome, Outcome::Fails(_)));
    }

    #[test]
    fn timeouts_are_never_verdicts() {
        let graphs = vec![Graph::cycle(7)];
        let (case, _, _) = sweep("t", "tiny", "claim", "none", &graphs, |g| {
            let mut probe = Probe::new(Budget::nodes(2));
            let outcome = match probe.chi(g, Variant::Pcf)? {
                Ok(_) => Outcome::Holds,
                Err(msg) => Outcome::Timeout(msg),
            };
            Ok(probe.finish(outcome))
        })
        .unwrap();
        assert_eq!(case.verdict, Verdict::Timeout);
    }

    #[test]
    fn report_counts_and_paths() {
        let mut report = SuiteReport::new("t", &SuiteConfig::default());
        report.push(degree_two_case("t", 3, &["x".into()]));
        assert_eq!(report.summary.refuted, 1);
        assert_eq!(report.cases[0].artifact_paths, vec!["t/degree-two/violations.txt".to_string()]);
        let dir = tempfile::tempdir().unwrap();
        let path = report.write_to(dir.path()).unwrap();
        let back: SuiteReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(back.summary, report.summary);
        assert!(dir.path().join("t/degree-two/violations.txt").exists());
    }
}
