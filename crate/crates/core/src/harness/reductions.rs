use rayon::prelude::*;

use super::{degree_two_case, Artifact, Case, Probe, SuiteConfig, SuiteReport, Verdict};
use crate::cnf::encode_cnf;
use crate::coloring::{check, Coloring, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{write_coloring, write_edge_list};
use crate::plane::PlaneGraph;
use crate::reductions::{attach_tents, build_bipartite_tilde, lift_bipartite, lift_planar, tilde_sides, GadgetOutput};
use crate::solver::{brute_force_oracle, enumerate_colorings, Status};

const SUITE: &str = "reductions";

/// Colorings of `G~` examined per instance for the reverse direction.
const REVERSE_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionInstance {
    /// Bipartite reduction, checked for the PCF and odd variants.
    Bipartite { name: String, graph: Graph },
    /// Tent reduction on a plane graph, PCF only.
    Planar { name: String, plane: PlaneGraph },
}

impl ReductionInstance {
    pub fn name(&self) -> &str {
        match self {
            ReductionInstance::Bipartite { name, .. } | ReductionInstance::Planar { name, .. } => name,
        }
    }

    fn graph(&self) -> &Graph {
        match self {
            ReductionInstance::Bipartite { graph, .. } => graph,
            ReductionInstance::Planar { plane, .. } => plane.graph(),
        }
    }

    fn variants(&self) -> &'static [Variant] {
        match self {
            ReductionInstance::Bipartite { .. } => &[Variant::Pcf, Variant::Odd],
            ReductionInstance::Planar { .. } => &[Variant::Pcf],
        }
    }

    fn tilde(&self) -> Result<GadgetOutput> {
        match self {
            ReductionInstance::Bipartite { graph, .. } => build_bipartite_tilde(graph),
            ReductionInstance::Planar { plane, .. } => attach_tents(plane),
        }
    }

    fn lift(&self, c: &Coloring, variant: Variant) -> Result<GadgetOutput> {
        match self {
            ReductionInstance::Bipartite { graph, .. } => lift_bipartite(graph, c, variant),
            ReductionInstance::Planar { plane, .. } => lift_planar(plane, c),
        }
    }

    /// Expected vertex and edge counts of `G~` from the closed forms.
    fn expected_counts(&self) -> Result<(usize, usize)> {
        let g = self.graph();
        match self {
            ReductionInstance::Bipartite { graph, .. } => {
                if graph.n() <= 3 {
                    return Ok((g.n(), g.m()));
                }
                let sides = tilde_sides(graph)?;
                let (a, b) = (sides.side_a.len(), sides.side_b.len());
                let (gn, gm) = (2 * a + 2 * b + 6, 6 * a + 6 * b + 6);
                Ok((g.n() + gn + gm, g.m() + 2 * gm + 2 * a + 2 * b + 3))
            }
            ReductionInstance::Planar { plane, .. } => {
                let faces = plane.trace_faces()?;
                let n = g.n() + faces.iter().map(|f| 8 * f.len() + 6).sum::<usize>();
                let m = g.m() + faces.iter().map(|f| 14 * f.len() + 9).sum::<usize>();
                Ok((n, m))
            }
        }
    }
}

/// Bipartite `P4`, `C6`, `K_{1,3}`, `C4` and planar `C3`, `C4`, `C6`.
pub fn default_reduction_instances() -> Vec<ReductionInstance> {
    let bip = |name: &str, graph: Graph| ReductionInstance::Bipartite {
        name: name.into(),
        graph,
    };
    let planar = |name: &str, n: usize| ReductionInstance::Planar {
        name: name.into(),
        plane: PlaneGraph::with_sorted_rotation(Graph::cycle(n)).expect("cycles embed"),
    };
    vec![
        bip("bip-p4", Graph::path(4)),
        bip("bip-c6", Graph::cycle(6)),
        bip("bip-k13", Graph::star(3)),
        bip("bip-c4", Graph::cycle(4)),
        planar("tents-c3", 3),
        planar("tents-c4", 4),
        planar("tents-c6", 6),
    ]
}

fn case(id: String, claim: String, reference: &str, verdict: Verdict, detail: String, artifacts: Vec<Artifact>) -> Case {
    Case {
        id,
        claim,
        reference: reference.into(),
        verdict,
        detail,
        artifact_paths: Vec::new(),
        artifacts,
    }
}

fn reference(inst: &ReductionInstance) -> &'static str {
    match inst {
        ReductionInstance::Bipartite { .. } => "bipartite 3-to-4 reduction",
        ReductionInstance::Planar { .. } => "planar tent reduction",
    }
}

struct InstanceRun {
    cases: Vec<Case>,
    probe: Probe,
}

fn run_instance(inst: &ReductionInstance, config: &SuiteConfig) -> Result<InstanceRun> {
    let name = inst.name();
    let g = inst.graph();
    let r = reference(inst);
    let mut probe = Probe::new(config.budget);
    let mut cases = Vec::new();

    let tilde = inst.tilde()?;
    let expected = inst.expected_counts()?;
    let got = (tilde.graph.n(), tilde.graph.m());
    let bipartite_ok = match inst {
        ReductionInstance::Bipartite { .. } => tilde.graph.is_bipartite(),
        ReductionInstance::Planar { .. } => true,
    };
    let ok = got == expected && bipartite_ok;
    cases.push(case(
        format!("{name}-structure"),
        "G~ has the vertex and edge counts given by the construction".into(),
        r,
        if ok { Verdict::Verified } else { Verdict::Refuted },
        format!("expected (n, m) = {expected:?}, built {got:?}, bipartite where required: {bipartite_ok}"),
        if ok {
            Vec::new()
        } else {
            vec![Artifact {
                path: format!("{SUITE}/{name}/tilde.txt"),
                contents: write_edge_list(&tilde.graph),
            }]
        },
    ));

    for &variant in inst.variants() {
        let prefix = format!("{name}-{variant}");
        let three = probe.decide(g, 3, variant)?;

        // satisfiable direction
        let (verdict, detail, artifacts) = match &three {
            Err(msg) => (Verdict::Timeout, msg.clone(), Vec::new()),
            Ok(None) => (Verdict::Verified, format!("G has no {variant} 3-coloring; nothing to lift"), Vec::new()),
            Ok(Some(c)) => match inst.lift(c, variant) {
                Ok(out) => {
                    let lifted = out.coloring.expect("lifts attach a coloring");
                    probe.record(&out.graph, variant, &lifted);
                    let valid = check(&out.graph, &lifted, variant)?.verdict && lifted.k() <= 4;
                    (
                        if valid { Verdict::Verified } else { Verdict::Refuted },
                        format!("lifted {:?} to a {}-vertex graph; checker verdict {valid}", c.colors(), out.graph.n()),
                        vec![Artifact {
                            path: format!("{SUITE}/{prefix}/lift.txt"),
                            contents: write_coloring(&lifted),
                        }],
                    )
                }
                Err(e) => (
                    Verdict::Refuted,
                    format!("lift of {:?} failed: {e}", c.colors()),
                    vec![Artifact {
                        path: format!("{SUITE}/{prefix}/input.txt"),
                        contents: write_coloring(c),
                    }],
                ),
            },
        };
        cases.push(case(
            format!("{prefix}-sat-direction"),
            format!("a {variant} 3-coloring of G lifts to a {variant} 4-coloring of G~"),
            r,
            verdict,
            detail,
            artifacts,
        ));

        // reverse direction
        let originals: Vec<usize> = g.vertices().collect();
        let found = enumerate_colorings(&tilde.graph, 4, variant, config.budget, REVERSE_LIMIT)?;
        let mut bad = None;
        for c in &found.colorings {
            probe.record(&tilde.graph, variant, c);
            let restricted = c.restrict(&originals)?;
            let valid = check(g, &restricted, variant)?.verdict && restricted.num_colors_used() <= 3;
            if !valid && bad.is_none() {
                bad = Some(c.clone());
            }
        }
        let claim = format!("every {variant} 4-coloring of G~ restricts to a {variant} coloring of G with at most 3 colors");
        let count = found.colorings.len();
        let (verdict, detail, artifacts) = if let Some(c) = bad {
            (
                Verdict::Refuted,
                "restriction of a 4-coloring of G~ is invalid or uses 4 colors".to_string(),
                vec![
                    Artifact {
                        path: format!("{SUITE}/{prefix}/reverse-tilde.txt"),
                        contents: write_edge_list(&tilde.graph),
                    },
                    Artifact {
                        path: format!("{SUITE}/{prefix}/reverse-coloring.txt"),
                        contents: write_coloring(&c),
                    },
                ],
            )
        } else if count == 0 && !found.complete {
            (
                Verdict::Timeout,
                format!("no 4-coloring of the {}-vertex G~ found before the budget ran out", tilde.graph.n()),
                Vec::new(),
            )
        } else {
            let scope = if found.complete {
                "all colorings up to renaming"
            } else {
                "a bounded sample"
            };
            (Verdict::Verified, format!("{count} colorings checked ({scope})"), Vec::new())
        };
        cases.push(case(format!("{prefix}-reverse-direction"), claim, r, verdict, detail, artifacts));

        // unsatisfiable direction, only meaningful when G needs 4 colors
        if let Ok(None) = three {
            let oracle = brute_force_oracle(g, 3, variant)?;
            let cnf = encode_cnf(&tilde.graph, 4, variant)?;
            let mut artifacts = vec![Artifact {
                path: format!("{SUITE}/{prefix}/tilde-k4.cnf"),
                contents: cnf.to_dimacs(),
            }];
            let claim = format!("G has no {variant} 3-coloring, so G~ has no {variant} 4-coloring");
            let (verdict, detail) = if oracle.status != Status::Unsat {
                (
                    Verdict::Refuted,
                    "solver and oracle disagree on the 3-colorability of G".to_string(),
                )
            } else {
                let res = probe.decide(&tilde.graph, 4, variant)?;
                match res {
                    Ok(None) => (
                        Verdict::Verified,
                        format!(
                            "oracle rejects all {} 3-colorings of G; solver proves G~ has no 4-coloring",
                            oracle.stats.nodes
                        ),
                    ),
                    Ok(Some(c)) => {
                        artifacts.push(Artifact {
                            path: format!("{SUITE}/{prefix}/tilde-coloring.txt"),
                            contents: write_coloring(&c),
                        });
                        (Verdict::Refuted, "G~ has a 4-coloring although G has no 3-coloring".to_string())
                    }
                    Err(msg) => (
                        Verdict::Timeout,
                        format!(
                            "oracle rejects all {} 3-colorings of G; {msg}; CNF emitted for an external solver",
                            oracle.stats.nodes
                        ),
                    ),
                }
            };
            cases.push(case(format!("{prefix}-unsat-direction"), claim, r, verdict, detail, artifacts));
        }
    }
    Ok(InstanceRun { cases, probe })
}

/// Runs the satisfiable, reverse and (where `G` needs more than 3 colors)
/// unsatisfiable directions of both reductions, plus structural counts.
pub fn run_reduction_suite(config: &SuiteConfig, instances: &[ReductionInstance]) -> Result<SuiteReport> {
    let mut names: Vec<&str> = instances.iter().map(|i| i.name()).collect();
    names.sort_unstable();
    if names.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("instance names must be distinct".into()));
    }
    let runs: Vec<InstanceRun> = instances
        .par_iter()
        .map(|inst| run_instance(inst, config))
        .collect::<Result<_>>()?;
    let mut report = SuiteReport::new(SUITE, config);
    let mut witnesses = 0;
    let mut degree2 = Vec::new();
    for run in runs {
        let eval = run.probe.finish(super::Outcome::Holds);
        witnesses += eval.witnesses;
        degree2.extend(eval.degree2_violations);
        for c in run.cases {
            report.push(c);
        }
    }
    report.push(degree_two_case(SUITE, witnesses, &degree2));
    Ok(report)
}
