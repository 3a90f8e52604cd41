use super::graphs::all_labeled_graphs;
use super::{degree_two_case, sweep, Outcome, Probe, SuiteConfig, SuiteReport};
use crate::coloring::Variant;
use crate::error::{Error, Result};
use crate::graph::Graph;

const SUITE: &str = "characterization";

/// Compares solver verdicts for "2 colors suffice" against the two structural
/// characterizations on every labeled graph with at most `config.max_n`
/// vertices.
pub fn run_characterization_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_n > 5 {
        return Err(Error::Precondition(format!(
            "exhaustive sweep is limited to n <= 5, got {}",
            config.max_n
        )));
    }
    let graphs: Vec<Graph> = (1..=config.max_n).flat_map(all_labeled_graphs).collect();
    let mut report = SuiteReport::new(SUITE, config);
    let mut witnesses = 0;
    let mut degree2 = Vec::new();

    type Claim = (&'static str, &'static str, &'static str, Variant, fn(&Graph) -> bool);
    let claims: [Claim; 2] = [
        (
            "pcf-two-iff-max-degree-one",
            "a graph has a PCF 2-coloring iff its maximum degree is at most 1",
            "PCF 2-colorability characterization",
            Variant::Pcf,
            |g| g.max_degree() <= 1,
        ),
        (
            "odd-two-iff-bipartite-odd-degrees",
            "a graph has an odd 2-coloring iff it is bipartite and every degree is odd or zero",
            "odd 2-colorability characterization",
            Variant::Odd,
            |g| g.is_bipartite() && g.vertices().all(|v| g.degree(v) % 2 == 1 || g.degree(v) == 0),
        ),
    ];
    for (id, claim, reference, variant, predicate) in claims {
        let (case, w, d) = sweep(SUITE, id, claim, reference, &graphs, |g| {
            let mut probe = Probe::new(config.budget);
            let outcome = match probe.decide(g, 2, variant)? {
                Err(msg) => Outcome::Timeout(msg),
                Ok(found) if found.is_some() == predicate(g) => Outcome::Holds,
                Ok(found) => Outcome::Fails(format!(
                    "solver says {} but the structural test says {}",
                    found.is_some(),
                    predicate(g)
                )),
            };
            Ok(probe.finish(outcome))
        })?;
        witnesses += w;
        degree2.extend(d);
        report.push(case);
    }
    report.push(degree_two_case(SUITE, witnesses, &degree2));
    Ok(report)
}

