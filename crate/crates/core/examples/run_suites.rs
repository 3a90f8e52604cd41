//! Runs the three verification suites and writes their reports.
//!
//! `cargo run --release --example run_suites -- [out-dir] [seed]`

use std::path::PathBuf;

use pcf_coloring::harness::{
    default_reduction_instances, run_characterization_suite, run_lemma_suite, run_reduction_suite, SuiteConfig, SuiteReport,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "suite-reports".into()));
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    let config = SuiteConfig {
        seed,
        ..SuiteConfig::default()
    };
    let reports: Vec<SuiteReport> = vec![
        run_characterization_suite(&config)?,
        run_lemma_suite(&config)?,
        run_reduction_suite(&config, &default_reduction_instances())?,
    ];
    for report in &reports {
        let path = report.write_to(&out)?;
        let s = report.summary;
        println!(
            "{:<16} verified {:>3}  refuted {:>3}  timeout {:>3}  -> {}",
            report.suite,
            s.verified,
            s.refuted,
            s.timeout,
            path.display()
        );
        for case in report.cases.iter().filter(|c| c.verdict != pcf_coloring::harness::Verdict::Verified) {
            println!("  {:?} {}: {}", case.verdict, case.id, case.detail);
        }
    }
    Ok(())
}
