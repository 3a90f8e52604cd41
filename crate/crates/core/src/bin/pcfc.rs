//! `pcfc`: checkers, solvers, gadget constructors, lifts and verification
//! suites for proper conflict-free and odd colorings.
//!
//! Exit status: 0 verified / SAT, 1 refuted / UNSAT, 2 timeout,
//! 64 usage error, 65 bad input data or violated precondition, 74 I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pcf_coloring::cnf::{encode_cnf, Cnf, DpllOutcome};
use pcf_coloring::coloring::check;
use pcf_coloring::harness::{
    default_reduction_instances, run_characterization_suite, run_lemma_suite, run_reduction_suite, SuiteConfig, SuiteReport,
};
use pcf_coloring::io::{parse_coloring, parse_edge_list, parse_rotation, to_dot, write_coloring, write_edge_list};
use pcf_coloring::reductions::{self, GadgetOutput, RoleMap};
use pcf_coloring::solver::{brute_force_oracle, chromatic_number, decide_coloring, Budget, Status};
use pcf_coloring::{Coloring, Error, Graph, PlaneGraph, Variant};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "pcfc", version, about = "Proper conflict-free and odd graph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring and print its certificate report.
    Check {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        coloring: PathBuf,
    },
    /// Decide whether a k-coloring of the given kind exists.
    Solve {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Use exhaustive enumeration instead of backtracking.
        #[arg(long)]
        oracle: bool,
        /// Write the witness coloring here when one is found.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute the chromatic number of the given kind.
    Chromatic {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Construct a gadget graph; writes the graph and `<out>.roles.json`.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        #[arg(short, long)]
        graph: Option<PathBuf>,
        /// Rotation system, for `tents`.
        #[arg(short, long)]
        rotation: Option<PathBuf>,
        /// Internal vertices per edge, for `sub1`.
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Gadget sizes, for `gnm`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Construct a gadget together with a lifted coloring; writes the graph,
    /// `<out>.roles.json` and `<out>.coloring.txt`.
    Lift {
        #[arg(value_enum)]
        kind: LiftKind,
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        coloring: PathBuf,
        #[arg(short, long)]
        rotation: Option<PathBuf>,
        /// Variant for `bip`.
        #[arg(long, value_enum, default_value_t = VariantArg::Pcf)]
        variant: VariantArg,
        /// Palette size for `greedy`.
        #[arg(short, default_value_t = 5)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run a verification suite and write its report and artifacts.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = "suite-reports")]
        out: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write the CNF encoding in DIMACS format with a variable map.
    EncodeCnf {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Solve a CNF written by `encode-cnf` with the bundled DPLL solver.
    SolveCnf {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        max_decisions: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a Graphviz DOT rendering.
    ExportDot {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Proper,
    Pcf,
    Odd,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Proper => Variant::Proper,
            VariantArg::Pcf => Variant::Pcf,
            VariantArg::Odd => Variant::Odd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    Sub1,
    Pendants,
    Apex,
    PendantsEven,
    TwoApex,
    Gnm,
    BipTilde,
    Tents,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftKind {
    Bip,
    Planar,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Characterization,
    Lemmas,
    Reductions,
}

/// Defaults come from `PCFC_BUDGET_NODES` / `PCFC_BUDGET_MS` when set.
#[derive(Args)]
struct BudgetArgs {
    /// Search node limit per decision; 0 means unlimited.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit per decision in milliseconds; 0 means unlimited.
    #[arg(long)]
    budget_ms: Option<u64>,
}

enum Failure {
    Usage(String),
    Data(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn env_u64(name: &str) -> CliResult<Option<u64>> {
    match std::env::var(name) {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{name} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

impl BudgetArgs {
    fn resolve(&self) -> CliResult<Budget> {
        let default = Budget::default();
        let pick = |flag: Option<u64>, var: &str, fallback: Option<u64>| -> CliResult<Option<u64>> {
            let v = match flag {
                Some(v) => Some(v),
                None => env_u64(var)?,
            };
            Ok(match v {
                Some(0) => None,
                Some(v) => Some(v),
                None => fallback,
            })
        };
        Ok(Budget {
            max_nodes: pick(self.budget_nodes, "PCFC_BUDGET_NODES", default.max_nodes)?,
            max_time_ms: pick(self.budget_ms, "PCFC_BUDGET_MS", default.max_time_ms)?,
        })
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, contents: &str) -> CliResult<()> {
    match out {
        Some(p) => write(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn with_context<T>(path: &Path, r: pcf_coloring::Result<T>) -> CliResult<T> {
    r.map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    with_context(path, parse_edge_list(&read(path)?))
}

fn load_coloring(path: &Path, g: &Graph) -> CliResult<Coloring> {
    with_context(path, parse_coloring(g.n(), &read(path)?))
}

fn load_plane(graph: &Path, rotation: Option<&PathBuf>) -> CliResult<PlaneGraph> {
    let g = load_graph(graph)?;
    let rotation = rotation.ok_or_else(|| Failure::Usage("a rotation file (-r) is required".into()))?;
    with_context(rotation, parse_rotation(&g, &read(rotation)?))
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    out.with_extension(suffix)
}

fn write_gadget(out: &Path, gadget: &GadgetOutput) -> CliResult<()> {
    write(out, &write_edge_list(&gadget.graph))?;
    write(&sibling(out, "roles.json"), &gadget.roles.to_json())?;
    if let Some(c) = &gadget.coloring {
        write(&sibling(out, "coloring.txt"), &write_coloring(c))?;
    }
    println!(
        "{}",
        json!({ "graph": out, "n": gadget.graph.n(), "m": gadget.graph.m() })
    );
    Ok(())
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Sat => 0,
        Status::Unsat => 1,
        Status::Timeout => 2,
    }
}

fn suite_code(report: &SuiteReport) -> u8 {
    if report.summary.refuted > 0 {
        1
    } else if report.summary.timeout > 0 {
        2
    } else {
        0
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Check { variant, graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let report = check(&g, &c, variant.into())?;
            println!("{}", report.to_json());
            Ok(if report.verdict { 0 } else { 1 })
        }
        Command::Solve {
            variant,
            k,
            graph,
            budget,
            oracle,
            out,
        } => {
            let g = load_graph(&graph)?;
            let res = if oracle {
                brute_force_oracle(&g, k, variant.into())?
            } else {
                decide_coloring(&g, k, variant.into(), budget.resolve()?)?
            };
            println!("{}", res.to_json());
            if let (Some(path), Some(c)) = (&out, &res.witness) {
                write(path, &write_coloring(c))?;
            }
            Ok(status_code(res.status))
        }
        Command::Chromatic { variant, graph, budget } => {
            let g = load_graph(&graph)?;
            let variant: Variant = variant.into();
            match chromatic_number(&g, variant, budget.resolve()?)? {
                Ok(value) => {
                    println!("{}", json!({ "variant": variant, "value": value }));
                    Ok(0)
                }
                Err(bracket) => {
                    println!("{}", json!({ "variant": variant, "status": "TIMEOUT", "bracket": bracket }));
                    Ok(2)
                }
            }
        }
        Command::Build {
            kind,
            graph,
            rotation,
            k,
            n,
            m,
            out,
        } => {
            let need_graph = || -> CliResult<Graph> {
                let path = graph
                    .as_ref()
                    .ok_or_else(|| Failure::Usage("an input graph (-g) is required".into()))?;
                load_graph(path)
            };
            let gadget = match kind {
                BuildKind::Sub1 => reductions::subdivide(&need_graph()?, k),
                BuildKind::Pendants => reductions::add_pendants_all(&need_graph()?),
                BuildKind::Apex => reductions::add_universal_vertex(&need_graph()?),
                BuildKind::PendantsEven => reductions::add_pendants_even_degree(&need_graph()?),
                BuildKind::TwoApex => reductions::add_two_universal(&need_graph()?),
                BuildKind::Gnm => {
                    let (Some(n), Some(m)) = (n, m) else {
                        return Err(Failure::Usage("gnm needs --n and --m".into()));
                    };
                    reductions::build_gadget_gnm(n, m)?
                }
                BuildKind::BipTilde => reductions::build_bipartite_tilde(&need_graph()?)?,
                BuildKind::Tents => {
                    let path = graph
                        .as_ref()
                        .ok_or_else(|| Failure::Usage("an input graph (-g) is required".into()))?;
                    reductions::attach_tents(&load_plane(path, rotation.as_ref())?)?
                }
            };
            write_gadget(&out, &gadget)?;
            Ok(0)
        }
        Command::Lift {
            kind,
            graph,
            coloring,
            rotation,
            variant,
            k,
            out,
        } => {
            let gadget = match kind {
                LiftKind::Bip => {
                    let g = load_graph(&graph)?;
                    let c = load_coloring(&coloring, &g)?;
                    reductions::lift_bipartite(&g, &c, variant.into())?
                }
                LiftKind::Planar => {
                    let pg = load_plane(&graph, rotation.as_ref())?;
                    let c = load_coloring(&coloring, pg.graph())?;
                    reductions::lift_planar(&pg, &c)?
                }
                LiftKind::Greedy => {
                    let g = load_graph(&graph)?;
                    let c = load_coloring(&coloring, &g)?;
                    reductions::greedy_extend_subdivision(&g, &c, k)?
                }
            };
            write_gadget(&out, &gadget)?;
            Ok(0)
        }
        Command::Suite {
            name,
            seed,
            jobs,
            out,
            max_n,
            samples,
            budget,
        } => {
            let config = SuiteConfig {
                seed,
                budget: budget.resolve()?,
                max_n,
                samples,
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j);
            }
            let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
            let report = pool.install(|| match name {
                SuiteName::Characterization => run_characterization_suite(&config),
                SuiteName::Lemmas => run_lemma_suite(&config),
                SuiteName::Reductions => run_reduction_suite(&config, &default_reduction_instances()),
            })?;
            let path = report
                .write_to(&out)
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            println!("{}", json!({ "report": path, "summary": report.summary }));
            Ok(suite_code(&report))
        }
        Command::EncodeCnf { variant, k, graph, out } => {
            let g = load_graph(&graph)?;
            emit(out.as_deref(), &encode_cnf(&g, k, variant.into())?.to_dimacs())?;
            Ok(0)
        }
        Command::SolveCnf { cnf, max_decisions, out } => {
            let formula = with_context(&cnf, Cnf::from_dimacs(&read(&cnf)?))?;
            let (status, witness) = match formula.solve(max_decisions) {
                DpllOutcome::Sat(model) => (Status::Sat, Some(formula.decode(&model)?)),
                DpllOutcome::Unsat => (Status::Unsat, None),
                DpllOutcome::Unknown => (Status::Timeout, None),
            };
            println!("{}", json!({ "status": status, "witness": witness }));
            if let (Some(path), Some(c)) = (&out, &witness) {
                write(path, &write_coloring(c))?;
            }
            Ok(status_code(status))
        }
        Command::ExportDot {
            graph,
            coloring,
            roles,
            out,
        } => {
            let g = load_graph(&graph)?;
            let c = coloring.as_ref().map(|p| load_coloring(p, &g)).transpose()?;
            let roles = match &roles {
                Some(p) => Some(with_context(p, RoleMap::from_json(&read(p)?))?),
                None => None,
            };
            if let Some(r) = &roles {
                if r.len() != g.n() {
                    return Err(Failure::Data(format!("role map has {} entries for {} vertices", r.len(), g.n())));
                }
            }
            emit(out.as_deref(), &to_dot(&g, c.as_ref(), roles.as_ref().map(|r| r.labels())))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("pcfc: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("pcfc: {msg}");
            ExitCode::from(EXIT_DATA)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("pcfc: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
