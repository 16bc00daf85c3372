//! Command-line interface: suite runner, catalog listing and export, the
//! regular-subclass classifier, and the commutator table printer.

use super::catalog::{Q_NAMES, CATALOG};
use super::suites::{run_suite, Status, Suite};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "liesym",
    about = "Verification harness for the Lie-symmetry calculus of u_t = f(u_x) u_xx + g(u)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or all of them)
    Verify {
        /// table1 | table2 | footnote | groups | algebras | solutions |
        /// furcate | properties | all
        suite: String,
        /// restrict to entries whose id contains this string
        #[arg(long)]
        entry: Option<String>,
        /// seed for randomized probes
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// worker threads
        #[arg(long, default_value_t = num_threads_default())]
        jobs: usize,
        /// write a JSON-lines report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Inspect the built-in catalog
    List {
        /// what to list (only `catalog` is available)
        what: String,
    },
    /// Run the furcate enumerator for the named subclass and diff it
    /// against the catalog (only `c` is available)
    Classify { subclass: String },
    /// Print the commutator table of the equivalence-algebra basis
    BracketTable,
    /// Export catalog data
    Dump {
        /// what to dump (only `catalog` is available)
        what: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn num_threads_default() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(failures) => {
            if failures == 0 {
                std::process::ExitCode::SUCCESS
            } else {
                std::process::ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<usize, String> {
    match cli.command {
        Command::Verify {
            suite,
            entry,
            seed,
            jobs,
            report,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::all().to_vec()
            } else {
                vec![Suite::from_name(&suite)
                    .ok_or_else(|| format!("unknown suite '{suite}'"))?]
            };
            let mut reports = Vec::new();
            for s in suites {
                reports.extend(run_suite(s, entry.as_deref(), seed, jobs));
            }
            super::print_reports(&reports);
            if let Some(path) = report {
                let file = std::fs::File::create(&path)
                    .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
                super::write_reports(std::io::BufWriter::new(file), &reports)
                    .map_err(|e| format!("cannot write report: {e}"))?;
                println!("report written to {}", path.display());
            }
            Ok(reports.iter().filter(|r| r.status == Status::Fail).count())
        }
        Command::List { what } => {
            if what != "catalog" {
                return Err(format!("unknown listing '{what}'"));
            }
            for e in &CATALOG.entries {
                let crossed = if e.crossed_out { " (crossed out)" } else { "" };
                println!("{}  [{} fields]{}", e.id, e.fields.len(), crossed);
            }
            println!("--- reductions ---");
            for r in &CATALOG.reductions {
                println!("{}  ode: {}", r.id, r.ode);
            }
            println!("--- additional equivalence maps ---");
            for edge in &CATALOG.edges {
                println!("{}: {} -> {}", edge.id, edge.from_id, edge.to_id);
            }
            Ok(0)
        }
        Command::Classify { subclass } => {
            if subclass != "c" {
                return Err(format!("only the regular subclass `c` is classified, got '{subclass}'"));
            }
            let cases = super::furcate::furcate_enumerate_c();
            for case in &cases {
                println!("{}", case.id());
                println!("    branch: {}", case.branch);
                if case.singular {
                    println!("    singular branch");
                }
            }
            let (missing, extra) = super::furcate::classify_diff();
            if missing.is_empty() && extra.is_empty() {
                println!("diff against the catalog: empty ({} cases)", cases.len());
                Ok(0)
            } else {
                println!("missing from enumeration: {missing:?}");
                println!("extraneous in enumeration: {extra:?}");
                Ok(missing.len() + extra.len())
            }
        }
        Command::BracketTable => {
            let q = super::catalog::q_basis();
            for i in 0..q.len() {
                for j in (i + 1)..q.len() {
                    let b = crate::symmetry::lie_bracket(&q[i], &q[j])
                        .map_err(|e| e.to_string())?;
                    if !b.is_zero() {
                        println!("[{}, {}] = {}", Q_NAMES[i], Q_NAMES[j], b);
                    }
                }
            }
            Ok(0)
        }
        Command::Dump { what, format } => {
            if what != "catalog" {
                return Err(format!("unknown dump target '{what}'"));
            }
            if format != "json" {
                return Err(format!("unknown format '{format}'"));
            }
            let dump = CatalogDump::build();
            let out = serde_json::to_string_pretty(&dump).expect("catalog serializes");
            let mut stdout = std::io::stdout();
            writeln!(stdout, "{out}").map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct CatalogDump {
    entries: Vec<EntryDump>,
    reductions: Vec<ReductionDump>,
    edges: Vec<EdgeDump>,
}

#[derive(Serialize)]
struct EntryDump {
    id: String,
    subclass: String,
    f: String,
    g: String,
    fields: Vec<[String; 3]>,
    side_relations: Vec<String>,
    crossed_out: bool,
    notes: String,
}

#[derive(Serialize)]
struct ReductionDump {
    id: String,
    pde: String,
    generator: [String; 3],
    ansatz: String,
    invariant: String,
    ode: String,
}

#[derive(Serialize)]
struct EdgeDump {
    id: String,
    from: String,
    to: String,
    t: String,
    x: String,
    u: String,
}

impl CatalogDump {
    fn build() -> CatalogDump {
        let c = &*CATALOG;
        CatalogDump {
            entries: c
                .entries
                .iter()
                .map(|e| EntryDump {
                    id: e.id.clone(),
                    subclass: format!("{:?}", e.subclass),
                    f: e.member.f.to_string(),
                    g: e.member.g.to_string(),
                    fields: e
                        .fields
                        .iter()
                        .map(|q| {
                            [
                                q.tau.to_string(),
                                q.xi.to_string(),
                                q.eta.to_string(),
                            ]
                        })
                        .collect(),
                    side_relations: e
                        .side_relations
                        .iter()
                        .map(|r| {
                            format!(
                                "d({},{})/dt -> {}",
                                r.head,
                                r.args.join(","),
                                r.rhs
                            )
                        })
                        .collect(),
                    crossed_out: e.crossed_out,
                    notes: e.notes.to_string(),
                })
                .collect(),
            reductions: c
                .reductions
                .iter()
                .map(|r| ReductionDump {
                    id: r.id.clone(),
                    pde: r.pde.to_string(),
                    generator: [
                        r.generator.tau.to_string(),
                        r.generator.xi.to_string(),
                        r.generator.eta.to_string(),
                    ],
                    ansatz: r.ansatz.to_string(),
                    invariant: r.invariant.to_string(),
                    ode: r.ode.to_string(),
                })
                .collect(),
            edges: c
                .edges
                .iter()
                .map(|e| EdgeDump {
                    id: e.id.clone(),
                    from: e.from_id.clone(),
                    to: e.to_id.clone(),
                    t: e.transformation.t.to_string(),
                    x: e.transformation.x.to_string(),
                    u: e.transformation.u.to_string(),
                })
                .collect(),
        }
    }
}
