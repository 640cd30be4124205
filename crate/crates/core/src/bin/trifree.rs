use std::collections::BTreeSet;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use trifree::config::{find_all, Kind};
use trifree::corpus::{self, CorpusSpec, Mode, DEFAULT_SEED};
use trifree::discharge::{apply_rules, audit, dangerous_cycles};
use trifree::extremal::{generate_member_seeded, is_member, member_max_independent_set};
use trifree::plane::{parse, serialize};
use trifree::solver::{exact_alpha, solve};
use trifree::{PlaneGraph, Vertex};

#[derive(Parser)]
#[command(name = "trifree", version, about = "Independent sets in planar triangle-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the reduction solver and compare with its guarantee
    Solve {
        file: PathBuf,
        /// Print the reduction log
        #[arg(long)]
        trace: bool,
    },
    /// Exact independence number with a witness
    Oracle { file: PathBuf },
    /// Decide membership in the extremal family and print the certificate
    Member {
        file: PathBuf,
        /// Also print a maximum independent set built from the certificate
        #[arg(long)]
        set: bool,
    },
    /// Build an extremal member by random path-diamond replacements
    GenExtremal {
        #[arg(long)]
        steps: usize,
        #[arg(long, env = "TRIFREE_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Random plane triangle-free graphs grown from a 4-cycle
    GenRandom {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, env = "TRIFREE_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write one file per graph here instead of printing
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All connected plane triangle-free graphs with at most N vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print counts per vertex number only
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every configuration instance
    FindConfigs {
        file: PathBuf,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Charges and rules; the file must carry an `outer:` line
    Discharge {
        file: PathBuf,
        /// Print every transfer
        #[arg(long)]
        ledger: bool,
        /// Check the final-charge claims and look for a free configuration
        #[arg(long)]
        audit: bool,
    },
    /// Dangerous cycles with respect to the outer face
    Dangerous { file: PathBuf },
    /// Parse and check graph files (several may be separated by `---`)
    Validate { file: PathBuf },
    /// Run the checks over a corpus
    Suite {
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, env = "TRIFREE_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Line-delimited JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Violation(String),
}

fn input(e: impl Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<PlaneGraph, Failure> {
    parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn set_line(s: &BTreeSet<Vertex>) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(graphs: &[PlaneGraph], out: Option<&Path>, prefix: &str) -> Result<(), Failure> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(input)?;
            for (i, g) in graphs.iter().enumerate() {
                let path = dir.join(format!("{prefix}{i:05}.graph"));
                std::fs::write(&path, serialize(g)).map_err(input)?;
            }
            println!("wrote {} graphs to {}", graphs.len(), dir.display());
        }
        None => {
            for (i, g) in graphs.iter().enumerate() {
                if i > 0 {
                    println!("---");
                }
                print!("{}", serialize(g));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { file, trace } => {
            let g = load(&file)?;
            let r = solve(&g).map_err(input)?;
            if trace {
                for step in &r.trace {
                    println!("{step}");
                }
            }
            println!("set: {}", set_line(&r.independent_set));
            println!("size: {}", r.size());
            println!("guarantee: {}", r.guarantee);
            println!("met: {}", r.met);
            if !r.met {
                return Err(Failure::Violation(format!(
                    "found {} vertices, guarantee {}",
                    r.size(),
                    r.guarantee
                )));
            }
        }
        Command::Oracle { file } => {
            let g = load(&file)?;
            let (alpha, set) = exact_alpha(&g).map_err(input)?;
            println!("alpha: {alpha}");
            println!("witness: {}", set_line(&set));
        }
        Command::Member { file, set } => {
            let g = load(&file)?;
            let trace = is_member(&g);
            print!("{trace}");
            if set && trace.is_member() {
                let s = member_max_independent_set(&g, &trace).map_err(|e| Failure::Violation(e.to_string()))?;
                println!("set: {}", set_line(&s));
            }
        }
        Command::GenExtremal { steps, seed } => {
            print!("{}", serialize(&generate_member_seeded(steps, seed)));
        }
        Command::GenRandom { n, count, seed, out } => {
            let spec = CorpusSpec {
                mode: Mode::Random,
                n_max: n,
                seed,
                count,
            };
            emit(&corpus::gen_random(&spec), out.as_deref(), "random")?;
        }
        Command::Enumerate { n, count_only, out } => {
            if count_only {
                for (i, c) in corpus::enumeration_counts(n).map_err(input)?.iter().enumerate() {
                    println!("n={} graphs={c}", i + 1);
                }
            } else {
                emit(&corpus::enumerate_small(n).map_err(input)?, out.as_deref(), "enum")?;
            }
        }
        Command::FindConfigs { file, kind } => {
            let g = load(&file)?;
            let kind: Option<Kind> = match kind.as_deref() {
                None => None,
                Some(k) => Some(k.parse().map_err(input)?),
            };
            for c in find_all(&g) {
                if kind.is_none_or(|k| c.kind() == k) {
                    println!("{c}");
                }
            }
        }
        Command::Discharge {
            file,
            ledger,
            audit: check,
        } => {
            let g = load(&file)?;
            let l = apply_rules(&g).map_err(input)?;
            println!("initial sum: {}", l.total_initial());
            println!("final sum: {}", l.total_final());
            for (e, c) in &l.final_charges {
                println!("{e} {c}");
            }
            if ledger {
                for t in &l.transfers {
                    println!("{t}");
                }
            }
            if check {
                let r = audit(&g);
                if let Some(h) = &r.rejected {
                    println!("rejected: {h}");
                } else {
                    for v in &r.violations {
                        let near = v.nearby.as_ref().map_or("none".to_string(), |c| c.to_string());
                        println!("below bound: {} {} < {} near {near}", v.element, v.charge, v.bound);
                    }
                    match &r.witness {
                        Some(c) => println!("free configuration: {c}"),
                        None => println!("free configuration: none"),
                    }
                    if !r.confirmed() {
                        return Err(Failure::Violation("no configuration avoids the outer face".into()));
                    }
                }
            }
        }
        Command::Dangerous { file } => {
            let g = load(&file)?;
            let found = dangerous_cycles(&g).map_err(input)?;
            for d in &found {
                println!("{}: {}", set_line(&d.cycle.iter().copied().collect()), d.reason);
            }
            println!("dangerous cycles: {}", found.len());
        }
        Command::Validate { file } => {
            let text = read(&file)?;
            let mut bad = 0;
            for (i, chunk) in text.split("\n---").enumerate() {
                let g = parse(chunk).map_err(|e| Failure::Input(format!("graph {}: {e}", i + 1)))?;
                let tf = g.is_triangle_free();
                println!(
                    "graph {}: n={} m={} faces={} connected={} triangle-free={tf}",
                    i + 1,
                    g.vertex_count(),
                    g.edge_count(),
                    g.faces().len(),
                    g.is_connected()
                );
                if !tf {
                    bad += 1;
                }
            }
            if bad > 0 {
                return Err(Failure::Violation(format!("{bad} graphs contain triangles")));
            }
        }
        Command::Suite {
            mode,
            n_max,
            count,
            seed,
            json,
        } => {
            let spec = CorpusSpec {
                mode: mode.parse().map_err(input)?,
                n_max,
                seed,
                count,
            };
            let report = corpus::run_suite(&spec).map_err(input)?;
            if json {
                print!("{}", report.to_json_lines());
            } else {
                print!("{report}");
            }
            if report.violation_count() > 0 {
                return Err(Failure::Violation(format!("{} violations", report.violation_count())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
