//! `mpl` — typecheck, evaluate and compare message-passing processes.

use clap::{Parser, Subcommand};
use mpl_core::circuit::{emit_dot, to_circuit};
use mpl_core::combinators::coherence_suite;
use mpl_core::msg::FuelExhausted;
use mpl_core::pmsg::{
    check_proc, eliminate_cuts, normalize_proc_fuel, proc_eq, Equivalence, Judgement, Proc,
};
use mpl_core::surface::{elaborate, parse, pretty_proc, Module};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "mpl",
    about = "A two-tier calculus of message passing: sequent checking, cut elimination, equivalence",
    version
)]
struct Cli {
    /// Step budget for rewriting (also read from MPL_FUEL).
    #[arg(long, global = true)]
    fuel: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Typecheck every process definition in a module.
    Check { file: PathBuf },
    /// Run a process: eliminate cuts and print the result.
    Run {
        file: PathBuf,
        #[arg(long)]
        proc: String,
        /// Print one line per rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Normalise a process up to the term equations.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        proc: String,
    },
    /// Decide equivalence of two definitions.
    Eq {
        file: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Run the coherence suite; nonzero exit on any non-equal verdict.
    Coherence {
        /// Restrict to one equation (e.g. `19` or `19.1`).
        #[arg(long)]
        only: Option<String>,
        /// One machine-readable line per case.
        #[arg(long)]
        machine: bool,
    },
    /// Export a checked process as a circuit in graph description format.
    Net {
        file: PathBuf,
        #[arg(long)]
        proc: String,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn fuel_of(cli: &Cli) -> u64 {
    cli.fuel
        .or_else(|| {
            std::env::var("MPL_FUEL")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_FUEL)
}

fn load(path: &Path) -> Result<Module, String> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    let module = parse(&src).map_err(|e| format!("{}: {}", path.display(), e))?;
    elaborate(&module).map_err(|e| format!("{}: {}", path.display(), e))
}

fn find<'m>(m: &'m Module, name: &str) -> Result<(&'m Judgement, &'m Proc), String> {
    m.defs
        .iter()
        .find(|d| d.name == name)
        .map(|d| (&d.judgement, &d.proc))
        .ok_or_else(|| format!("no process named `{}`", name))
}

/// Exit 1: syntax or type errors. Exit 2: undecided (fuel or unknown).
fn main() -> ExitCode {
    let cli = Cli::parse();
    let fuel = fuel_of(&cli);
    match run(&cli, fuel) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, fuel: u64) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Check { file } => {
            let m = load(file)?;
            if m.defs.is_empty() {
                return Err("module defines no processes".to_string());
            }
            for def in &m.defs {
                let judgement = check_proc(&m.sigs, &def.judgement, &def.proc)
                    .map_err(|e| format!("{}: {}", def.name, e))?;
                println!("{} :: {}", def.name, judgement);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { file, proc, trace } => {
            let m = load(file)?;
            let (judgement, p) = find(&m, proc)?;
            check_proc(&m.sigs, judgement, p).map_err(|e| format!("{}: {}", proc, e))?;
            match eliminate_cuts(p, fuel) {
                Ok((normal, steps)) => {
                    if *trace {
                        print!("{}", steps);
                    }
                    println!("{}", pretty_proc(&normal));
                    if stuck_on_prim(&normal) {
                        println!("-- awaiting primitive");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err((FuelExhausted { steps_taken }, steps)) => {
                    if *trace {
                        print!("{}", steps);
                    }
                    eprintln!("fuel exhausted after {} steps", steps_taken);
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Normalize { file, proc } => {
            let m = load(file)?;
            let (judgement, p) = find(&m, proc)?;
            check_proc(&m.sigs, judgement, p).map_err(|e| format!("{}: {}", proc, e))?;
            match normalize_proc_fuel(p, fuel) {
                Ok(normal) => {
                    println!("{}", pretty_proc(&normal));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{}", e);
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Eq { file, lhs, rhs } => {
            let m = load(file)?;
            let (lj, lp) = find(&m, lhs)?;
            let (rj, rp) = find(&m, rhs)?;
            check_proc(&m.sigs, lj, lp).map_err(|e| format!("{}: {}", lhs, e))?;
            check_proc(&m.sigs, rj, rp).map_err(|e| format!("{}: {}", rhs, e))?;
            if lj != rj {
                println!("not-equal (judgements differ)");
                return Ok(ExitCode::SUCCESS);
            }
            match proc_eq(lp, rp) {
                Equivalence::Equal => {
                    println!("equal");
                    Ok(ExitCode::SUCCESS)
                }
                Equivalence::NotEqual => {
                    println!("not-equal");
                    Ok(ExitCode::SUCCESS)
                }
                Equivalence::Unknown(d) => {
                    println!("unknown (searched to depth {})", d);
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Coherence { only, machine } => {
            let report = coherence_suite(only.as_deref());
            if report.entries.is_empty() {
                return Err(format!(
                    "no coherence case matches `{}`",
                    only.clone().unwrap_or_default()
                ));
            }
            if *machine {
                print!("{}", report.machine_lines());
            } else {
                print!("{}", report);
            }
            if report.all_equal() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Net { file, proc, output } => {
            let m = load(file)?;
            let (judgement, p) = find(&m, proc)?;
            let graph =
                to_circuit(&m.sigs, judgement, p).map_err(|e| format!("{}: {}", proc, e))?;
            let dot = emit_dot(&graph);
            match output {
                Some(path) => std::fs::write(path, dot)
                    .map_err(|e| format!("{}: {}", path.display(), e))?,
                None => print!("{}", dot),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn stuck_on_prim(p: &Proc) -> bool {
    match p {
        Proc::Cut { left, right, .. } => {
            matches!(**left, Proc::Prim { .. })
                || matches!(**right, Proc::Prim { .. })
                || stuck_on_prim(left)
                || stuck_on_prim(right)
        }
        Proc::Split { body, .. }
        | Proc::Close { body, .. }
        | Proc::Get { body, .. }
        | Proc::Put { body, .. }
        | Proc::MSubst { body, .. } => stuck_on_prim(body),
        Proc::Fork { left, right, .. } | Proc::MCase { left, right, .. } => {
            stuck_on_prim(left) || stuck_on_prim(right)
        }
        _ => false,
    }
}
