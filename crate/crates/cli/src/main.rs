use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fpp_cli::ops::execute;
use fpp_cli::report::{render_structured, render_text};
use fpp_cli::{list_builtin_scenarios, load_scenario, run_all, CliError};
use toml::{Table, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "fpp",
    version,
    about = "Exact invariant computations for quotients of fake projective planes"
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Resolve a singularity such as 1/7(1,5).
    Resolve { singularity: String },
    /// Discrepancy divisors of one or more singularities.
    Adjunction {
        #[arg(required = true)]
        singularities: Vec<String>,
        /// K² of the resolution; prints the singular K² as well.
        #[arg(long, allow_hyphen_values = true)]
        resolution_k2: Option<String>,
    },
    /// Run a scenario file containing cover stanzas.
    Cover { file: String },
    /// Solve the holomorphic Lefschetz equation for isolated fixed points.
    Lefschetz {
        p: u32,
        /// Left-hand side, e.g. 1 or 5/2.
        lhs: String,
        /// Total number of isolated fixed points.
        total: u32,
        /// Fixed curve as `genus,self_square`; repeatable.
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
    },
    /// Enumerate singular-fibre configurations.
    Fibers {
        euler: u32,
        budget: u32,
        /// Chains such as "A2 x4" or "1/7(1,5)".
        chains: Vec<String>,
        /// Multisection as `deg=D,sq=S`.
        #[arg(long, allow_hyphen_values = true)]
        multisection: Option<String>,
    },
    /// Shipped and file-based scenarios.
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
}

#[derive(Debug, Subcommand)]
enum ScenarioCommand {
    /// Run scenarios by shipped name or file path.
    Run {
        #[arg(required = true)]
        scenarios: Vec<String>,
    },
    /// List shipped scenarios.
    List,
}

fn single_op(op: &str, table: Table, format: Format) -> ExitCode {
    match execute(op, &table, &BTreeMap::new()) {
        Ok(out) => {
            match format {
                Format::Text => {
                    for (k, v) in &out.fields {
                        println!("{k} = {v}");
                    }
                }
                Format::Structured => print!("{}", render_structured(&out.fields)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error [{}]: {e}", e.kind());
            ExitCode::from(2)
        }
    }
}

fn run_scenarios(names: &[String], format: Format) -> ExitCode {
    let scenarios: Result<Vec<_>, CliError> = names.iter().map(|n| load_scenario(n)).collect();
    let scenarios = match scenarios {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let reports = run_all(&scenarios);
    match format {
        Format::Text => {
            let texts: Vec<String> = reports.iter().map(render_text).collect();
            print!("{}", texts.join("\n"));
        }
        Format::Structured => match reports.as_slice() {
            [one] => print!("{}", render_structured(one)),
            many => print!("{}", render_structured(&many)),
        },
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn strings(items: &[String]) -> Value {
    Value::Array(items.iter().cloned().map(Value::String).collect())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut t = Table::new();
    match cli.command {
        Command::Resolve { singularity } => {
            t.insert("singularity".into(), Value::String(singularity));
            single_op("resolve", t, cli.format)
        }
        Command::Adjunction {
            singularities,
            resolution_k2,
        } => {
            t.insert("singularities".into(), strings(&singularities));
            if let Some(k2) = resolution_k2 {
                t.insert("resolution_k2".into(), Value::String(k2));
            }
            single_op("adjunction", t, cli.format)
        }
        Command::Cover { file } => run_scenarios(&[file], cli.format),
        Command::Lefschetz {
            p,
            lhs,
            total,
            curves,
        } => {
            t.insert("p".into(), Value::Integer(p.into()));
            t.insert("lhs".into(), Value::String(lhs));
            t.insert("total".into(), Value::Integer(total.into()));
            t.insert("curves".into(), strings(&curves));
            single_op("lefschetz", t, cli.format)
        }
        Command::Fibers {
            euler,
            budget,
            chains,
            multisection,
        } => {
            t.insert("euler".into(), Value::Integer(euler.into()));
            t.insert("budget".into(), Value::Integer(budget.into()));
            t.insert("chains".into(), strings(&chains));
            if let Some(m) = multisection {
                t.insert("multisection".into(), Value::String(m));
            }
            single_op("fibers", t, cli.format)
        }
        Command::Scenario { command } => match command {
            ScenarioCommand::Run { scenarios } => run_scenarios(&scenarios, cli.format),
            ScenarioCommand::List => {
                for name in list_builtin_scenarios() {
                    println!("{name}");
                }
                ExitCode::SUCCESS
            }
        },
    }
}
