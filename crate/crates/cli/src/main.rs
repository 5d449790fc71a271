//! `catqm`: run law suites, protocol checks, Born-rule reports, the relational
//! base search and dimension queries from the shell.
//!
//! Exit codes: 0 ok, 1 check failed, 2 unsupported in the chosen semiring,
//! 3 shape error, 4 parse error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catqm::SemiringKind;

#[derive(Debug, Parser)]
#[command(name = "catqm", version, about = "Exact checks of categorical quantum protocols")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Semiring::ComplexRootTwo)]
    semiring: Semiring,
    /// Seed for random cases and random teleportation bases.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cases per law.
    #[arg(long, global = true, default_value_t = 200)]
    count: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semiring {
    Boolean,
    ComplexRootTwo,
}

impl From<Semiring> for SemiringKind {
    fn from(s: Semiring) -> Self {
        match s {
            Semiring::Boolean => SemiringKind::Boolean,
            Semiring::ComplexRootTwo => SemiringKind::ComplexRootTwo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the randomized law suites.
    Lemmas,
    /// Compose a protocol and compare it with its specification.
    Protocol(commands::ProtocolArgs),
    /// Born-rule probabilities of a state under a measurement.
    Born(commands::BornArgs),
    /// Search all Boolean prebases for a teleportation base.
    RelSearch,
    /// Integer and scalar dimension of a shape.
    Dim {
        /// Shape expression, e.g. `Q*Q` or `(Q+I)^`.
        shape: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 4 } else { 0 });
        }
    };
    let kind = SemiringKind::from(cli.semiring);
    let result = match &cli.command {
        Command::Lemmas => commands::lemmas(kind, cli.seed, cli.count),
        Command::Protocol(args) => commands::protocol(kind, cli.seed, args),
        Command::Born(args) => commands::born(kind, args),
        Command::RelSearch => Ok(commands::rel_search()),
        Command::Dim { shape } => commands::dim(kind, shape),
    };
    let report = match result {
        Ok(report) => report,
        Err(e) => {
            eprintln!("catqm: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let rendered = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("catqm: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(if report.ok { 0 } else { 1 })
}
