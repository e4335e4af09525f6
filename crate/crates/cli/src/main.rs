use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

/// Inverse monoids of partial bijections, division categories and Möbius functions.
#[derive(Parser)]
#[command(name = "divcat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a monoid with rank, domain and range.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Emit a product, inverse, idempotent-order or Green table.
    Tables {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        which: Which,
        /// Reproduce the reference row/column ordering; only `3` is supported.
        #[arg(long, value_name = "N")]
        paper_layout: Option<usize>,
    },
    /// Build the reduced division category and dump objects, Hom-sets and compositions.
    Category {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        category: CategoryArgs,
        /// Extra checks, subject to the size guards (exit code 3 when exceeded).
        #[arg(long = "check", value_enum)]
        checks: Vec<CategoryCheck>,
    },
    /// Möbius function by every applicable method, side by side.
    Mobius {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        category: CategoryArgs,
        /// Work on the sequence category `C_n` instead.
        #[arg(long)]
        sequences: bool,
    },
    /// Run the invariant suites of every module.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = divcat_core::verify::VerifyConfig::default().seed)]
        seed: u64,
        /// Random incidence functions per sampled check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = divcat_core::category::DEFAULT_PUSHOUT_GUARD)]
        pushout_guard: usize,
        #[arg(long, default_value_t = divcat_core::verify::VERIFY_ISO_GUARD)]
        iso_guard: usize,
    },
}

#[derive(Args, Clone)]
pub struct Common {
    /// Size of the ground set `{1..n}`.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MonoidArg::Io)]
    pub monoid: MonoidArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Clone)]
pub struct CategoryArgs {
    /// Idempotents in bracket text, comma separated, one per D-class.
    #[arg(long)]
    pub transversal: Option<String>,
    #[arg(long, default_value_t = divcat_core::category::DEFAULT_PUSHOUT_GUARD)]
    pub pushout_guard: usize,
    #[arg(long, default_value_t = divcat_core::category::DEFAULT_ISO_GUARD)]
    pub iso_guard: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum MonoidArg {
    Io,
    Symmetric,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Which {
    Cayley,
    Inverses,
    ECayley,
    Rl,
    Order,
    Hasse,
    Green,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum CategoryCheck {
    /// Every span has a pushout.
    Pushouts,
    /// Isomorphic to the category on every other transversal.
    Transversals,
    /// Isomorphic to the sequence category `C_n`.
    Sequences,
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Enumerate { common } => commands::enumerate(&common).map(|s| (s, true)),
        Command::Tables { common, which, paper_layout } => commands::tables(&common, which, paper_layout).map(|s| (s, true)),
        Command::Category { common, category, checks } => commands::category(&common, &category, &checks),
        Command::Mobius { common, category, sequences } => commands::mobius(&common, &category, sequences),
        Command::Verify { common, seed, samples, pushout_guard, iso_guard } => {
            let cfg = divcat_core::verify::VerifyConfig { n: common.n, pushout_guard, iso_guard, seed, samples };
            commands::verify(&common, cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let (text, ok) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match output {
        Some(path) => fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
